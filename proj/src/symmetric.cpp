#include "slnchar/symmetric.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "slnchar/errors.hpp"

namespace slnchar {

Partition cycle_type(const Permutation& w) {
  std::vector<int> seen(w.size(), 0), parts;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = w[j]) {
      seen[j] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  return Partition::sorted(parts);
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

std::vector<Permutation> all_permutations(int m) {
  Permutation p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation permutation_of_type(const Partition& rho) {
  Permutation p(rho.size());
  int pos = 0;
  for (int len : rho.parts()) {
    for (int i = 0; i < len; ++i) p[pos + i] = pos + (i + 1) % len;
    pos += len;
  }
  return p;
}

namespace {

// β-set of λ with exactly len beads
std::vector<int> beta_set(const Partition& lambda, int len) {
  std::vector<int> b(len);
  for (int i = 0; i < len; ++i) b[i] = lambda[i] + (len - 1 - i);
  return b;  // strictly decreasing
}

Partition from_beta(std::vector<int> b) {
  std::sort(b.begin(), b.end(), std::greater<>());
  int len = static_cast<int>(b.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) parts.push_back(b[i] - (len - 1 - i));
  return Partition::sorted(parts);
}

long long mn_rec(const Partition& lambda, const std::vector<int>& rho, std::size_t pos,
                 std::map<std::pair<Partition, std::size_t>, long long>& memo) {
  if (pos == rho.size()) return lambda.size() == 0 ? 1 : 0;
  auto key = std::make_pair(lambda, pos);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int r = rho[pos];
  int len = lambda.length();
  auto b = beta_set(lambda, len);
  long long total = 0;
  for (int i = 0; i < len; ++i) {
    int target = b[i] - r;
    if (target < 0) continue;
    if (std::find(b.begin(), b.end(), target) != b.end()) continue;
    // sign: beads strictly between target and b[i]
    int between = 0;
    for (int x : b)
      if (x > target && x < b[i]) ++between;
    auto nb = b;
    nb[i] = target;
    long long v = mn_rec(from_beta(nb), rho, pos + 1, memo);
    total += (between % 2 ? -v : v);
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

long long sn_char_value(const Partition& lambda, const Partition& rho) {
  require(lambda.size() == rho.size(), "sn_char_value: size mismatch");
  static std::mutex mu;
  static std::map<std::pair<Partition, Partition>, long long> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({lambda, rho});
    if (it != cache.end()) return it->second;
  }
  std::map<std::pair<Partition, std::size_t>, long long> memo;
  long long v = mn_rec(lambda, rho.parts(), 0, memo);
  std::lock_guard lock(mu);
  cache.emplace(std::make_pair(lambda, rho), v);
  return v;
}

long long sn_char_value(const SnCharLabel& E, const Partition& rho) { return sn_char_value(E.partition, rho); }

namespace {
void restriction_rec(const SnCharLabel& E, const std::vector<SnCharLabel>& f, std::size_t i,
                     std::vector<int>& acc, Rational weight, long long prod, Rational& sum) {
  if (i == f.size()) {
    sum += weight * to_rational(prod * sn_char_value(E.partition, Partition::sorted(acc)));
    return;
  }
  if (f[i].n == 0) {
    restriction_rec(E, f, i + 1, acc, weight, prod, sum);
    return;
  }
  for (const auto& rho : partitions_of(f[i].n)) {
    long long v = sn_char_value(f[i].partition, rho);
    if (v == 0) continue;
    std::size_t old = acc.size();
    acc.insert(acc.end(), rho.parts().begin(), rho.parts().end());
    restriction_rec(E, f, i + 1, acc, weight / Rational(static_cast<long>(rho.z_order())), prod * v, sum);
    acc.resize(old);
  }
}
}  // namespace

long long restriction_multiplicity(const SnCharLabel& E, const std::vector<SnCharLabel>& factors) {
  int total = 0;
  for (const auto& f : factors) total += f.n;
  require(total == E.n, "restriction_multiplicity: size mismatch");
  Rational sum(0);
  std::vector<int> acc;
  restriction_rec(E, factors, 0, acc, Rational(1), 1, sum);
  require(sum.get_den() == 1, "restriction multiplicity not integral");
  return sum.get_num().get_si();
}

CycLaurent extended_char_value(const ExtendedCharLabel& E, int j, const std::vector<Permutation>& w) {
  int k = E.k, m = E.base.n;
  require(static_cast<int>(w.size()) == k, "extended_char_value: wrong number of factors");
  for (const auto& x : w) require(static_cast<int>(x.size()) == m, "extended_char_value: factor size mismatch");
  j = static_cast<int>(mod_floor(j, k));
  std::vector<int> seen(k, 0);
  long long value = 1;
  for (int s = 0; s < k; ++s) {
    if (seen[s]) continue;
    Permutation prod(m);
    std::iota(prod.begin(), prod.end(), 0);
    for (int i = s; !seen[i]; i = (i + j) % k) {
      seen[i] = 1;
      prod = compose(w[i], prod);
    }
    value *= sn_char_value(E.base.partition, cycle_type(prod));
  }
  return CycLaurent(to_rational(value)) * CycLaurent::root_of_unity(k, static_cast<long long>(E.twist) * j);
}

void UnitSum::add(long long exponent, const Rational& coeff) { c_[mod_floor(exponent, L_)] += coeff; }

}  // namespace slnchar
