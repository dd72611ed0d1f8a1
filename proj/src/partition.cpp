#include "slnchar/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "slnchar/errors.hpp"

namespace slnchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    require(parts_[i] > 0, "partition parts must be positive");
    require(i == 0 || parts_[i] <= parts_[i - 1], "partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::sorted(std::vector<int> parts) {
  std::erase_if(parts, [](int x) { return x == 0; });
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& s) {
  std::vector<int> v;
  std::string tok;
  for (char ch : s + ",") {
    if (ch == ',' || ch == ' ' || ch == '(' || ch == ')') {
      if (!tok.empty()) {
        try {
          v.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw InvalidArgument("bad partition: " + s);
        }
        tok.clear();
      }
    } else {
      tok += ch;
    }
  }
  return Partition(v);
}

Partition Partition::dual() const {
  std::vector<int> d;
  if (!parts_.empty()) {
    d.assign(parts_[0], 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++d[j];
  }
  return Partition(d);
}

int Partition::n_invariant() const {
  int s = 0;
  for (int i = 0; i < length(); ++i) s += i * parts_[i];
  return s;
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(size_ + 1, 0);
  for (int p : parts_) ++m[p];
  return m;
}

std::uint64_t Partition::z_order() const {
  std::uint64_t z = 1;
  auto m = multiplicities();
  for (int k = 1; k <= size_; ++k) {
    for (int j = 0; j < m[k]; ++j) z *= k;
    z *= factorial(m[k]);
  }
  return z;
}

Partition Partition::scaled(int d) const {
  std::vector<int> v = parts_;
  for (int& x : v) x *= d;
  return Partition(v);
}

Partition Partition::divided(int d) const {
  require(all_divisible_by(d), "partition not divisible");
  std::vector<int> v = parts_;
  for (int& x : v) x /= d;
  return Partition(v);
}

Partition Partition::repeated(int k) const {
  std::vector<int> v;
  for (int x : parts_)
    for (int j = 0; j < k; ++j) v.push_back(x);
  return Partition(v);
}

bool Partition::all_divisible_by(int d) const {
  return std::all_of(parts_.begin(), parts_.end(), [d](int x) { return x % d == 0; });
}

int Partition::gcd_parts() const {
  int g = 0;
  for (int x : parts_) g = std::gcd(g, x);
  return g;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < length(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

Partition merge(const Multipartition& beta) {
  std::vector<int> v;
  for (const auto& b : beta) v.insert(v.end(), b.parts().begin(), b.parts().end());
  return Partition::sorted(v);
}

Partition merge(const Partition& a, const Partition& b) { return merge(Multipartition{a, b}); }

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return false;
  int sl = 0, sm = 0;
  int len = std::max(lambda.length(), mu.length());
  for (int i = 0; i < len; ++i) {
    sl += lambda[i];
    sm += mu[i];
    if (sl < sm) return false;
  }
  return true;
}

namespace {
void gen_partitions(int rem, int maxp, std::vector<int>& cur, std::vector<Partition>& out) {
  if (rem == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(rem, maxp); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(rem - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n == 0)
    out.emplace_back();
  else
    gen_partitions(n, n, cur, out);
  return cache.emplace(n, std::move(out)).first->second;
}

std::uint64_t partition_count(int n) {
  std::vector<std::uint64_t> p(n + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int m = k; m <= n; ++m) p[m] += p[m - k];
  return p[n];
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }
long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }
long long mod_floor(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

int prime_to_part(int n, int p) {
  while (n % p == 0) n /= p;
  return n;
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long i = 2; i * i <= p; ++i)
    if (p % i == 0) return false;
  return true;
}

int prime_power_exponent(long long q, long long p) {
  if (!is_prime(p) || q < p) return 0;
  int k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  return q == 1 ? k : 0;
}

}  // namespace slnchar
