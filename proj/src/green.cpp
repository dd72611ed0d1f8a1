#include "slnchar/green.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "slnchar/errors.hpp"
#include "slnchar/orbits.hpp"
#include "slnchar/symmetric.hpp"

namespace slnchar::green {

using springer::Block;
using springer::PairLabel;

IntPolynomial trim(IntPolynomial p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

long long poly_eval(const IntPolynomial& p, long long t) {
  long long v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * t + *it;
  return v;
}

namespace {

// fill letters 1..k in horizontal strips
void strips(const Partition& lambda, const std::vector<int>& content, std::size_t letter, std::vector<int>& shape,
            std::vector<std::vector<int>>& rows, std::vector<std::vector<std::vector<int>>>& out) {
  if (letter == content.size()) {
    out.push_back(rows);
    return;
  }
  int need = content[letter];
  int L = lambda.length();
  // choose how many cells to add in each row, bounded by the row above's old length
  std::vector<int> add(L, 0);
  auto rec = [&](auto&& self, int r, int left) -> void {
    if (r == L) {
      if (left != 0) return;
      for (int i = 0; i < L; ++i) {
        for (int c = 0; c < add[i]; ++c) rows[i].push_back(static_cast<int>(letter) + 1);
        shape[i] += add[i];
      }
      strips(lambda, content, letter + 1, shape, rows, out);
      for (int i = 0; i < L; ++i) {
        shape[i] -= add[i];
        rows[i].resize(shape[i]);
      }
      return;
    }
    int cap = lambda[r] - shape[r];
    if (r > 0) cap = std::min(cap, shape[r - 1] - shape[r]);
    for (int a = std::min(cap, left); a >= 0; --a) {
      add[r] = a;
      self(self, r + 1, left - a);
    }
    add[r] = 0;
  };
  rec(rec, 0, need);
}

}  // namespace

std::vector<std::vector<std::vector<int>>> ssyt(const Partition& lambda, const Partition& mu) {
  require(lambda.size() == mu.size(), "partitions of different sizes");
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> shape(lambda.length(), 0);
  std::vector<std::vector<int>> rows(lambda.length());
  strips(lambda, mu.parts(), 0, shape, rows, out);
  return out;
}

int charge(const std::vector<int>& word) {
  std::vector<int> w = word;
  int total = 0;
  while (!w.empty()) {
    int m = *std::max_element(w.begin(), w.end());
    std::vector<bool> take(w.size(), false);
    int pos = static_cast<int>(w.size());
    int index = 0;
    for (int letter = 1; letter <= m; ++letter) {
      int found = -1;
      for (int i = pos - 1; i >= 0; --i)
        if (!take[i] && w[i] == letter) {
          found = i;
          break;
        }
      if (found < 0) {
        if (letter > 1) ++index;
        for (int i = static_cast<int>(w.size()) - 1; i >= pos; --i)
          if (!take[i] && w[i] == letter) {
            found = i;
            break;
          }
      }
      require(found >= 0, "charge needs partition content");
      take[found] = true;
      total += index;
      pos = found;
    }
    std::vector<int> rest;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!take[i]) rest.push_back(w[i]);
    w.swap(rest);
  }
  return total;
}

IntPolynomial kostka(const Partition& lambda, const Partition& mu) {
  require(lambda.size() == mu.size(), "partitions of different sizes");
  static std::mutex mtx;
  static std::map<std::pair<Partition, Partition>, IntPolynomial> cache;
  {
    std::lock_guard lk(mtx);
    auto it = cache.find({lambda, mu});
    if (it != cache.end()) return it->second;
  }
  IntPolynomial k;
  if (dominates(lambda, mu)) {
    for (const auto& T : ssyt(lambda, mu)) {
      std::vector<int> word;
      for (auto r = T.rbegin(); r != T.rend(); ++r) word.insert(word.end(), r->begin(), r->end());
      int c = charge(word);
      if (static_cast<int>(k.size()) <= c) k.resize(c + 1, 0);
      ++k[c];
    }
  }
  k = trim(k);
  std::lock_guard lk(mtx);
  cache[{lambda, mu}] = k;
  return k;
}

IntPolynomial p_polynomial(const PairLabel& iota2, const PairLabel& iota1, const Block& b) {
  require(springer::in_block(b, iota2) && springer::in_block(b, iota1), "labels from different blocks");
  return kostka(iota1.orbit.divided(b.d), iota2.orbit.divided(b.d));
}

IntPolynomial bp_polynomial(const PairLabel& iota2, const PairLabel& iota1, const Block& b) {
  IntPolynomial k = p_polynomial(iota2, iota1, b);
  if (k.empty()) return k;
  int D = orbits::orbit_dims(iota1.orbit).dim_orbit - orbits::orbit_dims(iota2.orbit).dim_orbit;
  require(D % 2 == 0 && D / 2 + 1 >= static_cast<int>(k.size()), "rescaled polynomial is not a polynomial");
  IntPolynomial bp(D / 2 + 1, 0);
  for (std::size_t i = 0; i < k.size(); ++i) bp[D / 2 - i] = k[i];
  return trim(bp);
}

namespace {
CycLaurent q_power_minus_one(int k) {
  std::vector<long long> c(k + 1, 0);
  c[0] = -1;
  c[k] = 1;
  return CycLaurent::from_q_poly(c);
}
}  // namespace

CycLaurent torus_order(const Partition& rho) {
  CycLaurent num(1);
  for (int r : rho.parts()) num *= q_power_minus_one(r);
  return num.divide_exact(q_power_minus_one(1));
}

CycLaurent group_order(int n) {
  require(n >= 1, "n must be positive");
  CycLaurent g = CycLaurent::u_power(n * (n - 1));
  for (int i = 2; i <= n; ++i) g *= q_power_minus_one(i);
  return g;
}

CycLaurent omega(const PairLabel& a, const PairLabel& b, const Block& blk) {
  require(springer::in_block(blk, a), "label not in block");
  if (!springer::in_block(blk, b)) return CycLaurent();
  int k = blk.rank();
  Partition la = a.orbit.divided(blk.d), lb = b.orbit.divided(blk.d);
  CycLaurent G = group_order(blk.n), sum;
  for (const auto& rho : partitions_of(k)) {
    long long chi = sn_char_value(la, rho) * sn_char_value(lb, rho);
    if (chi == 0) continue;
    Rational coeff = to_rational(chi) / to_rational(static_cast<long long>(rho.z_order()));
    sum += G.divide_exact(torus_order(rho)) * CycLaurent(coeff);
  }
  int e = -(orbits::orbit_dims(a.orbit).codim + orbits::orbit_dims(b.orbit).codim) + 2 * (k - 1);
  return sum.shifted(e);
}

LaurentFraction x_inner(const PairLabel& a, const PairLabel& b, const Block& blk) {
  return LaurentFraction(omega(a, b, blk), group_order(blk.n));
}

}  // namespace slnchar::green
