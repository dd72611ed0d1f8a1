#include "slnchar/fforacle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "slnchar/errors.hpp"

namespace slnchar::fforacle {

namespace {

// Conway polynomials, coefficients lowest degree first (monic).
const std::map<std::pair<int, int>, std::vector<int>>& conway_table() {
  static const std::map<std::pair<int, int>, std::vector<int>> t = {
      {{2, 2}, {1, 1, 1}},          {{2, 3}, {1, 1, 0, 1}},          {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}}, {{2, 6}, {1, 1, 0, 1, 1, 0, 1}}, {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},       {{5, 2}, {2, 4, 1}},             {{7, 2}, {3, 6, 1}},
  };
  return t;
}

}  // namespace

Field::Field(int q) : q_(q) {
  p_ = 0;
  for (int p = 2; p <= q; ++p) {
    if (is_prime(p) && prime_power_exponent(q, p) > 0) {
      p_ = p;
      break;
    }
  }
  require(p_ != 0 && q <= 64, "field size must be a prime power ≤ 64");
  k_ = prime_power_exponent(q, p_);
  if (k_ == 1) {
    conway_ = {0, 1};
  } else {
    auto it = conway_table().find({p_, k_});
    require(it != conway_table().end(), "no Conway polynomial for q");
    conway_ = it->second;
  }
  auto digits = [&](int a) {
    std::vector<int> d(k_);
    for (int i = 0; i < k_; ++i, a /= p_) d[i] = a % p_;
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int a = 0;
    for (int i = k_ - 1; i >= 0; --i) a = a * p_ + d[i];
    return a;
  };
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    auto da = digits(a);
    std::vector<int> dn(k_);
    for (int i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<std::uint8_t>(encode(dn));
    for (int b = 0; b < q; ++b) {
      auto db = digits(b);
      std::vector<int> s(k_);
      for (int i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = static_cast<std::uint8_t>(encode(s));
      std::vector<int> pr(2 * k_, 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) pr[i + j] = (pr[i + j] + da[i] * db[j]) % p_;
      if (k_ > 1) {
        for (int i = 2 * k_ - 1; i >= k_; --i) {
          int c = pr[i];
          if (!c) continue;
          for (int j = 0; j <= k_; ++j) pr[i - k_ + j] = ((pr[i - k_ + j] - c * conway_[j]) % p_ + p_) % p_;
        }
      }
      pr.resize(k_);
      mul_[a * q + b] = static_cast<std::uint8_t>(encode(pr));
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
  // primitive element: x for k > 1, smallest primitive root otherwise
  auto order = [&](int a) {
    int o = 1;
    for (int x = a; x != 1; x = mul(x, a)) ++o;
    return o;
  };
  int cand = k_ > 1 ? p_ : 2;
  if (q == 2) cand = 1;
  if (order(cand) != q - 1) {
    for (cand = 1; cand < q; ++cand)
      if (order(cand) == q - 1) break;
  }
  gen_ = cand;
}

std::shared_ptr<const Field> Field::get(int q) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const Field>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  std::shared_ptr<const Field> f(new Field(q));
  cache.emplace(q, f);
  return f;
}

int Field::inv(int a) const {
  require(a != 0, "inverse of zero");
  return inv_[a];
}

int Field::pow(int a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

int Field::from_int(long long v) const { return static_cast<int>(mod_floor(v, p_)); }

Matrix Matrix::identity(int n, const Field&) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix mat_mul(const Field& F, const Matrix& x, const Matrix& y) {
  int n = x.n;
  Matrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int a = x.a[i * n + k];
      if (!a) continue;
      for (int j = 0; j < n; ++j) r.a[i * n + j] = F.add(r.a[i * n + j], F.mul(a, y.a[k * n + j]));
    }
  return r;
}

Matrix mat_add(const Field& F, const Matrix& x, const Matrix& y) {
  Matrix r(x.n);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = F.add(x.a[i], y.a[i]);
  return r;
}

Matrix mat_scale(const Field& F, int s, const Matrix& x) {
  Matrix r(x.n);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = F.mul(s, x.a[i]);
  return r;
}

namespace {
// row echelon in place; returns (rank, det-factor of the square part)
int echelon(const Field& F, std::vector<std::vector<int>>& m, int cols, int* det_out = nullptr) {
  int rows = static_cast<int>(m.size());
  int r = 0, det = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) {
      det = 0;
      continue;
    }
    if (piv != r) {
      std::swap(m[piv], m[r]);
      det = F.neg(det);
    }
    det = F.mul(det, m[r][c]);
    int iv = F.inv(m[r][c]);
    int width = static_cast<int>(m[r].size());
    for (int j = 0; j < width; ++j) m[r][j] = F.mul(m[r][j], iv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || !m[i][c]) continue;
      int f = m[i][c];
      for (int j = 0; j < width; ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[r][j]));
    }
    ++r;
  }
  if (det_out) *det_out = (r == cols) ? det : 0;
  return r;
}

std::vector<std::vector<int>> rows_of(const Matrix& x) {
  std::vector<std::vector<int>> m(x.n, std::vector<int>(x.n));
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) m[i][j] = x.at(i, j);
  return m;
}
}  // namespace

int mat_det(const Field& F, const Matrix& x) {
  if (x.n == 2) return F.sub(F.mul(x.a[0], x.a[3]), F.mul(x.a[1], x.a[2]));
  auto m = rows_of(x);
  int det = 0;
  echelon(F, m, x.n, &det);
  return det;
}

int mat_rank(const Field& F, const Matrix& x) {
  auto m = rows_of(x);
  return echelon(F, m, x.n);
}

Matrix mat_inverse(const Field& F, const Matrix& x) {
  int n = x.n;
  std::vector<std::vector<int>> m(n, std::vector<int>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = x.at(i, j);
    m[i][n + i] = 1;
  }
  int r = echelon(F, m, n);
  require(r == n, "matrix not invertible");
  Matrix inv(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = m[i][n + j];
  return inv;
}

Partition unipotent_type(const Field& F, const Matrix& g) {
  int n = g.n;
  Matrix x = g;
  for (int i = 0; i < n; ++i) x.at(i, i) = F.sub(x.at(i, i), 1);
  std::vector<int> ranks{n};
  Matrix pw = Matrix::identity(n, F);
  for (int k = 1; k <= n; ++k) {
    pw = mat_mul(F, pw, x);
    ranks.push_back(mat_rank(F, pw));
  }
  if (ranks[n] != 0) return {};
  // blocks of size ≥ k: ranks[k-1] - ranks[k]
  std::vector<int> ge(n + 2, 0), parts;
  for (int k = 1; k <= n; ++k) ge[k] = ranks[k - 1] - ranks[k];
  for (int k = 1; k <= n; ++k)
    for (int c = 0; c < ge[k] - ge[k + 1]; ++c) parts.push_back(k);
  return Partition::sorted(parts);
}

std::vector<std::vector<int>> nullspace(const Field& F, std::vector<std::vector<int>> rows, int cols) {
  int r = echelon(F, rows, cols);
  std::vector<int> pivcol;
  for (int i = 0; i < r; ++i) {
    int c = 0;
    while (c < cols && rows[i][c] == 0) ++c;
    pivcol.push_back(c);
  }
  std::vector<std::vector<int>> basis;
  for (int free = 0; free < cols; ++free) {
    if (std::find(pivcol.begin(), pivcol.end(), free) != pivcol.end()) continue;
    std::vector<int> v(cols, 0);
    v[free] = 1;
    for (int i = 0; i < r; ++i) v[pivcol[i]] = F.neg(rows[i][free]);
    basis.push_back(v);
  }
  return basis;
}

std::uint64_t sl_order(int n, long long q) {
  long double ord = 1;
  std::uint64_t o = 1;
  for (int i = 0; i < n * (n - 1) / 2; ++i) o *= q, ord *= q;
  for (int i = 2; i <= n; ++i) {
    std::uint64_t qi = 1;
    for (int j = 0; j < i; ++j) qi *= q;
    o *= (qi - 1);
    ord *= static_cast<long double>(qi - 1);
  }
  if (ord > 1e18L) return UINT64_MAX;
  return o;
}

GroupEnumeration::GroupEnumeration(int n, int q, std::uint64_t cap) : n_(n), F_(Field::get(q)) {
  require(n >= 1 && n <= 4, "oracle supports 1 ≤ n ≤ 4");
  std::uint64_t ord = sl_order(n, q);
  if (ord > cap) throw CapExceeded("|SL_" + std::to_string(n) + "(F_" + std::to_string(q) + ")| exceeds cap");
  const Field& F = *F_;
  elems_.reserve(ord);
  Matrix m(n);
  int N2 = n * n;
  while (true) {
    if (mat_det(F, m) == 1) elems_.push_back(m);
    int pos = N2 - 1;
    while (pos >= 0 && m.a[pos] == q - 1) m.a[pos--] = 0;
    if (pos < 0) break;
    ++m.a[pos];
  }
  inv_.reserve(elems_.size());
  for (const auto& g : elems_) inv_.push_back(mat_inverse(F, g));
}

std::size_t GroupEnumeration::index_of(const Matrix& m) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), m);
  require(it != elems_.end() && *it == m, "matrix not in group");
  return static_cast<std::size_t>(it - elems_.begin());
}

ClassCensus conjugacy_classes(int n, int q, std::uint64_t cap) {
  GroupEnumeration G(n, q, cap);
  const Field& F = G.field();
  ClassCensus census{n, q, G.size(), {}};
  std::vector<char> done(G.size(), 0);
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (done[i]) continue;
    const Matrix& g = G[i];
    std::uint64_t size = 0, cent = 0;
    for (std::size_t h = 0; h < G.size(); ++h) {
      Matrix x = mat_mul(F, mat_mul(F, G[h], g), G.inverse(h));
      if (x == g) ++cent;
      std::size_t j = G.index_of(x);
      if (!done[j]) {
        done[j] = 1;
        ++size;
      }
    }
    census.classes.push_back({g, size, cent});
  }
  return census;
}

Matrix jordan_nilpotent(const Field&, const Partition& mu) {
  Matrix N(mu.size());
  int pos = 0;
  for (int m : mu.parts()) {
    for (int j = 1; j < m; ++j) N.at(pos + j - 1, pos + j) = 1;
    pos += m;
  }
  return N;
}

namespace {

std::vector<std::vector<int>> intertwiner_equations(const Field& F, const Matrix& A, const Matrix& B) {
  // X A = B X  ⇔  Σ_k X_ik A_kj − Σ_k B_ik X_kj = 0
  int n = A.n;
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> r(n * n, 0);
      for (int k = 0; k < n; ++k) {
        r[i * n + k] = F.add(r[i * n + k], A.at(k, j));
        r[k * n + j] = F.sub(r[k * n + j], B.at(i, k));
      }
      rows.push_back(r);
    }
  return rows;
}

// visit every element of span(basis); stops when visitor returns true
template <class Fn>
bool for_each_combination(const Field& F, const std::vector<std::vector<int>>& basis, int n, std::uint64_t cap, Fn fn) {
  long double total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) total *= F.q();
  if (total > static_cast<long double>(cap)) throw CapExceeded("solution space exceeds cap");
  std::vector<int> coef(basis.size(), 0);
  while (true) {
    Matrix X(n);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (!coef[b]) continue;
      for (int e = 0; e < n * n; ++e) X.a[e] = F.add(X.a[e], F.mul(coef[b], basis[b][e]));
    }
    if (fn(X)) return true;
    std::size_t pos = 0;
    while (pos < coef.size() && coef[pos] == F.q() - 1) coef[pos++] = 0;
    if (pos == coef.size()) return false;
    ++coef[pos];
  }
}

}  // namespace

std::uint64_t unipotent_centralizer_order(int n, int q, const Partition& mu, std::uint64_t cap) {
  require(mu.size() == n, "partition must have size n");
  auto F = Field::get(q);
  Matrix U = jordan_nilpotent(*F, mu);
  for (int i = 0; i < n; ++i) U.at(i, i) = 1;
  auto basis = nullspace(*F, intertwiner_equations(*F, U, U), n * n);
  std::uint64_t count = 0;
  for_each_combination(*F, basis, n, cap, [&](const Matrix& X) {
    if (mat_det(*F, X) == 1) ++count;
    return false;
  });
  return count;
}

Matrix twisted_nilpotent(const Field& F, const Partition& mu, int c) {
  int n = mu.size();
  int ppart = n / prime_to_part(n, F.p());
  int gamma = F.pow(F.generator(), -static_cast<long long>(c) * ppart);
  Matrix h = Matrix::identity(n, F);
  h.at(n - 1, n - 1) = gamma;
  Matrix N = jordan_nilpotent(F, mu);
  return mat_mul(F, mat_mul(F, h, N), mat_inverse(F, h));
}

TwistResult solve_twist_c0(int n, int q, const Partition& mu, std::uint64_t cap) {
  require(mu.size() == n, "partition must have size n");
  auto Fp = Field::get(q);
  const Field& F = *Fp;
  require(F.p() > n, "solve_twist_c0 requires p > n for the standard TDS");
  TwistResult res;
  res.assumption = "p > n (standard sl2-triple exists)";
  res.N = jordan_nilpotent(F, mu);
  res.N_star = Matrix(n);
  int pos = 0;
  for (int m : mu.parts()) {
    for (int i = 1; i < m; ++i) res.N_star.at(pos + i, pos + i - 1) = F.from_int(static_cast<long long>(i) * (m - i));
    pos += m;
  }
  Matrix target = mat_scale(F, F.neg(1), res.N_star);
  int nmu = std::gcd(prime_to_part(n, F.p()), mu.gcd_parts());
  res.coinvariant_order = std::gcd(nmu, q - 1);
  for (int c = 0; c < res.coinvariant_order; ++c) {
    Matrix Nc = twisted_nilpotent(F, mu, c);
    auto basis = nullspace(F, intertwiner_equations(F, Nc, target), n * n);
    Matrix found;
    bool ok = for_each_combination(F, basis, n, cap, [&](const Matrix& X) {
      if (mat_det(F, X) != 1) return false;
      found = X;
      return true;
    });
    if (ok) {
      res.c0 = c;
      res.conjugator = found;
      res.N_c0 = Nc;
      return res;
    }
  }
  throw NoSolution("no SL_n(F_q) conjugator found for −N*");
}

}  // namespace slnchar::fforacle
