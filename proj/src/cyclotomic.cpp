#include "slnchar/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "slnchar/errors.hpp"
#include "slnchar/partition.hpp"

namespace slnchar {

const std::vector<long long>& cyclotomic_polynomial(int N) {
  static std::recursive_mutex mu;
  static std::map<int, std::vector<long long>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  // x^N - 1 divided by Φ_d for proper divisors d
  std::vector<long long> num(N + 1, 0);
  num[0] = -1;
  num[N] = 1;
  for (int d = 1; d < N; ++d) {
    if (N % d) continue;
    std::vector<long long> phi = cyclotomic_polynomial(d);
    int dn = static_cast<int>(num.size()) - 1, dp = static_cast<int>(phi.size()) - 1;
    std::vector<long long> quo(dn - dp + 1, 0);
    for (int i = dn; i >= dp; --i) {
      long long c = num[i];
      quo[i - dp] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dp; ++j) num[i - dp + j] -= c * phi[j];
    }
    num = quo;
  }
  return cache.emplace(N, std::move(num)).first->second;
}

namespace {

std::vector<Rational> reduce_mod_phi(int N, std::vector<Rational> c) {
  // first fold exponents mod N
  if (static_cast<int>(c.size()) > N) {
    for (std::size_t i = N; i < c.size(); ++i) c[i % N] += c[i];
    c.resize(N);
  }
  const auto& phi = cyclotomic_polynomial(N);
  int dp = static_cast<int>(phi.size()) - 1;
  for (int i = static_cast<int>(c.size()) - 1; i >= dp; --i) {
    if (sgn(c[i]) == 0) continue;
    Rational k = c[i];
    for (int j = 0; j <= dp; ++j) c[i - dp + j] -= k * to_rational(phi[j]);
  }
  c.resize(dp, Rational(0));
  return c;
}

}  // namespace

Cyclotomic::Cyclotomic(const Rational& r) : n_(1), c_{r} {}

Cyclotomic Cyclotomic::from_powers(int N, const std::vector<Rational>& c) {
  require(N >= 1, "conductor must be positive");
  Cyclotomic x;
  x.n_ = N;
  x.c_ = reduce_mod_phi(N, c);
  return x;
}

Cyclotomic Cyclotomic::root_of_unity(int N, long long k) {
  std::vector<Rational> c(N, Rational(0));
  c[mod_floor(k, N)] = 1;
  return from_powers(N, c);
}

Cyclotomic Cyclotomic::lifted(int M) const {
  if (M == n_) return *this;
  require(M % n_ == 0, "lift target must be a multiple of the conductor");
  // ζ_N = ζ_M^{M/N}; expand c_ in powers of ζ_N then re-reduce
  std::vector<Rational> c(M, Rational(0));
  int s = M / n_;
  for (std::size_t i = 0; i < c_.size(); ++i) c[i * s] = c_[i];
  return from_powers(M, c);
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  require(is_rational(), "value is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

bool Cyclotomic::is_integral() const {
  for (const auto& x : c_)
    if (x.get_den() != 1) return false;
  return true;
}

Cyclotomic Cyclotomic::normalized() const {
  if (is_rational()) return Cyclotomic(c_.empty() ? Rational(0) : c_[0]);
  return *this;
}

Cyclotomic Cyclotomic::galois(long long k) const {
  require(std::gcd(static_cast<long long>(n_), k) == 1 || n_ == 1, "galois exponent must be a unit");
  std::vector<Rational> c(n_, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[mod_floor(static_cast<long long>(i) * k, n_)] += c_[i];
  return from_powers(n_, c);
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Rational Cyclotomic::norm() const {
  Cyclotomic p = *this;
  for (int k = 2; k < n_; ++k)
    if (std::gcd(k, n_) == 1) p *= galois(k);
  return p.rational_value();
}

Cyclotomic Cyclotomic::inverse() const {
  require(!is_zero(), "division by zero");
  Cyclotomic others(1);
  for (int k = 2; k < n_; ++k)
    if (std::gcd(k, n_) == 1) others *= galois(k);
  Rational nm = (others * *this).rational_value();
  Cyclotomic r = others;
  for (auto& x : r.c_) x /= nm;
  return r;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / n_;
    s += c_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str();
    if (i > 0) os << "*z" << n_ << "^" << i;
  }
  return first ? "0" : os.str();
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  int M = static_cast<int>(lcm_ll(n_, o.n_));
  Cyclotomic a = lifted(M), b = o.lifted(M);
  for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return *this = a;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  int M = static_cast<int>(lcm_ll(n_, o.n_));
  Cyclotomic a = lifted(M), b = o.lifted(M);
  std::vector<Rational> c(a.c_.size() + b.c_.size(), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return *this = from_powers(M, c);
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  int M = static_cast<int>(lcm_ll(a.n_, b.n_));
  return a.lifted(M).c_ == b.lifted(M).c_;
}

}  // namespace slnchar
