#include "slnchar/laurent.hpp"

#include <cmath>
#include <sstream>

#include "slnchar/errors.hpp"
#include "slnchar/partition.hpp"

namespace slnchar {

CycLaurent::CycLaurent(const Cyclotomic& c) { add_term(0, c); }

void CycLaurent::add_term(int k, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, c.normalized());
    return;
  }
  it->second += c;
  if (it->second.is_zero())
    t_.erase(it);
  else
    it->second = it->second.normalized();
}

CycLaurent CycLaurent::u_power(int k, const Cyclotomic& c) {
  CycLaurent r;
  r.add_term(k, c);
  return r;
}

CycLaurent CycLaurent::from_q_poly(const std::vector<long long>& c) {
  CycLaurent r;
  for (std::size_t i = 0; i < c.size(); ++i) r.add_term(2 * static_cast<int>(i), Cyclotomic(to_rational(c[i])));
  return r;
}

int CycLaurent::conductor() const {
  long long n = 1;
  for (const auto& [k, c] : t_) n = lcm_ll(n, c.conductor());
  return static_cast<int>(n);
}

int CycLaurent::min_power() const { return t_.empty() ? 0 : t_.begin()->first; }
int CycLaurent::max_power() const { return t_.empty() ? 0 : t_.rbegin()->first; }

Cyclotomic CycLaurent::coeff(int k) const {
  auto it = t_.find(k);
  return it == t_.end() ? Cyclotomic(0) : it->second;
}

bool CycLaurent::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0); }

bool CycLaurent::has_rational_coeffs() const {
  for (const auto& [k, c] : t_)
    if (!c.is_rational()) return false;
  return true;
}

CycLaurent CycLaurent::conj() const {
  CycLaurent r;
  for (const auto& [k, c] : t_) r.add_term(k, c.conj());
  return r;
}

CycLaurent CycLaurent::galois(long long g) const {
  CycLaurent r;
  for (const auto& [k, c] : t_) r.add_term(k, c.galois(g));
  return r;
}

CycLaurent CycLaurent::shifted(int s) const {
  CycLaurent r;
  for (const auto& [k, c] : t_) r.t_.emplace(k + s, c);
  return r;
}

CycLaurent CycLaurent::inverted_u() const {
  CycLaurent r;
  for (const auto& [k, c] : t_) r.t_.emplace(-k, c);
  return r;
}

std::complex<double> CycLaurent::evaluate(double q) const {
  std::complex<double> s = 0;
  double u = std::sqrt(q);
  for (const auto& [k, c] : t_) s += c.to_complex() * std::pow(u, k);
  return s;
}

Cyclotomic CycLaurent::evaluate_exact(long long q) const {
  Cyclotomic s(0);
  long long root = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(q))));
  bool square = root * root == q;
  for (const auto& [k, c] : t_) {
    Rational v(1);
    if (k % 2 == 0) {
      mpz_class qq(static_cast<long>(q)), pw;
      mpz_pow_ui(pw.get_mpz_t(), qq.get_mpz_t(), std::abs(k) / 2);
      v = k >= 0 ? Rational(pw) : Rational(1) / Rational(pw);
    } else {
      require(square, "odd u-power at non-square q");
      mpz_class rr(static_cast<long>(root)), pw;
      mpz_pow_ui(pw.get_mpz_t(), rr.get_mpz_t(), std::abs(k));
      v = k >= 0 ? Rational(pw) : Rational(1) / Rational(pw);
    }
    s += c * Cyclotomic(v);
  }
  return s;
}

CycLaurent CycLaurent::divide_exact(const CycLaurent& d) const {
  require(!d.is_zero(), "division by zero polynomial");
  if (is_zero()) return {};
  CycLaurent rem = *this;
  CycLaurent quo;
  int dtop = d.max_power(), dbot = d.min_power();
  Cyclotomic lead_inv = d.coeff(dtop).inverse();
  while (!rem.is_zero()) {
    int top = rem.max_power();
    if (top - dtop < rem.min_power() - dbot) throw InvalidArgument("inexact division: " + str() + " / " + d.str());
    Cyclotomic c = rem.coeff(top) * lead_inv;
    CycLaurent term = u_power(top - dtop, c);
    quo += term;
    rem -= term * d;
  }
  return quo;
}

std::string CycLaurent::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << '(' << it->second.str() << ')';
    if (it->first != 0) os << "*u^" << it->first;
  }
  return os.str();
}

CycLaurent CycLaurent::operator-() const {
  CycLaurent r;
  for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
  return r;
}

CycLaurent& CycLaurent::operator+=(const CycLaurent& o) {
  for (const auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

CycLaurent& CycLaurent::operator-=(const CycLaurent& o) {
  for (const auto& [k, c] : o.t_) add_term(k, -c);
  return *this;
}

CycLaurent& CycLaurent::operator*=(const CycLaurent& o) {
  CycLaurent r;
  for (const auto& [a, ca] : t_)
    for (const auto& [b, cb] : o.t_) r.add_term(a + b, ca * cb);
  return *this = r;
}

bool operator==(const CycLaurent& a, const CycLaurent& b) {
  if (a.t_.size() != b.t_.size()) return false;
  auto ia = a.t_.begin();
  for (auto ib = b.t_.begin(); ib != b.t_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  auto trim = [](std::vector<Rational>& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size() && !a.empty()) {
      Rational c = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
      trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& x : a) x /= lead;
  }
  return a;
}

namespace {
std::vector<Rational> to_poly(const CycLaurent& x, int shift) {
  std::vector<Rational> p(x.max_power() - shift + 1, Rational(0));
  for (const auto& [k, c] : x.terms()) p[k - shift] = c.rational_value();
  return p;
}
CycLaurent from_poly(const std::vector<Rational>& p) {
  CycLaurent r;
  for (std::size_t i = 0; i < p.size(); ++i) r += CycLaurent::u_power(static_cast<int>(i), Cyclotomic(p[i]));
  return r;
}
}  // namespace

LaurentFraction::LaurentFraction(const CycLaurent& num, const CycLaurent& den) : num_(num), den_(den) {
  require(!den.is_zero(), "zero denominator");
  if (num_.is_zero()) {
    den_ = CycLaurent(1);
    return;
  }
  int nb = num_.min_power(), db = den_.min_power();
  num_ = num_.shifted(-nb);
  den_ = den_.shifted(-db);
  int ushift = nb - db;
  if (num_.has_rational_coeffs() && den_.has_rational_coeffs()) {
    auto g = poly_gcd(to_poly(num_, 0), to_poly(den_, 0));
    if (g.size() > 1) {
      CycLaurent gp = from_poly(g);
      num_ = num_.divide_exact(gp);
      den_ = den_.divide_exact(gp);
    }
  }
  Cyclotomic lead_inv = den_.coeff(den_.max_power()).inverse();
  num_ = (num_ * CycLaurent(lead_inv)).shifted(ushift);
  den_ = den_ * CycLaurent(lead_inv);
}

Cyclotomic LaurentFraction::evaluate_exact(long long q) const {
  return num_.evaluate_exact(q) / den_.evaluate_exact(q);
}

std::string LaurentFraction::str() const {
  if (den_ == CycLaurent(1)) return num_.str();
  return "[" + num_.str() + "] / [" + den_.str() + "]";
}

ZetaTerm Zeta::apply(int power, const CycLaurent& v) const {
  if (is_symbolic()) return ZetaTerm{((power % 4) + 4) % 4, v};
  long long e = static_cast<long long>(*quarter_turns) * power;
  return ZetaTerm{0, v * CycLaurent::root_of_unity(4, e)};
}

}  // namespace slnchar
