#pragma once
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slnchar/cyclotomic.hpp"

namespace slnchar {

// Q(ζ_N)[u, u⁻¹] with u² = q. Zero coefficients are never stored.
class CycLaurent {
 public:
  CycLaurent() = default;
  CycLaurent(const Cyclotomic& c);  // NOLINT
  CycLaurent(const Rational& r) : CycLaurent(Cyclotomic(r)) {}  // NOLINT
  CycLaurent(long v) : CycLaurent(Cyclotomic(v)) {}             // NOLINT
  CycLaurent(int v) : CycLaurent(Cyclotomic(v)) {}              // NOLINT

  static CycLaurent u_power(int k, const Cyclotomic& c = Cyclotomic(1));
  // Σ c_i q^i
  static CycLaurent from_q_poly(const std::vector<long long>& c);
  static CycLaurent root_of_unity(int N, long long k) {
    return CycLaurent(Cyclotomic::root_of_unity(N, k));
  }

  const std::map<int, Cyclotomic>& terms() const { return t_; }
  int conductor() const;  // lcm over coefficients
  bool is_zero() const { return t_.empty(); }
  int min_power() const;
  int max_power() const;
  Cyclotomic coeff(int k) const;
  bool is_constant() const;
  bool has_rational_coeffs() const;

  CycLaurent conj() const;  // u is real
  CycLaurent galois(long long k) const;
  CycLaurent abs2() const { return *this * conj(); }
  CycLaurent shifted(int k) const;  // times u^k
  // substitute u -> u^{-1}
  CycLaurent inverted_u() const;

  std::complex<double> evaluate(double q) const;
  // exact value at integer q when all u-powers are even or q is a square
  Cyclotomic evaluate_exact(long long q) const;

  // exact polynomial division in u; throws if not exact
  CycLaurent divide_exact(const CycLaurent& d) const;

  std::string str() const;

  CycLaurent operator-() const;
  CycLaurent& operator+=(const CycLaurent& o);
  CycLaurent& operator-=(const CycLaurent& o);
  CycLaurent& operator*=(const CycLaurent& o);
  friend CycLaurent operator+(CycLaurent a, const CycLaurent& b) { return a += b; }
  friend CycLaurent operator-(CycLaurent a, const CycLaurent& b) { return a -= b; }
  friend CycLaurent operator*(CycLaurent a, const CycLaurent& b) { return a *= b; }
  friend bool operator==(const CycLaurent& a, const CycLaurent& b);
  friend bool operator!=(const CycLaurent& a, const CycLaurent& b) { return !(a == b); }

 private:
  void add_term(int k, const Cyclotomic& c);
  std::map<int, Cyclotomic> t_;
};

// num/den, reduced by the polynomial gcd over Q when both have rational
// coefficients; den normalized to lowest u-power 0 with leading coefficient 1.
class LaurentFraction {
 public:
  LaurentFraction() : num_(0), den_(1) {}
  LaurentFraction(const CycLaurent& num, const CycLaurent& den);
  const CycLaurent& num() const { return num_; }
  const CycLaurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  std::complex<double> evaluate(double q) const { return num_.evaluate(q) / den_.evaluate(q); }
  Cyclotomic evaluate_exact(long long q) const;
  std::string str() const;
  friend bool operator==(const LaurentFraction& a, const LaurentFraction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

 private:
  CycLaurent num_, den_;
};

// ζ^k · value where ζ is a fourth root of unity that is either explicit or
// left as a formal symbol.
struct ZetaTerm {
  int zeta_power = 0;
  CycLaurent value;
  friend bool operator==(const ZetaTerm& a, const ZetaTerm& b) {
    if (a.value.is_zero() && b.value.is_zero()) return true;
    return ((a.zeta_power - b.zeta_power) % 4 == 0) && a.value == b.value;
  }
};

// Explicit ζ = i^e, or symbolic when unset.
struct Zeta {
  std::optional<int> quarter_turns;
  static Zeta symbolic() { return {}; }
  static Zeta explicit_value(int e) { return Zeta{((e % 4) + 4) % 4}; }
  bool is_symbolic() const { return !quarter_turns.has_value(); }
  ZetaTerm apply(int power, const CycLaurent& v) const;
};

// Polynomial gcd over Q of two rational-coefficient polynomials (index = degree).
std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b);

}  // namespace slnchar
