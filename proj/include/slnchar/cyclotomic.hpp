#pragma once
#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

namespace slnchar {

using Rational = mpq_class;

inline Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }

// Element of Q(ζ_N), stored in the power basis 1, ζ, …, ζ^{φ(N)-1}
// (i.e. already reduced mod Φ_N).
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  Cyclotomic(const Rational& r);  // NOLINT: implicit on purpose
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}  // NOLINT
  Cyclotomic(long long v) : Cyclotomic(to_rational(v)) {}  // NOLINT
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}   // NOLINT

  // ζ_N^k
  static Cyclotomic root_of_unity(int N, long long k);
  // reduce an arbitrary coefficient vector c_i ζ_N^i (any length)
  static Cyclotomic from_powers(int N, const std::vector<Rational>& c);

  int conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  Cyclotomic lifted(int M) const;  // requires N | M
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational
  bool is_integral() const;         // all power-basis coefficients integers

  Cyclotomic conj() const;
  Cyclotomic galois(long long k) const;  // ζ ↦ ζ^k, gcd(k,N)=1
  Cyclotomic inverse() const;
  Rational norm() const;  // product over all embeddings

  std::complex<double> to_complex() const;
  std::string str() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // drops to conductor 1 when rational
  Cyclotomic normalized() const;

 private:
  int n_ = 1;
  std::vector<Rational> c_;
};

// Integer coefficients of Φ_N, lowest degree first.
const std::vector<long long>& cyclotomic_polynomial(int N);

}  // namespace slnchar
