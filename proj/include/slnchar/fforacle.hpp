#pragma once
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "slnchar/partition.hpp"

namespace slnchar::fforacle {

inline constexpr std::uint64_t kDefaultCap = 1000000;

// GF(q), q = p^k ≤ 64, elements encoded 0..q-1 as base-p digit vectors of
// polynomial residues modulo a fixed Conway polynomial.
class Field {
 public:
  static std::shared_ptr<const Field> get(int q);  // cached

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const;  // a ≠ 0
  int pow(int a, long long e) const;
  int from_int(long long v) const;  // image of an integer
  int frobenius(int a) const { return pow(a, p_); }
  // the class of x in the polynomial model; a primitive element
  int generator() const { return gen_; }
  const std::vector<int>& conway() const { return conway_; }

 private:
  explicit Field(int q);
  int p_, k_, q_, gen_ = 0;
  std::vector<int> conway_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

// n×n matrix over a Field (n ≤ 4), row-major.
struct Matrix {
  int n = 0;
  std::vector<int> a;
  Matrix() = default;
  explicit Matrix(int n_) : n(n_), a(n_ * n_, 0) {}
  static Matrix identity(int n, const Field& F);
  int& at(int i, int j) { return a[i * n + j]; }
  int at(int i, int j) const { return a[i * n + j]; }
  auto operator<=>(const Matrix&) const = default;
};

Matrix mat_mul(const Field& F, const Matrix& x, const Matrix& y);
Matrix mat_add(const Field& F, const Matrix& x, const Matrix& y);
Matrix mat_scale(const Field& F, int s, const Matrix& x);
Matrix mat_inverse(const Field& F, const Matrix& x);
int mat_det(const Field& F, const Matrix& x);
int mat_rank(const Field& F, const Matrix& x);
// Jordan type of a unipotent element, empty partition if not unipotent
Partition unipotent_type(const Field& F, const Matrix& g);
// basis of {x : rows·x = 0} for an r×c matrix given row-major
std::vector<std::vector<int>> nullspace(const Field& F, std::vector<std::vector<int>> rows, int cols);

std::uint64_t sl_order(int n, long long q);

// All of SL_n(F_q) in lexicographic order of entries.
class GroupEnumeration {
 public:
  GroupEnumeration(int n, int q, std::uint64_t cap = kDefaultCap);
  int n() const { return n_; }
  const Field& field() const { return *F_; }
  std::size_t size() const { return elems_.size(); }
  const Matrix& operator[](std::size_t i) const { return elems_[i]; }
  const Matrix& inverse(std::size_t i) const { return inv_[i]; }
  std::size_t index_of(const Matrix& m) const;  // binary search
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

 private:
  int n_;
  std::shared_ptr<const Field> F_;
  std::vector<Matrix> elems_, inv_;
};

struct ClassInfo {
  Matrix representative;  // lexicographically least
  std::uint64_t size = 0;
  std::uint64_t centralizer = 0;
};

struct ClassCensus {
  int n = 0;
  int q = 0;
  std::uint64_t group_order = 0;
  std::vector<ClassInfo> classes;
};

ClassCensus conjugacy_classes(int n, int q, std::uint64_t cap = kDefaultCap);

// Jordan-form regular-block nilpotent of type μ (blocks in order of μ).
Matrix jordan_nilpotent(const Field& F, const Partition& mu);
std::uint64_t unipotent_centralizer_order(int n, int q, const Partition& mu, std::uint64_t cap = kDefaultCap);

struct TwistResult {
  int c0 = 0;              // class in (A_λ)_F ≅ Z/gcd(n'_μ, q-1)
  int coinvariant_order = 1;
  Matrix conjugator;       // g with g N_{c0} g⁻¹ = −N*
  Matrix N, N_star, N_c0;
  std::string assumption;  // recorded p > n requirement
};

// Class c0 with −N* conjugate to N_{c0} under SL_n(F_q).
TwistResult solve_twist_c0(int n, int q, const Partition& mu, std::uint64_t cap = kDefaultCap);
// N_c for the class c: conjugate of N by diag(1,…,1,γ_c)
Matrix twisted_nilpotent(const Field& F, const Partition& mu, int c);

}  // namespace slnchar::fforacle
