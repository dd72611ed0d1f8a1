#pragma once
#include <map>
#include <vector>

#include "slnchar/cyclotomic.hpp"
#include "slnchar/laurent.hpp"
#include "slnchar/partition.hpp"

namespace slnchar {

// χ^λ for λ ⊢ n; (n) is the trivial character, (1^n) the sign.
struct SnCharLabel {
  int n = 0;
  Partition partition;
  SnCharLabel() = default;
  explicit SnCharLabel(Partition p) : n(p.size()), partition(std::move(p)) {}
  auto operator<=>(const SnCharLabel&) const = default;
};

// Irreducible character of (S_m)^k ⋊ Z/k restricting to base^{⊠k}.
struct ExtendedCharLabel {
  SnCharLabel base;
  int k = 1;
  int twist = 0;  // index mod k: coset j gets ζ_k^{twist·j}
};

using Permutation = std::vector<int>;  // images of 0..m-1

Partition cycle_type(const Permutation& w);
Permutation compose(const Permutation& a, const Permutation& b);  // a∘b
// all permutations of 0..m-1 in lexicographic order
std::vector<Permutation> all_permutations(int m);
// a fixed permutation of the given cycle type
Permutation permutation_of_type(const Partition& rho);

// Murnaghan–Nakayama
long long sn_char_value(const SnCharLabel& E, const Partition& rho);
long long sn_char_value(const Partition& lambda, const Partition& rho);

// multiplicity of ⊠ factors in Res E (Young subgroup), by character inner product
long long restriction_multiplicity(const SnCharLabel& E, const std::vector<SnCharLabel>& factors);

// Value at γ^j (w_0, …, w_{k-1}).  The block permutation i ↦ i+j splits into
// gcd(j,k) cycles; each contributes χ_base(product of its w's).
CycLaurent extended_char_value(const ExtendedCharLabel& E, int j, const std::vector<Permutation>& w);

// Sum of rational multiples of roots of unity of order dividing L, kept as a
// group-ring vector and reduced only on conversion.
class UnitSum {
 public:
  explicit UnitSum(int L) : L_(L), c_(L, Rational(0)) {}
  int order() const { return L_; }
  void add(long long exponent, const Rational& coeff);
  Cyclotomic value() const { return Cyclotomic::from_powers(L_, c_); }

 private:
  int L_;
  std::vector<Rational> c_;
};

}  // namespace slnchar
