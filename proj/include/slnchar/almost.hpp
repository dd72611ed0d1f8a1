#pragma once
#include <vector>

#include "slnchar/cyclotomic.hpp"
#include "slnchar/laurent.hpp"

namespace slnchar::almost {

// Cyclic group Z/t with Frobenius multiplier q; g = gcd(t, q-1).
struct Context {
  int t = 1;
  long long q = 0;
  Context(int t_, long long q_);
  int g() const { return g_; }
  std::vector<int> fixed_points() const;       // Ω^{F}, as elements of Z/t
  std::vector<int> stable_characters() const;  // (Ω∧)^{F}, as indices in Z/t

 private:
  int g_ = 1;
};

// x = (ε, z) ∈ (Ω∧)^F × Ω^F, entries in Z/t
struct MLabel {
  int eps = 0;
  int z = 0;
  auto operator<=>(const MLabel&) const = default;
};
// y = (ε′, z′) ∈ (Ω^F)∧ × Ω_F, entries in Z/g
struct MBarLabel {
  int eps = 0;
  int z = 0;
  auto operator<=>(const MBarLabel&) const = default;
};

// exponent k with {x,y} = ζ_t^k / g
int pairing_exponent(const MLabel& x, const MBarLabel& y, const Context& ctx);
Cyclotomic pairing(const MLabel& x, const MBarLabel& y, const Context& ctx);

struct TransformMatrix {
  int t = 1;
  int g = 1;
  std::vector<MLabel> rows;
  std::vector<MBarLabel> cols;
  std::vector<std::vector<int>> exponent;  // entry = ζ_t^{exponent} / g
  Cyclotomic entry(std::size_t i, std::size_t j) const;
};

TransformMatrix transform_matrix(const Context& ctx);
// M·M* = I, exactly
bool is_unitary(const TransformMatrix& m);
// Σ_j |m_ij|² = 1 for every row
bool rows_normalized(const TransformMatrix& m);

// ⟨Γ_{c,ξ}, R_{z,ε}⟩: c ∈ Z/g, ξ ∈ Z/g, z ∈ Ω^F, ε ∈ (Ω∧)^F
Cyclotomic gggr_vs_almost_inner(int c, int xi, int z, int eps, const Context& ctx, bool theta_match = true);

// ⟨Γ_{c,ξ}, χ_{z,ε}⟩ for the cuspidal character sheaf
ZetaTerm cuspidal_charfun_inner(int c, int xi, int z, int eps, const Context& ctx, const Zeta& zeta, int c0,
                                const Cyclotomic& central = Cyclotomic(1), bool theta_match = true);

struct ScalarExtraction {
  ZetaTerm scalar;     // χ_{z,ε} = scalar · R_{support}
  int support_z = 0;
  int support_eps = 0;
  bool single_support = false;
  bool row_independent = false;
};
// Solves for χ_{z,ε} in the R-basis through the unitary matrix of ⟨Γ, R⟩ values.
ScalarExtraction extract_cuspidal_scalar(int z, int eps, const Context& ctx, const Zeta& zeta, int c0,
                                         const Cyclotomic& central = Cyclotomic(1));

}  // namespace slnchar::almost
