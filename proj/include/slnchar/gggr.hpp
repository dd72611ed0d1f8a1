#pragma once
#include <map>

#include "slnchar/laurent.hpp"
#include "slnchar/springer.hpp"

namespace slnchar::gggr {

// Twist data shared by all pairings: q, the class c₀ with −N* ~ N_{c₀}, and ζ_{I₀}.
struct TwistContext {
  long long q = 0;
  int c0 = 0;
  Zeta zeta = Zeta::symbolic();
};

// coinvariant group (A_λ)_F for the orbit μ
int coinvariant_order(const Partition& mu, int p, long long q);

// τ(c c₀) for the character τ of ι″ on the class of N_{cc₀}
Cyclotomic y_value_on_twist(const springer::PairLabel& iota2, int p, int c, int c0, long long q);

ZetaTerm gggr_x_inner_regular(int c, const springer::PairLabel& iota, const springer::Block& b,
                              const TwistContext& ctx);
ZetaTerm gggr_x_inner(int c, const Partition& mu_N, const springer::PairLabel& iota, const springer::Block& b,
                      const TwistContext& ctx);
// coefficients of X_{ι₁} in the projection of Γ_c onto the block
std::map<springer::PairLabel, ZetaTerm> gggr_projection_coeffs(int c, const Partition& mu_N,
                                                              const springer::Block& b, const TwistContext& ctx);

// ⟨Σ a_ι X_ι, X_κ⟩ via ω; returned as numerator over |G^F|
ZetaTerm pair_with_x(const std::map<springer::PairLabel, ZetaTerm>& coeffs, const springer::PairLabel& kappa,
                     const springer::Block& b);

}  // namespace slnchar::gggr
