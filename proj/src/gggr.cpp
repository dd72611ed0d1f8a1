#include "slnchar/gggr.hpp"

#include <numeric>

#include "slnchar/errors.hpp"
#include "slnchar/green.hpp"
#include "slnchar/orbits.hpp"
#include "slnchar/symmetric.hpp"

namespace slnchar::gggr {

using springer::Block;
using springer::PairLabel;

namespace {

void require_stable(const Block& b, long long q) {
  require(mod_floor(static_cast<long long>(b.eps) * (q - 1), b.n_prime) == 0, "block is not F-stable");
}

// Σ b_k q^{-k}
CycLaurent at_q_inverse(const green::IntPolynomial& p) {
  CycLaurent r;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k]) r += CycLaurent::u_power(-2 * static_cast<int>(k), Cyclotomic(p[k]));
  return r;
}

}  // namespace

int coinvariant_order(const Partition& mu, int p, long long q) {
  return orbits::component_groups(mu, p, q).A_lambda.coinvariant_count();
}

Cyclotomic y_value_on_twist(const PairLabel& iota2, int p, int c, int c0, long long q) {
  int np = prime_to_part(iota2.orbit.size(), p);
  int npm = std::gcd(np, iota2.orbit.gcd_parts());
  require(mod_floor(static_cast<long long>(iota2.tau) * (q - 1), npm) == 0, "τ is not F-stable");
  return Cyclotomic::root_of_unity(npm, static_cast<long long>(iota2.tau) * (c + c0)).normalized();
}

ZetaTerm gggr_x_inner_regular(int c, const PairLabel& iota, const Block& b, const TwistContext& ctx) {
  require(springer::in_block(b, iota), "label not in block");
  require_stable(b, ctx.q);
  int k = b.rank();
  Partition mu_bar = iota.orbit.divided(b.d);
  if (mu_bar != Partition(std::vector<int>(k, 1))) return ZetaTerm{0, CycLaurent()};
  PairLabel reg = springer::springer_map(b, Partition({k}));
  Cyclotomic eps = y_value_on_twist(reg, b.p, c, ctx.c0, ctx.q);
  int e = (k - 1) - orbits::orbit_dims(iota.orbit).codim;
  return ctx.zeta.apply(-1, CycLaurent::u_power(e, eps.conj()));
}

ZetaTerm gggr_x_inner(int c, const Partition& mu_N, const PairLabel& iota, const Block& b, const TwistContext& ctx) {
  require(springer::in_block(b, iota), "label not in block");
  require(mu_N.size() == b.n, "μ_N must be a partition of n");
  require_stable(b, ctx.q);
  if (!mu_N.all_divisible_by(b.d)) return ZetaTerm{0, CycLaurent()};
  int k = b.rank();
  PairLabel iota2 = springer::springer_map(b, mu_N.divided(b.d));
  PairLabel iota1 = springer::springer_map(b, iota.orbit.divided(b.d).dual());
  auto bp = green::bp_polynomial(iota2, iota1, b);
  if (bp.empty()) return ZetaTerm{0, CycLaurent()};
  int g2 = -orbits::orbit_dims(iota1.orbit).codim + (k - 1) + orbits::orbit_dims(iota.orbit).dim_orbit -
           orbits::orbit_dims(mu_N).dim_orbit;
  Cyclotomic y = y_value_on_twist(iota2, b.p, c, ctx.c0, ctx.q);
  return ctx.zeta.apply(-1, (at_q_inverse(bp) * CycLaurent(y.conj())).shifted(g2));
}

std::map<PairLabel, ZetaTerm> gggr_projection_coeffs(int c, const Partition& mu_N, const Block& b,
                                                     const TwistContext& ctx) {
  require(mu_N.size() == b.n, "μ_N must be a partition of n");
  require_stable(b, ctx.q);
  std::map<PairLabel, ZetaTerm> out;
  auto members = springer::block_members(b);
  for (const auto& m : members) out[m] = ZetaTerm{0, CycLaurent()};
  if (!mu_N.all_divisible_by(b.d)) return out;
  int k = b.rank();
  int dimGZ = b.n * b.n - 1 - (k - 1);
  int dimN = orbits::orbit_dims(mu_N).dim_orbit;
  PairLabel iota2 = springer::springer_map(b, mu_N.divided(b.d));
  Cyclotomic ybar = y_value_on_twist(iota2, b.p, c, ctx.c0, ctx.q).conj();
  const auto& rhos = partitions_of(k);
  std::vector<CycLaurent> torus;
  for (const auto& rho : rhos) torus.push_back(green::torus_order(rho));
  for (const auto& i1 : members) {
    Partition l1 = i1.orbit.divided(b.d);
    CycLaurent total;
    for (const auto& io : members) {
      auto bp = green::bp_polynomial(iota2, io, b);
      if (bp.empty()) continue;
      Partition l = io.orbit.divided(b.d);
      CycLaurent wsum;
      for (std::size_t r = 0; r < rhos.size(); ++r) {
        // Tr(w, E ⊗ sgn) = χ(w) sgn(w)
        long long sgn = ((k - rhos[r].length()) % 2) ? -1 : 1;
        long long v = sn_char_value(l, rhos[r]) * sn_char_value(l1, rhos[r]) * sgn;
        if (v == 0) continue;
        wsum += torus[r] * CycLaurent(to_rational(v) / to_rational(static_cast<long long>(rhos[r].z_order())));
      }
      int f = -orbits::orbit_dims(i1.orbit).dim_orbit + orbits::orbit_dims(io.orbit).dim_orbit - dimN + dimGZ;
      total += (wsum * at_q_inverse(bp)).shifted(f);
    }
    out[i1] = ctx.zeta.apply(-1, total * CycLaurent(ybar));
  }
  return out;
}

ZetaTerm pair_with_x(const std::map<PairLabel, ZetaTerm>& coeffs, const PairLabel& kappa, const Block& b) {
  CycLaurent s;
  int zp = 0;
  bool any = false;
  for (const auto& [i1, a] : coeffs) {
    if (a.value.is_zero()) continue;
    if (any) require(a.zeta_power == zp, "mixed ζ powers");
    zp = a.zeta_power;
    any = true;
    s += a.value * green::omega(i1, kappa, b);
  }
  return ZetaTerm{zp, s};
}

}  // namespace slnchar::gggr
