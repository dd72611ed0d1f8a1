#pragma once
#include <string>
#include <vector>

#include "slnchar/cyclotomic.hpp"
#include "slnchar/laurent.hpp"
#include "slnchar/orbits.hpp"
#include "slnchar/partition.hpp"
#include "slnchar/symmetric.hpp"

namespace slnchar::sheaves {

// (z, ε) for a cuspidal character sheaf of SL_n; z ∈ Z/n′, ε a faithful
// character index of Z/n′. The local system on L/L_der is always trivial.
struct CuspidalLabel {
  int z = 0;
  int eps = 0;
  std::string local_system = "trivial";
  auto operator<=>(const CuspidalLabel&) const = default;
};

struct CuspidalCensus {
  int n_prime = 1;
  std::vector<CuspidalLabel> labels;  // F-stable only
  std::size_t count() const { return labels.size(); }
};

CuspidalCensus cuspidal_census(int n, long long q, int p);

// W⁰ ≅ (S_b)^k with b = n/t, k = t/d; Ω ≅ Z/k generated by y₀ (index 1),
// with F″ acting on Ω and on X_M by multiplication by q.
struct EndoData {
  int n = 0, t = 1, d = 1;
  long long q = 0;
  int p = 0;
  int b = 1;
  int k = 1;
  std::vector<int> w0_factors;  // k copies of b
  orbits::CyclicF omega;
  int y0 = 1;
  std::uint64_t w_order() const;  // |W_{θ₁}| = (b!)^k · k
};

EndoData endomorphism_data(int n, int t, int d, long long q);

// M_{L,E} = Ω_{L,E} × Ω_{L,E}∧ for Ω_L = Z/m acting on m blocks of size b by
// cyclic shift, E = (E_0, …, E_{m-1}) one partition per block.
struct FamilyMember {
  int x = 0;      // element of Ω_{L,E} ≅ Z/s
  int theta = 0;  // character index of Z/s
  auto operator<=>(const FamilyMember&) const = default;
};
struct FamilyParam {
  int m = 1;
  int stabilizer_order = 1;  // s
  int shift = 0;             // generator of Ω_{L,E} as a shift of Z/m
  std::vector<FamilyMember> members;
  std::vector<int> signs;  // ε_A per member
  // entry(A, θ) = |Ω_{L,E}|⁻¹ ε_A θ(x_A)⁻¹, rows indexed like members
  std::vector<std::vector<Cyclotomic>> multiplicity;
};

FamilyParam family_param(int block_size, const std::vector<Partition>& E);
// |Ω_{L,E}| · Σ_θ |entry|² = 1 for every row
bool family_rows_normalized(const FamilyParam& f);

orbits::CyclicF xm_group(int t, int d, long long q);

// Ψ_x as the exponent vector e_j with Ψ_x(y₀^j) = ω^{e_j}, ω = ζ_k
struct PsiCharacter {
  int k = 1;
  int x = 0;
  int index = 0;  // Ψ_x = (y₀ ↦ ω^{index})
  std::vector<int> exponents;
};

PsiCharacter psi_character(int x, const EndoData& ctx);
// x ↦ Ψ_x is a bijection X_M^{F″} → (Ω∧)^{F″}
bool psi_bijection_holds(int k, long long q);

// ε of Z_L/Z_L⁰ ≅ Z/d, pulled back to Ā_λ ≅ Z/t; returns the index in Z/t
int eps1_pullback(int eps, int d, const Partition& mu, int t);

struct LocateResult {
  int x_E = 0;
  int z_E = 0;
  Partition orbit;          // λ = t·ν*
  Partition rho;            // E_ι = χ^ρ, ρ = ν ∪ ⋯ ∪ ν
  std::vector<Rational> multiplicity;  // ⟨E⊗Ψ_{−x}, E_ι⟩ for x ∈ Z/k
  std::vector<int> xm_fixed;           // X_M^{F″}
  bool z_E_fixed = false;              // z_E ∈ Ā_λ^F
  Cyclotomic alpha_E;                  // coset pairing on F″·W_{θ₁}
};

// E: extended character of (S_b)^k ⋊ Z/k; z ∈ Z/d the cuspidal coset.
// Throws UniquenessViolation unless exactly one x passes the test.
LocateResult locate_zE(const ExtendedCharLabel& E, const EndoData& ctx, int z = 0);

// F″-stable twists w of E (w·(q−1) ≡ 0 mod k)
std::vector<int> admissible_twists(const EndoData& ctx);

struct ScalarRecord {
  int sign = 1;
  ZetaTerm zeta_inv;
  Cyclotomic eps_c0_inv;
  Cyclotomic alpha_E;
  Cyclotomic central;
  ZetaTerm product() const;
  bool unit_modulus() const;  // under every complex embedding
};

// ν_E = sign · ζ⁻¹ · ε₁(c₀)⁻¹ · α_E · central, with ε₁, c₀ ∈ Z/t.
ScalarRecord nu_scalar(int t, int eps1, int c0, const Zeta& zeta, const Cyclotomic& alpha_E,
                       const Cyclotomic& central = Cyclotomic(1), int sign = 1);

}  // namespace slnchar::sheaves
