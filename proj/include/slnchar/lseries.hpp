#pragma once
#include <cstdint>
#include <vector>

#include "slnchar/orbits.hpp"
#include "slnchar/partition.hpp"

namespace slnchar::lseries {

// F̄_q^* modelled as Z/(Q-1), Q = q^K; Frobenius is multiplication by q.
struct FieldModel {
  long long q = 0;
  int n = 0;
  int K = 0;
  long long order = 0;  // Q - 1
  FieldModel(int n, long long q);
  long long frob(long long x) const;
  // generator of the subgroup of order m (requires m | Q-1)
  long long root_step(long long m) const { return order / m; }
};

struct EOrbit {
  // one label per distinct eigenvalue (ascending), representative of the Ω-orbit
  std::vector<Partition> labels;
  int stabilizer_order = 1;  // |Ω_{s,E}|
  int a_E = 0;               // least x with xF′E = E, as an index in Z/t
};

struct SemisimpleClass {
  std::vector<long long> eigenvalues;  // canonical, sorted
  std::vector<long long> distinct;
  std::vector<int> multiplicities;     // aligned with distinct
  Partition w_shape;                   // W_ŝ = Π S_{m_e}
  orbits::CyclicF omega;               // Ω_s
  std::vector<EOrbit> stable_orbits;   // F′-stable Ω_s-orbits in W_ŝ∧
};

std::vector<SemisimpleClass> enumerate_semisimple_classes(int n, long long q);
SemisimpleClass special_class(int n, int t, long long q);

// element (character index of Ω_{s,E}^{F′}, coinvariant class) with base point a_E
struct ParamPair {
  int first = 0;
  int second = 0;
  auto operator<=>(const ParamPair&) const = default;
};
struct ParamSet {
  int g = 1;  // both factors cyclic of this order
  int base_point = 0;
  std::vector<ParamPair> elements;
};

ParamSet param_set_bar(const orbits::CyclicF& omega, const EOrbit& e);
// |M_{s,E}| = |(Ω∧)^{F′}| · |Ω^{F′}|
std::size_t param_set_fixed_side_size(const orbits::CyclicF& omega, const EOrbit& e);
ParamSet param_set_bar_N(int t, const Partition& mu, int p, long long q);

struct Bijection27 {
  int g = 1;
  std::vector<int> f;  // (Ω_s^{F′})∧ → (Ā_λ)_F
  std::vector<int> h;  // (Ω_s)_{F′} → (Ā_λ^F)∧
  std::vector<int> f2; // (Ω_s∧)^{F′} → Ā_λ^F
  std::vector<int> h2; // Ω_s^{F′} → (Ā_λ∧)^F
};
Bijection27 bijection_27(int t, long long q);

std::uint64_t irr_count(int n, long long q);

// both sides of the size identity for GL_d^r; each computed by enumeration in F_q^*
struct CenterSizes {
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
};
CenterSizes center_sizes(int d, int r, long long q);

}  // namespace slnchar::lseries
