#pragma once
#include <set>
#include <utility>
#include <vector>

#include "slnchar/partition.hpp"

namespace slnchar::orbits {

struct WeightedDynkin {
  int n = 0;
  std::vector<int> h;   // h(α_i), i = 1..n-1
  std::vector<int> nu;  // ν_1 ≥ … ≥ ν_n
};

// (p, q) with 1 ≤ p < q ≤ n encodes ε_p − ε_q
using RootSubset = std::set<std::pair<int, int>>;

// Cyclic group Z/order with Frobenius z ↦ multiplier·z.
struct CyclicF {
  int order = 1;
  int multiplier = 0;
  CyclicF() = default;
  CyclicF(int order_, long long mult);
  int fixed_count() const;       // |A^F|
  int coinvariant_count() const;  // |A_F|
  std::vector<int> fixed_points() const;
  int coinvariant_class(long long z) const;  // z mod |A_F|
  // characters k with kq ≡ k
  std::vector<int> stable_characters() const;
  bool operator==(const CyclicF&) const = default;
};

struct OrbitDims {
  int dim_orbit = 0;
  int codim = 0;  // (n²-1) - dim O
  int dim_centralizer = 0;
};

struct LeviShape {
  std::vector<int> blocks;
  int dim_center = 0;  // dim Z⁰ in SL_n
};

struct ComponentData {
  int n_prime = 1;
  int n_prime_mu = 1;
  CyclicF A_u;      // A_G(u)
  CyclicF A_lambda; // A_λ ≅ A_G(N)
};

struct QuotientData {
  CyclicF A_bar;    // Ā_λ
  int source_order = 1;  // |A_λ|, map is reduction mod t
  int image(int a) const { return static_cast<int>(((a % A_bar.order) + A_bar.order) % A_bar.order); }
};

WeightedDynkin weighted_dynkin(const Partition& mu);
RootSubset sigma1(const Partition& mu);
// the blocks Ψ_i, keyed by i with α_i ∈ Π₁
std::vector<std::pair<int, RootSubset>> psi_blocks(const Partition& mu);
RootSubset lagrangian_psi(const Partition& mu);
RootSubset sigma_image(const RootSubset& s, int n);

OrbitDims orbit_dims(const Partition& mu);
LeviShape levi_of_N(const Partition& mu);
ComponentData component_groups(const Partition& mu, int p, long long q);
QuotientData zm1_quotient(const Partition& mu, int t, int p, long long q);

}  // namespace slnchar::orbits
