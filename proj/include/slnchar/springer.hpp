#pragma once
#include <vector>

#include "slnchar/partition.hpp"

namespace slnchar::springer {

// (C, E) with E the character τ of A_G(u) ≅ Z/n′_μ.
struct PairLabel {
  Partition orbit;
  int tau = 0;
  auto operator<=>(const PairLabel&) const = default;
};

// Block attached to the character ε = j of Z_G/Z_G⁰ ≅ Z/n′, of order d.
// Cuspidal support: Levi of type (A_{d-1})^{n/d}, regular class; W = S_{n/d}.
struct Block {
  int n = 0;
  int p = 0;
  int n_prime = 1;
  int d = 1;
  int eps = 0;
  int rank() const { return n / d; }  // relative Weyl group S_{n/d}
  bool operator==(const Block&) const = default;
};

std::vector<Block> blocks(int n, int p);
Block block_of(int n, int p, int eps);

PairLabel springer_map(const Block& b, const Partition& mu_bar);
struct BlockMember {
  Block block;
  Partition mu_bar;
};
BlockMember springer_inverse(int n, int p, const PairLabel& iota);
// members in the order of partitions_of(n/d)
std::vector<PairLabel> block_members(const Block& b);
bool in_block(const Block& b, const PairLabel& iota);

// Twice the half-integers b(ι) and b₀, i.e. exponents of u = q^{1/2}.
struct BValues {
  int b_u = 0;
  int b0_u = 0;
};
BValues b_values(const PairLabel& iota, const Block& b);

// codim_L C₀ and dim Z⁰_L for the cuspidal Levi of the block
int cuspidal_codim(const Block& b);
int cuspidal_center_dim(const Block& b);

Partition wave_front(const Multipartition& beta);

// Σ_{μ⊢n} n′_μ and Σ_{d|n′} φ(d) p(n/d)
std::uint64_t census_lhs(int n, int p);
std::uint64_t census_rhs(int n, int p);

}  // namespace slnchar::springer
