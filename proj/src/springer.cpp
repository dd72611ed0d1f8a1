#include "slnchar/springer.hpp"

#include <numeric>

#include "slnchar/errors.hpp"
#include "slnchar/orbits.hpp"

namespace slnchar::springer {

std::vector<Block> blocks(int n, int p) {
  require(n >= 1 && is_prime(p), "bad (n, p)");
  int np = prime_to_part(n, p);
  std::vector<Block> out;
  for (int d : divisors(np))
    for (int r = 0; r < d; ++r)
      if (std::gcd(r, d) == 1) out.push_back(Block{n, p, np, d, (np / d) * r % np});
  return out;
}

Block block_of(int n, int p, int eps) {
  int np = prime_to_part(n, p);
  int j = static_cast<int>(mod_floor(eps, np));
  return Block{n, p, np, np / std::gcd(j, np), j};
}

PairLabel springer_map(const Block& b, const Partition& mu_bar) {
  require(mu_bar.size() * b.d == b.n, "μ̄ must be a partition of n/d");
  Partition mu = mu_bar.scaled(b.d);
  int npm = std::gcd(b.n_prime, mu.gcd_parts());
  int step = b.n_prime / npm;
  return PairLabel{mu, (b.eps / step) % npm};
}

BlockMember springer_inverse(int n, int p, const PairLabel& iota) {
  require(iota.orbit.size() == n, "orbit must be a partition of n");
  int np = prime_to_part(n, p);
  int npm = std::gcd(np, iota.orbit.gcd_parts());
  int tau = static_cast<int>(mod_floor(iota.tau, npm));
  Block b = block_of(n, p, tau * (np / npm));
  return BlockMember{b, iota.orbit.divided(b.d)};
}

std::vector<PairLabel> block_members(const Block& b) {
  std::vector<PairLabel> out;
  for (const auto& mb : partitions_of(b.rank())) out.push_back(springer_map(b, mb));
  return out;
}

bool in_block(const Block& b, const PairLabel& iota) {
  if (iota.orbit.size() != b.n) return false;
  return springer_inverse(b.n, b.p, iota).block == b;
}

int cuspidal_codim(const Block& b) { return b.n - 1; }
int cuspidal_center_dim(const Block& b) { return b.rank() - 1; }

BValues b_values(const PairLabel& iota, const Block& b) {
  require(in_block(b, iota), "label not in block");
  BValues v;
  v.b_u = orbits::orbit_dims(iota.orbit).codim - cuspidal_codim(b);
  v.b0_u = cuspidal_codim(b) - cuspidal_center_dim(b);
  return v;
}

Partition wave_front(const Multipartition& beta) {
  require(!beta.empty(), "empty multipartition");
  return merge(beta).dual();
}

std::uint64_t census_lhs(int n, int p) {
  int np = prime_to_part(n, p);
  std::uint64_t s = 0;
  for (const auto& mu : partitions_of(n)) s += std::gcd(np, mu.gcd_parts());
  return s;
}

std::uint64_t census_rhs(int n, int p) {
  int np = prime_to_part(n, p);
  std::uint64_t s = 0;
  for (int d : divisors(np)) s += static_cast<std::uint64_t>(euler_phi(d)) * partition_count(n / d);
  return s;
}

}  // namespace slnchar::springer
