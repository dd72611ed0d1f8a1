#include "slnchar/orbits.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "slnchar/errors.hpp"

namespace slnchar::orbits {

CyclicF::CyclicF(int order_, long long mult) : order(order_) {
  require(order_ >= 1, "cyclic group order must be positive");
  multiplier = static_cast<int>(mod_floor(mult, order_));
}

int CyclicF::fixed_count() const { return std::gcd(order, static_cast<int>(mod_floor(multiplier - 1, order))); }
int CyclicF::coinvariant_count() const { return fixed_count(); }

std::vector<int> CyclicF::fixed_points() const {
  std::vector<int> v;
  for (int z = 0; z < order; ++z)
    if (mod_floor(static_cast<long long>(z) * multiplier - z, order) == 0) v.push_back(z);
  return v;
}

int CyclicF::coinvariant_class(long long z) const { return static_cast<int>(mod_floor(z, coinvariant_count())); }

std::vector<int> CyclicF::stable_characters() const { return fixed_points(); }

WeightedDynkin weighted_dynkin(const Partition& mu) {
  WeightedDynkin w;
  w.n = mu.size();
  for (int m : mu.parts())
    for (int j = m - 1; j >= -m + 1; j -= 2) w.nu.push_back(j);
  std::stable_sort(w.nu.begin(), w.nu.end(), std::greater<>());
  for (int i = 0; i + 1 < w.n; ++i) w.h.push_back(w.nu[i] - w.nu[i + 1]);
  return w;
}

RootSubset sigma1(const Partition& mu) {
  auto w = weighted_dynkin(mu);
  RootSubset s;
  for (int p = 1; p <= w.n; ++p)
    for (int q = p + 1; q <= w.n; ++q)
      if (w.nu[p - 1] - w.nu[q - 1] == 1) s.insert({p, q});
  return s;
}

std::vector<std::pair<int, RootSubset>> psi_blocks(const Partition& mu) {
  auto w = weighted_dynkin(mu);
  int n = w.n;
  auto h = [&](int i) { return w.h[i - 1]; };
  std::vector<std::pair<int, RootSubset>> out;
  for (int i = 1; i < n; ++i) {
    if (h(i) != 1) continue;
    int j = n, k = 0;
    for (int a = i + 1; a < n; ++a)
      if (h(a) > 0) {
        j = a;
        break;
      }
    for (int a = i - 1; a >= 1; --a)
      if (h(a) > 0) {
        k = a;
        break;
      }
    RootSubset blk;
    for (int p = k + 1; p <= i; ++p)
      for (int q = i + 1; q <= j; ++q) blk.insert({p, q});
    out.emplace_back(i, blk);
  }
  return out;
}

RootSubset sigma_image(const RootSubset& s, int n) {
  RootSubset r;
  for (auto [p, q] : s) r.insert({n + 1 - q, n + 1 - p});
  return r;
}

RootSubset lagrangian_psi(const Partition& mu) {
  auto blocks = psi_blocks(mu);
  auto s1 = sigma1(mu);
  int n = mu.size();
  // alternate blocks in Π₁ order; consecutive ones are adjacent
  for (int start : {0, 1}) {
    RootSubset psi;
    for (std::size_t b = start; b < blocks.size(); b += 2) psi.insert(blocks[b].second.begin(), blocks[b].second.end());
    RootSubset sp = sigma_image(psi, n);
    RootSubset uni = psi;
    uni.insert(sp.begin(), sp.end());
    bool disjoint = std::none_of(psi.begin(), psi.end(), [&](const auto& r) { return sp.count(r) > 0; });
    if (disjoint && uni == s1) return psi;
  }
  throw InvalidArgument("no Lagrangian decomposition of Σ₁ found");
}

OrbitDims orbit_dims(const Partition& mu) {
  int n = mu.size();
  int s = 0;
  Partition dual = mu.dual();
  for (int x : dual.parts()) s += x * x;
  OrbitDims d;
  d.dim_orbit = n * n - s;
  d.codim = n * n - 1 - d.dim_orbit;
  d.dim_centralizer = s - 1;
  return d;
}

LeviShape levi_of_N(const Partition& mu) {
  auto w = weighted_dynkin(mu);
  std::map<int, int, std::greater<>> cnt;
  for (int v : w.nu) ++cnt[v];
  LeviShape L;
  for (auto [v, c] : cnt) L.blocks.push_back(c);
  L.dim_center = static_cast<int>(L.blocks.size()) - 1;
  return L;
}

ComponentData component_groups(const Partition& mu, int p, long long q) {
  require(is_prime(p) && prime_power_exponent(q, p) > 0, "q must be a power of the prime p");
  ComponentData c;
  c.n_prime = prime_to_part(mu.size(), p);
  c.n_prime_mu = std::gcd(c.n_prime, mu.gcd_parts());
  c.A_u = CyclicF(c.n_prime_mu, q);
  c.A_lambda = c.A_u;
  return c;
}

QuotientData zm1_quotient(const Partition& mu, int t, int p, long long q) {
  require(t >= 1 && mu.all_divisible_by(t), "t must divide every part of μ");
  require(t % p != 0, "t must be prime to p");
  auto cd = component_groups(mu, p, q);
  require(cd.n_prime_mu % t == 0, "t must divide n'_μ");
  return QuotientData{CyclicF(t, q), cd.n_prime_mu};
}

}  // namespace slnchar::orbits
