#include "slnchar/sheaves.hpp"

#include <algorithm>
#include <numeric>

#include "slnchar/errors.hpp"
#include "slnchar/springer.hpp"

namespace slnchar::sheaves {

namespace {

int smallest_prime_factor(long long q) {
  for (long long p = 2; p * p <= q; ++p)
    if (q % p == 0) return static_cast<int>(p);
  return static_cast<int>(q);
}

bool unit_under_all_embeddings(const Cyclotomic& c) {
  int N = c.conductor();
  for (int g = 1; g <= std::max(N, 1); ++g) {
    if (std::gcd(g, N) != 1) continue;
    Cyclotomic h = c.galois(g);
    if (h * h.conj() != Cyclotomic(1)) return false;
  }
  return true;
}

// sign of the permutation shifting m blocks of size b by s
int shift_sign(int m, int b, int s) {
  int cycles = std::gcd(s, m) * b;
  return ((m * b - cycles) % 2 == 0) ? 1 : -1;
}

}  // namespace

CuspidalCensus cuspidal_census(int n, long long q, int p) {
  require(n >= 1, "n must be positive");
  require(is_prime(p) && prime_power_exponent(q, p) > 0, "q must be a power of the prime p");
  CuspidalCensus c;
  c.n_prime = prime_to_part(n, p);
  if (c.n_prime == 1) return c;
  orbits::CyclicF Z(c.n_prime, q);
  for (int z : Z.fixed_points())
    for (int e = 1; e < c.n_prime; ++e)
      if (std::gcd(e, c.n_prime) == 1 && mod_floor(static_cast<long long>(e) * (q - 1), c.n_prime) == 0)
        c.labels.push_back(CuspidalLabel{z, e});
  return c;
}

std::uint64_t EndoData::w_order() const {
  std::uint64_t f = factorial(b), r = static_cast<std::uint64_t>(k);
  for (int i = 0; i < k; ++i) r *= f;
  return r;
}

EndoData endomorphism_data(int n, int t, int d, long long q) {
  require(n >= 1 && t >= 1 && d >= 1, "n, t, d must be positive");
  require(n % t == 0 && t % d == 0, "need d | t | n");
  require(q >= 2, "q must be a prime power");
  int p = smallest_prime_factor(q);
  require(prime_power_exponent(q, p) > 0, "q must be a prime power");
  require(std::gcd(t, p) == 1, "t must be prime to p");
  EndoData e;
  e.n = n;
  e.t = t;
  e.d = d;
  e.q = q;
  e.p = p;
  e.b = n / t;
  e.k = t / d;
  e.w0_factors.assign(e.k, e.b);
  e.omega = orbits::CyclicF(e.k, q);
  e.y0 = e.k > 1 ? 1 : 0;
  return e;
}

FamilyParam family_param(int block_size, const std::vector<Partition>& E) {
  int m = static_cast<int>(E.size());
  require(m >= 1, "at least one block");
  for (const auto& e : E) require(e.size() == block_size, "partition size must equal the block size");
  FamilyParam f;
  f.m = m;
  int shift = m;
  for (int s = 1; s <= m; ++s) {
    if (m % s) continue;
    bool stable = true;
    for (int i = 0; i < m && stable; ++i) stable = E[i] == E[(i + s) % m];
    if (stable) {
      shift = s;
      break;
    }
  }
  f.shift = shift % m;
  f.stabilizer_order = m / shift;
  int so = f.stabilizer_order;
  for (int x = 0; x < so; ++x)
    for (int th = 0; th < so; ++th) {
      f.members.push_back({x, th});
      f.signs.push_back(shift_sign(m, block_size, x * shift));
    }
  for (std::size_t a = 0; a < f.members.size(); ++a) {
    std::vector<Cyclotomic> row;
    for (int th = 0; th < so; ++th)
      row.push_back(Cyclotomic(Rational(f.signs[a], so)) *
                    Cyclotomic::root_of_unity(so, -static_cast<long long>(th) * f.members[a].x));
    f.multiplicity.push_back(std::move(row));
  }
  return f;
}

bool family_rows_normalized(const FamilyParam& f) {
  for (const auto& row : f.multiplicity) {
    Cyclotomic s(0);
    for (const auto& c : row) s += c * c.conj();
    if (s * Cyclotomic(f.stabilizer_order) != Cyclotomic(1)) return false;
  }
  return true;
}

orbits::CyclicF xm_group(int t, int d, long long q) {
  require(d >= 1 && t % d == 0, "need d | t");
  return orbits::CyclicF(t / d, q);
}

PsiCharacter psi_character(int x, const EndoData& ctx) {
  require(x >= 0 && x < ctx.k, "x must lie in X_M ≅ Z/(t/d)");
  PsiCharacter psi;
  psi.k = ctx.k;
  psi.x = x;
  psi.index = static_cast<int>(mod_floor(-x, ctx.k));
  for (int j = 0; j < ctx.k; ++j) psi.exponents.push_back(static_cast<int>(mod_floor(-static_cast<long long>(x) * j, ctx.k)));
  return psi;
}

bool psi_bijection_holds(int k, long long q) {
  orbits::CyclicF X(k, q);
  auto fixed = X.fixed_points();
  auto stable = X.stable_characters();
  EndoData ctx;
  ctx.k = k;
  std::vector<int> image;
  for (int x : fixed) image.push_back(psi_character(x, ctx).index);
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
  std::sort(stable.begin(), stable.end());
  return image == stable;
}

int eps1_pullback(int eps, int d, const Partition& mu, int t) {
  require(d >= 1 && t % d == 0, "need d | t");
  require(mu.all_divisible_by(t), "t must divide every part of μ");
  return static_cast<int>(mod_floor(static_cast<long long>(eps) * (t / d), t));
}

std::vector<int> admissible_twists(const EndoData& ctx) {
  std::vector<int> w;
  for (int i = 0; i < ctx.k; ++i)
    if (mod_floor(static_cast<long long>(i) * (ctx.q - 1), ctx.k) == 0) w.push_back(i);
  return w;
}

namespace {

// Σ over (w_0..w_{k-1}) ∈ (S_b)^k of χ_tensor · χ^ρ at s·γ^j·w, for each j.
// Block i goes to s(i+j) mod k; position (g, i) has index i·b + g.
std::vector<long long> coset_sums(const Partition& nu, const Partition& rho, int b, int k, long long s) {
  auto perms = all_permutations(b);
  std::vector<long long> S(k, 0);
  std::vector<std::size_t> idx(k, 0);
  Permutation pos(static_cast<std::size_t>(b) * k);
  for (int j = 0; j < k; ++j) {
    std::vector<int> pi(k);
    for (int i = 0; i < k; ++i) pi[i] = static_cast<int>(mod_floor(s * (i + j), k));
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      for (int i = 0; i < k; ++i) {
        const auto& w = perms[idx[i]];
        for (int g = 0; g < b; ++g) pos[i * b + g] = pi[i] * b + w[g];
      }
      long long tensor = 1;
      std::vector<int> seen(k, 0);
      for (int i0 = 0; i0 < k && tensor; ++i0) {
        if (seen[i0]) continue;
        Permutation prod(b);
        std::iota(prod.begin(), prod.end(), 0);
        for (int i = i0; !seen[i]; i = pi[i]) {
          seen[i] = 1;
          prod = compose(perms[idx[i]], prod);
        }
        tensor *= sn_char_value(nu, cycle_type(prod));
      }
      if (tensor) S[j] += tensor * sn_char_value(rho, cycle_type(pos));
      int c = 0;
      while (c < k && ++idx[c] == perms.size()) idx[c++] = 0;
      if (c == k) break;
    }
  }
  return S;
}

Cyclotomic twisted_average(const std::vector<long long>& S, int shift, std::uint64_t order) {
  int k = static_cast<int>(S.size());
  UnitSum u(k);
  for (int j = 0; j < k; ++j) u.add(static_cast<long long>(shift) * j, to_rational(S[j]));
  return u.value() * Cyclotomic(Rational(1) / Rational(static_cast<unsigned long>(order)));
}

}  // namespace

LocateResult locate_zE(const ExtendedCharLabel& E, const EndoData& ctx, int z) {
  require(E.k == ctx.k, "extension level must equal t/d");
  require(E.base.n == ctx.b, "E₂ must be a character of S_{n/t}");
  require(z >= 0 && z < ctx.d, "z must lie in Z/d");
  int k = ctx.k;
  int tw = static_cast<int>(mod_floor(E.twist, k));
  require(mod_floor(static_cast<long long>(tw) * (ctx.q - 1), k) == 0, "E must be F″-stable");

  LocateResult r;
  const Partition& nu = E.base.partition;
  r.orbit = nu.dual().scaled(ctx.t);
  r.rho = nu.repeated(k);
  // E_ι ⊗ sgn is the Springer character of the block of order d on O_λ
  springer::Block blk = springer::block_of(ctx.n, ctx.p, prime_to_part(ctx.n, ctx.p) / ctx.d);
  auto iota = springer::springer_map(blk, nu.dual().scaled(k));
  require(iota.orbit == r.orbit && r.rho == nu.dual().scaled(k).dual(), "E_ι does not match the orbit of N");

  auto S = coset_sums(nu, r.rho, ctx.b, k, 1);
  std::uint64_t order = ctx.w_order();
  std::vector<int> hits;
  for (int x = 0; x < k; ++x) {
    Cyclotomic m = twisted_average(S, tw + x, order);
    if (!m.is_rational()) throw UniquenessViolation("non-rational multiplicity in z_E test");
    Rational v = m.rational_value();
    r.multiplicity.push_back(v);
    if (v == 1)
      hits.push_back(x);
    else if (v != 0)
      throw UniquenessViolation("multiplicity " + v.get_str() + " at x = " + std::to_string(x));
  }
  if (hits.size() != 1) throw UniquenessViolation(std::to_string(hits.size()) + " classes pass the z_E test");
  r.x_E = hits[0];
  r.xm_fixed = xm_group(ctx.t, ctx.d, ctx.q).fixed_points();
  if (std::find(r.xm_fixed.begin(), r.xm_fixed.end(), r.x_E) == r.xm_fixed.end())
    throw UniquenessViolation("x_E is not F″-stable");
  r.z_E = static_cast<int>(mod_floor(z + static_cast<long long>(ctx.d) * r.x_E, ctx.t));
  r.z_E_fixed = mod_floor(static_cast<long long>(r.z_E) * (ctx.q - 1), ctx.t) == 0;

  long long s = mod_floor(ctx.q, k);
  r.alpha_E = s == 1 % k ? Cyclotomic(1) : twisted_average(coset_sums(nu, r.rho, ctx.b, k, s), tw + r.x_E, order);
  return r;
}

ZetaTerm ScalarRecord::product() const {
  CycLaurent v = zeta_inv.value * CycLaurent(eps_c0_inv) * CycLaurent(alpha_E) * CycLaurent(central);
  if (sign < 0) v = -v;
  return ZetaTerm{zeta_inv.zeta_power, v};
}

bool ScalarRecord::unit_modulus() const {
  ZetaTerm p = product();
  if (!p.value.is_constant() || p.value.is_zero()) return false;
  return unit_under_all_embeddings(p.value.coeff(0));
}

ScalarRecord nu_scalar(int t, int eps1, int c0, const Zeta& zeta, const Cyclotomic& alpha_E,
                       const Cyclotomic& central, int sign) {
  require(t >= 1, "t must be positive");
  require(sign == 1 || sign == -1, "sign must be ±1");
  require(unit_under_all_embeddings(alpha_E), "α_E must be a root of unity");
  require(unit_under_all_embeddings(central), "central factor must be a root of unity");
  ScalarRecord r;
  r.sign = sign;
  r.zeta_inv = zeta.apply(-1, CycLaurent(1));
  r.eps_c0_inv = Cyclotomic::root_of_unity(t, -static_cast<long long>(eps1) * c0);
  r.alpha_E = alpha_E;
  r.central = central;
  return r;
}

}  // namespace slnchar::sheaves
