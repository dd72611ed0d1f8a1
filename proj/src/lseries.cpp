#include "slnchar/lseries.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "slnchar/errors.hpp"

namespace slnchar::lseries {

namespace {

long long mulmod(long long a, long long b, long long m) {
  return static_cast<long long>((static_cast<__int128>(a) * b) % m);
}

bool fits_power(long long q, int K, long long& out) {
  __int128 v = 1;
  for (int i = 0; i < K; ++i) {
    v *= q;
    if (v > (static_cast<__int128>(1) << 62)) return false;
  }
  out = static_cast<long long>(v);
  return true;
}

}  // namespace

FieldModel::FieldModel(int n_, long long q_) : q(q_), n(n_) {
  require(n >= 1 && q >= 2, "bad (n, q)");
  long long p = 0;
  for (long long c = 2; c <= q; ++c)
    if (q % c == 0) {
      p = c;
      break;
    }
  require(prime_power_exponent(q, p) > 0, "q must be a prime power");
  long long L = 1;
  for (int i = 1; i <= n; ++i) L = lcm_ll(L, i);
  long long need = (q - 1) * prime_to_part(n, static_cast<int>(p));
  for (K = static_cast<int>(L);; K += static_cast<int>(L)) {
    long long Q = 0;
    if (!fits_power(q, K, Q)) throw CapExceeded("working field exponent too large");
    if ((Q - 1) % need == 0) {
      order = Q - 1;
      break;
    }
  }
}

long long FieldModel::frob(long long x) const { return mulmod(x, q, order); }

namespace {

std::vector<long long> shifted_sorted(const std::vector<long long>& s, long long c, long long m) {
  std::vector<long long> r;
  r.reserve(s.size());
  for (long long x : s) r.push_back(mod_floor(x + c, m));
  std::sort(r.begin(), r.end());
  return r;
}

// translations by roots of unity stabilizing the multiset
std::vector<long long> translation_stabilizer(const std::vector<long long>& s, const FieldModel& M) {
  std::vector<long long> out;
  int n = static_cast<int>(s.size());
  std::set<long long> seen;
  for (int m : divisors(n)) {
    if (M.order % m) continue;
    long long step = M.order / m;
    for (long long j = 0; j < m; ++j) {
      long long c = j * step;
      if (seen.count(c)) continue;
      if (shifted_sorted(s, c, M.order) == s) {
        seen.insert(c);
        out.push_back(c);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> canonical(const std::vector<long long>& s, const FieldModel& M) {
  auto stab = translation_stabilizer(s, M);
  long long fq = M.order / (M.q - 1);  // generator of F_q^* additively
  std::vector<long long> best = s;
  for (long long st : stab) {
    require(st % (M.q - 1) == 0, "stabilizer element not divisible by q-1");
    long long c0 = st / (M.q - 1);
    for (long long k = 0; k < M.q - 1; ++k) {
      auto cand = shifted_sorted(s, c0 + k * fq, M.order);
      if (cand < best) best = cand;
    }
  }
  return best;
}

using Labeling = std::vector<Partition>;

std::vector<int> permutation_of(const std::vector<long long>& distinct, long long shift, long long mult,
                                long long m) {
  std::vector<int> perm(distinct.size());
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    long long img = mod_floor(mulmod(distinct[i], mult, m) + shift, m);
    auto it = std::lower_bound(distinct.begin(), distinct.end(), img);
    require(it != distinct.end() && *it == img, "map does not preserve eigenvalues");
    perm[i] = static_cast<int>(it - distinct.begin());
  }
  return perm;
}

void fill_class(SemisimpleClass& c, const FieldModel& M) {
  const auto& s = c.eigenvalues;
  c.distinct.clear();
  c.multiplicities.clear();
  for (long long x : s) {
    if (c.distinct.empty() || c.distinct.back() != x) {
      c.distinct.push_back(x);
      c.multiplicities.push_back(0);
    }
    ++c.multiplicities.back();
  }
  c.w_shape = Partition::sorted(c.multiplicities);
  auto stab = translation_stabilizer(s, M);
  int t = static_cast<int>(stab.size());
  c.omega = orbits::CyclicF(t, M.q);
  long long step = M.order / t;
  // Ω generator and Frobenius as permutations of distinct eigenvalues
  std::vector<std::vector<int>> omega_perm(t);
  for (int x = 0; x < t; ++x) omega_perm[x] = permutation_of(c.distinct, x * step, 1, M.order);
  auto frob_perm = permutation_of(c.distinct, 0, M.q, M.order);
  auto act = [&](const Labeling& E, const std::vector<int>& perm) {
    Labeling r(E.size());
    for (std::size_t i = 0; i < E.size(); ++i) r[perm[i]] = E[i];
    return r;
  };
  // all labelings
  std::vector<Labeling> all{{}};
  for (int m : c.multiplicities) {
    std::vector<Labeling> next;
    for (const auto& L : all)
      for (const auto& lam : partitions_of(m)) {
        auto L2 = L;
        L2.push_back(lam);
        next.push_back(L2);
      }
    all.swap(next);
  }
  std::set<Labeling> done;
  for (const auto& E : all) {
    if (done.count(E)) continue;
    std::set<Labeling> orbit;
    for (int x = 0; x < t; ++x) orbit.insert(act(E, omega_perm[x]));
    done.insert(orbit.begin(), orbit.end());
    Labeling rep = *orbit.begin();
    Labeling fE = act(rep, frob_perm);
    if (!orbit.count(fE)) continue;
    EOrbit eo;
    eo.labels = rep;
    eo.stabilizer_order = t / static_cast<int>(orbit.size());
    eo.a_E = -1;
    for (int x = 0; x < t && eo.a_E < 0; ++x)
      if (act(fE, omega_perm[x]) == rep) eo.a_E = x;
    c.stable_orbits.push_back(eo);
  }
}

}  // namespace

std::vector<SemisimpleClass> enumerate_semisimple_classes(int n, long long q) {
  if (n > 4 || q > 9) throw CapExceeded("enumeration is capped at n <= 4, q <= 9");
  FieldModel M(n, q);
  // Frobenius orbits of size ≤ n
  std::vector<std::vector<long long>> orbs;
  for (int k = 1; k <= n; ++k) {
    long long qk = 1;
    for (int i = 0; i < k; ++i) qk *= q;
    long long step = M.order / (qk - 1);
    for (long long j = 0; j < qk - 1; ++j) {
      long long x = j * step;
      std::vector<long long> o{x};
      for (long long y = M.frob(x); y != x; y = M.frob(y)) o.push_back(y);
      if (static_cast<int>(o.size()) != k) continue;
      if (*std::min_element(o.begin(), o.end()) != x) continue;
      orbs.push_back(o);
    }
  }
  std::set<std::vector<long long>> found;
  std::vector<long long> cur;
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    if (left == 0) {
      auto s = cur;
      std::sort(s.begin(), s.end());
      found.insert(canonical(s, M));
      return;
    }
    for (std::size_t i = from; i < orbs.size(); ++i) {
      int sz = static_cast<int>(orbs[i].size());
      if (sz > left) continue;
      cur.insert(cur.end(), orbs[i].begin(), orbs[i].end());
      self(self, i, left - sz);
      cur.resize(cur.size() - sz);
    }
  };
  rec(rec, 0, n);
  std::vector<SemisimpleClass> out;
  for (const auto& s : found) {
    SemisimpleClass c;
    c.eigenvalues = s;
    fill_class(c, M);
    out.push_back(std::move(c));
  }
  return out;
}

SemisimpleClass special_class(int n, int t, long long q) {
  require(t >= 1 && n % t == 0, "t must divide n");
  require(std::gcd(static_cast<long long>(t), q) == 1, "t must be prime to p");
  FieldModel M(n, q);
  require(M.order % t == 0, "t does not divide the working field order");
  std::vector<long long> s;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < n / t; ++j) s.push_back(i * (M.order / t));
  std::sort(s.begin(), s.end());
  SemisimpleClass c;
  c.eigenvalues = canonical(s, M);
  fill_class(c, M);
  return c;
}

ParamSet param_set_bar(const orbits::CyclicF& omega, const EOrbit& e) {
  require(omega.order % e.stabilizer_order == 0, "stabilizer order must divide |Ω_s|");
  orbits::CyclicF sub(e.stabilizer_order, omega.multiplier);
  ParamSet ps;
  ps.g = sub.fixed_count();
  ps.base_point = e.a_E;
  for (int a = 0; a < ps.g; ++a)
    for (int b = 0; b < ps.g; ++b) ps.elements.push_back({a, b});
  return ps;
}

std::size_t param_set_fixed_side_size(const orbits::CyclicF& omega, const EOrbit& e) {
  orbits::CyclicF sub(e.stabilizer_order, omega.multiplier);
  return sub.stable_characters().size() * sub.fixed_points().size();
}

ParamSet param_set_bar_N(int t, const Partition& mu, int p, long long q) {
  auto qd = orbits::zm1_quotient(mu, t, p, q);
  ParamSet ps;
  ps.g = qd.A_bar.coinvariant_count();
  require(ps.g == qd.A_bar.fixed_count(), "coinvariants and fixed points differ");
  for (int a = 0; a < ps.g; ++a)
    for (int b = 0; b < ps.g; ++b) ps.elements.push_back({a, b});
  return ps;
}

Bijection27 bijection_27(int t, long long q) {
  orbits::CyclicF om(t, q), ab(t, q);
  require(om.fixed_count() == ab.coinvariant_count() && om.coinvariant_count() == ab.fixed_count(),
          "order mismatch");
  Bijection27 b;
  b.g = om.fixed_count();
  for (int i = 0; i < b.g; ++i) {
    b.f.push_back(i);
    b.h.push_back(i);
    b.f2.push_back(i);
    b.h2.push_back(i);
  }
  return b;
}

std::uint64_t irr_count(int n, long long q) {
  std::uint64_t total = 0;
  for (const auto& c : enumerate_semisimple_classes(n, q))
    for (const auto& e : c.stable_orbits) total += param_set_bar(c.omega, e).elements.size();
  return total;
}

CenterSizes center_sizes(int d, int r, long long q) {
  require(d >= 1 && r >= 1 && q >= 2, "bad arguments");
  long long m = q - 1;
  // F_q^* ≅ Z/(q-1): d-torsion and image of z ↦ z^d, taken in each of r factors
  std::uint64_t tors = 0;
  std::set<long long> img;
  for (long long z = 0; z < m; ++z) {
    if ((z * d) % m == 0) ++tors;
    img.insert((z * d) % m);
  }
  CenterSizes s{1, 1};
  for (int i = 0; i < r; ++i) {
    s.lhs *= static_cast<std::uint64_t>(m) / tors;
    s.rhs *= img.size();
  }
  return s;
}

}  // namespace slnchar::lseries
