#include "slnchar/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <numeric>

#include "slnchar/almost.hpp"
#include "slnchar/errors.hpp"
#include "slnchar/fforacle.hpp"
#include "slnchar/gggr.hpp"
#include "slnchar/green.hpp"
#include "slnchar/lseries.hpp"
#include "slnchar/sheaves.hpp"
#include "slnchar/springer.hpp"

namespace slnchar::verify {

Json SuiteResult::to_json() const {
  return Json{{"suite", suite}, {"pass", pass},       {"checks", checks},
              {"failures", failures}, {"detail", detail}, {"seconds", seconds}};
}

namespace {

void check(SuiteResult& r, bool ok, const std::string& what) {
  ++r.checks;
  if (ok) return;
  r.pass = false;
  if (r.failures.size() < 20) r.failures.push_back(what);
}

template <class T>
T param(const Json& p, const char* key, T dflt) {
  return p.contains(key) ? p.at(key).get<T>() : dflt;
}

bool block_is_stable(const springer::Block& b, long long q) {
  return mod_floor(static_cast<long long>(b.eps) * (q - 1), b.n_prime) == 0;
}

void suite_irr_count(SuiteResult& r, const Json& p) {
  std::vector<std::pair<int, long long>> cases;
  if (p.contains("n") && p.contains("q"))
    cases.emplace_back(p.at("n").get<int>(), p.at("q").get<long long>());
  else
    cases = {{2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 4}};
  Json rows = Json::array();
  for (auto [n, q] : cases) {
    auto expected = fforacle::conjugacy_classes(n, static_cast<int>(q)).classes.size();
    auto got = lseries::irr_count(n, q);
    check(r, got == expected, "irr_count(" + std::to_string(n) + "," + std::to_string(q) + ")");
    rows.push_back(Json{{"n", n}, {"q", q}, {"expected", expected}, {"got", got}});
  }
  if (rows.size() == 1) {
    r.detail = rows[0];
  } else {
    r.detail["cases"] = rows;
  }
}

void suite_census(SuiteResult& r, const Json& p) {
  int nmax = param(p, "n_max", 30);
  auto ps = param(p, "primes", std::vector<int>{2, 3, 5, 7});
  for (int n = 1; n <= nmax; ++n)
    for (int pr : ps) {
      auto l = springer::census_lhs(n, pr), rr = springer::census_rhs(n, pr);
      check(r, l == rr, "census n=" + std::to_string(n) + " p=" + std::to_string(pr));
    }
  r.detail = Json{{"n_max", nmax}, {"primes", ps}};
}

void suite_kostka(SuiteResult& r, const Json& p) {
  int nmax = param(p, "n_max", 6);
  for (int n = 1; n <= nmax; ++n)
    for (const auto& la : partitions_of(n))
      for (const auto& mu : partitions_of(n)) {
        auto k = green::kostka(la, mu);
        std::string tag = la.str() + "|" + mu.str();
        if (la == mu) check(r, k == green::IntPolynomial{1}, "K_λλ " + tag);
        if (!dominates(la, mu))
          check(r, k.empty(), "dominance " + tag);
        else
          check(r, static_cast<int>(k.size()) - 1 == mu.n_invariant() - la.n_invariant(), "degree " + tag);
        check(r, static_cast<std::uint64_t>(green::poly_eval(k, 1)) == brute_ssyt_count(la, mu), "K(1) " + tag);
      }
  r.detail = Json{{"n_max", nmax}};
}

void suite_bp_rescaling(SuiteResult& r, const Json& p) {
  int nmax = param(p, "n_max", 12);
  int pr = param(p, "p", 13);
  long long pairs = 0;
  for (int n = 1; n <= nmax; ++n)
    for (const auto& blk : springer::blocks(n, pr)) {
      auto members = springer::block_members(blk);
      for (const auto& a : members)
        for (const auto& c : members) {
          auto bp = green::bp_polynomial(a, c, blk);
          if (bp.empty()) continue;
          ++pairs;
          // t^{D/2} BP(t⁻¹) with D = dim O_{ι′} − dim O_{ι″}
          int D = orbits::orbit_dims(c.orbit).dim_orbit - orbits::orbit_dims(a.orbit).dim_orbit;
          std::string tag = a.orbit.str() + "," + c.orbit.str() + " d=" + std::to_string(blk.d);
          check(r, D % 2 == 0 && static_cast<int>(bp.size()) - 1 <= D / 2, "rescaled P is a polynomial " + tag);
          green::IntPolynomial resc(D / 2 + 1, 0);
          for (std::size_t i = 0; i < bp.size() && static_cast<int>(i) <= D / 2; ++i) resc[D / 2 - i] = bp[i];
          resc = green::trim(resc);
          check(r, resc == green::p_polynomial(a, c, blk), "round trip " + tag);
          if (!(a == c)) check(r, !resc.empty() && resc[0] == 0, "divisible by t " + tag);
        }
    }
  r.detail = Json{{"n_max", nmax}, {"p", pr}, {"nonzero_pairs", pairs}};
}

void suite_lemma511_512(SuiteResult& r, const Json& p) {
  int nmax = param(p, "n_max", 6);
  for (int pr : {2, 3, 5, 7})
    for (int n = 1; n <= nmax; ++n)
      for (long long q : {static_cast<long long>(pr), static_cast<long long>(pr) * pr})
        for (const auto& b : springer::blocks(n, pr)) {
          if (!block_is_stable(b, q)) continue;
          int g = gggr::coinvariant_order(Partition({n}), pr, q);
          for (int c0 = 0; c0 < g; ++c0)
            for (int c = 0; c < g; ++c)
              for (const auto& iota : springer::block_members(b)) {
                gggr::TwistContext ctx{q, c0, Zeta::symbolic()};
                check(r, gggr::gggr_x_inner(c, Partition({n}), iota, b, ctx) == gggr::gggr_x_inner_regular(c, iota, b, ctx),
                      "n=" + std::to_string(n) + " q=" + std::to_string(q) + " ι=" + iota.orbit.str());
              }
        }
  r.detail = Json{{"n_max", nmax}};
}

void suite_omega(SuiteResult& r, const Json& p) {
  int nmax = param(p, "n_max", 8);
  for (int n = 1; n <= nmax; ++n)
    for (const auto& blk : springer::blocks(n, 3)) {
      auto m = springer::block_members(blk);
      for (const auto& a : m)
        for (const auto& c : m)
          check(r, green::omega(a, c, blk) == green::omega(c, a, blk), "ω symmetry " + a.orbit.str() + "," + c.orbit.str());
    }
  auto bl = springer::blocks(2, 3);
  springer::PairLabel reg{Partition({2}), 0};
  auto w = green::omega(reg, reg, bl[0]);
  auto x = green::x_inner(reg, reg, bl[0]);
  check(r, w == CycLaurent::u_power(4), "ω_reg,reg = q²");
  check(r, x == LaurentFraction(CycLaurent::u_power(2), CycLaurent::from_q_poly({-1, 0, 1})), "⟨X,X⟩ = q/(q²−1)");
  r.detail["omega_reg_reg"] = w.str();
  r.detail["x_reg_reg"] = x.str();

  const int q = 3;
  for (int n : {2, 3}) {
    auto census = fforacle::conjugacy_classes(n, q);
    auto F = fforacle::Field::get(q);
    std::map<Partition, Rational> ygram;
    for (const auto& cl : census.classes) {
      auto ty = fforacle::unipotent_type(*F, cl.representative);
      if (!ty.empty()) ygram[ty] += Rational(1, static_cast<long>(cl.centralizer));
    }
    for (const auto& blk : springer::blocks(n, F->p())) {
      auto m = springer::block_members(blk);
      for (const auto& a : m)
        for (const auto& c : m) {
          Rational s = 0;
          for (const auto& e : m)
            s += to_rational(green::poly_eval(green::bp_polynomial(e, a, blk), q) *
                             green::poly_eval(green::bp_polynomial(e, c, blk), q)) *
                 ygram[e.orbit];
          check(r, green::x_inner(a, c, blk).evaluate_exact(q) == Cyclotomic(s),
                "Gram n=" + std::to_string(n) + " " + a.orbit.str() + "," + c.orbit.str());
        }
    }
  }
}

void suite_unitarity(SuiteResult& r, const Json& p) {
  int tmax = param(p, "t_max", 24);
  int bmax = param(p, "bijection_t_max", 12);
  for (int t = 1; t <= tmax; ++t)
    for (int qm = 0; qm < t; ++qm) {
      if (std::gcd(qm, t) != 1) continue;
      almost::Context ctx(t, qm + t);
      auto m = almost::transform_matrix(ctx);
      check(r, almost::is_unitary(m), "unitary t=" + std::to_string(t) + " q≡" + std::to_string(qm));
    }
  for (int t = 1; t <= bmax; ++t)
    for (int qm = 0; qm < t; ++qm) {
      if (std::gcd(qm, t) != 1) continue;
      long long q = qm + t;
      auto b = lseries::bijection_27(t, q);
      int g = b.g;
      orbits::CyclicF om(t, q);
      auto fixed = om.fixed_points();
      auto stable = om.stable_characters();
      std::string tag = "t=" + std::to_string(t) + " q≡" + std::to_string(qm);
      bool sizes = static_cast<int>(fixed.size()) == g && static_cast<int>(stable.size()) == g;
      check(r, sizes, "sizes " + tag);
      if (!sizes) continue;
      for (int ie = 0; ie < g; ++ie)
        for (int iz = 0; iz < g; ++iz)
          for (int ie2 = 0; ie2 < g; ++ie2)
            for (int iz2 = 0; iz2 < g; ++iz2) {
              int eps = stable[ie], z = fixed[iz];
              auto lhs1 = Cyclotomic::root_of_unity(t, static_cast<long long>(eps) * iz2);
              auto lhs2 = Cyclotomic::root_of_unity(g, static_cast<long long>(ie2) * (z / (t / g)));
              int c = fixed[b.f2[ie]], xi = stable[b.h2[iz]];
              int c2 = b.f[ie2], xi2 = b.h[iz2];
              auto rhs1 = Cyclotomic::root_of_unity(g, static_cast<long long>(xi2) * (c / (t / g)));
              auto rhs2 = Cyclotomic::root_of_unity(t, static_cast<long long>(xi) * c2);
              check(r, lhs1 == rhs1 && lhs2 == rhs2, "compatibility " + tag);
            }
    }
  r.detail = Json{{"t_max", tmax}, {"bijection_t_max", bmax}};
}

void suite_cuspidal_scalar(SuiteResult& r, const Json&) {
  Json c0s = Json::array();
  for (int q : {3, 5, 7}) {
    auto res = fforacle::solve_twist_c0(2, q, Partition({2}));
    check(r, res.c0 == 0, "c0 trivial q=" + std::to_string(q));
    c0s.push_back(Json{{"q", q}, {"c0", res.c0}});
  }
  r.detail["sl2_c0"] = c0s;
  for (auto [t, q] : {std::pair{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 7}}) {
    almost::Context ctx(t, q);
    for (int z : ctx.fixed_points())
      for (int eps : ctx.stable_characters())
        for (int c0 = 0; c0 < ctx.g(); ++c0)
          for (auto zeta : {Zeta::symbolic(), Zeta::explicit_value(1)}) {
            auto ex = almost::extract_cuspidal_scalar(z, eps, ctx, zeta, c0);
            auto expect = zeta.apply(-1, CycLaurent(Cyclotomic::root_of_unity(t, -static_cast<long long>(eps) * c0)));
            check(r, ex.single_support && ex.scalar == expect,
                  "scalar t=" + std::to_string(t) + " q=" + std::to_string(q) + " ε=" + std::to_string(eps));
          }
  }
}

// every admissible (n ≤ n_max, t | n, d | t, q, E, z)
template <class F>
long long for_each_zE_case(int nmax, const std::vector<long long>& qs, F&& f) {
  long long cases = 0;
  for (int n = 1; n <= nmax; ++n)
    for (int t : divisors(n))
      for (int d : divisors(t))
        for (long long q : qs) {
          if (std::gcd<long long>(t, q) != 1) continue;
          auto ctx = sheaves::endomorphism_data(n, t, d, q);
          for (const auto& nu : partitions_of(ctx.b))
            for (int w : sheaves::admissible_twists(ctx))
              for (int z = 0; z < d; ++z) {
                f(ctx, ExtendedCharLabel{SnCharLabel(nu), ctx.k, w}, z);
                ++cases;
              }
        }
  return cases;
}

void suite_zE(SuiteResult& r, const Json& p) {
  int nmax = param(p, "n_max", 8);
  auto qs = param(p, "q", std::vector<long long>{3, 4, 5});
  long long cases = for_each_zE_case(nmax, qs, [&](const sheaves::EndoData& ctx, const ExtendedCharLabel& E, int z) {
    std::string tag = "n=" + std::to_string(ctx.n) + " t=" + std::to_string(ctx.t) + " d=" + std::to_string(ctx.d) +
                      " q=" + std::to_string(ctx.q) + " ν=" + E.base.partition.str() + " w=" + std::to_string(E.twist);
    try {
      auto res = sheaves::locate_zE(E, ctx, z);
      check(r, res.z_E < ctx.t, tag);
    } catch (const UniquenessViolation& e) {
      check(r, false, tag + ": " + e.what());
    }
  });
  int bij = 0;
  for (int k = 1; k <= 24; ++k)
    for (int q = 0; q < k; ++q) {
      check(r, sheaves::psi_bijection_holds(k, q), "Ψ bijection k=" + std::to_string(k));
      ++bij;
    }
  r.detail = Json{{"n_max", nmax}, {"q", qs}, {"cases", cases}, {"psi_bijection_checks", bij}};
}

void suite_nu_scalar(SuiteResult& r, const Json& p) {
  int nmax = param(p, "n_max", 8);
  auto qs = param(p, "q", std::vector<long long>{3, 4, 5});
  std::vector<Zeta> zetas{Zeta::symbolic(), Zeta::explicit_value(0), Zeta::explicit_value(1), Zeta::explicit_value(2),
                          Zeta::explicit_value(3)};
  long long records = 0;
  for_each_zE_case(nmax, qs, [&](const sheaves::EndoData& ctx, const ExtendedCharLabel& E, int z) {
    auto res = sheaves::locate_zE(E, ctx, z);
    for (int e = 0; e < ctx.d; ++e) {
      int eps1 = sheaves::eps1_pullback(e, ctx.d, res.orbit, ctx.t);
      for (int c0 = 0; c0 < ctx.t; ++c0)
        for (int x = 0; x < ctx.k; ++x)
          for (const auto& zeta : zetas) {
            auto rec = sheaves::nu_scalar(ctx.t, eps1, c0, zeta, res.alpha_E, Cyclotomic::root_of_unity(ctx.k, -x));
            check(r, rec.unit_modulus(), "modulus n=" + std::to_string(ctx.n));
            ++records;
          }
    }
  });
  long long reductions = 0;
  for (auto [t, q] : {std::pair{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 7}}) {
    almost::Context ctx(t, q);
    for (int z : ctx.fixed_points())
      for (int eps : ctx.stable_characters())
        for (int c0 = 0; c0 < ctx.g(); ++c0)
          for (auto zeta : {Zeta::symbolic(), Zeta::explicit_value(1)}) {
            auto ex = almost::extract_cuspidal_scalar(z, eps, ctx, zeta, c0);
            // d = t: Ω trivial, α_E = 1, no central correction
            auto loc = sheaves::locate_zE(ExtendedCharLabel{SnCharLabel(Partition({1})), 1, 0},
                                          sheaves::endomorphism_data(t, t, t, q), z % t);
            auto rec = sheaves::nu_scalar(t, eps, c0, zeta, loc.alpha_E);
            check(r, loc.z_E == z % t && rec.product() == ex.scalar, "d=t reduction t=" + std::to_string(t));
            ++reductions;
          }
  }
  r.detail = Json{{"records", records}, {"cuspidal_reductions", reductions}};
}

const std::map<std::string, std::function<void(SuiteResult&, const Json&)>>& registry() {
  static const std::map<std::string, std::function<void(SuiteResult&, const Json&)>> m{
      {"irr-count", suite_irr_count},       {"census", suite_census},
      {"kostka", suite_kostka},             {"bp-rescaling", suite_bp_rescaling},
      {"lemma511-512", suite_lemma511_512}, {"omega", suite_omega},
      {"unitarity", suite_unitarity},       {"cuspidal-scalar", suite_cuspidal_scalar},
      {"zE", suite_zE},                     {"nu-scalar", suite_nu_scalar}};
  return m;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, f] : registry()) v.push_back(k);
    return v;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const Json& params) {
  auto it = registry().find(name);
  if (it == registry().end()) throw InvalidArgument("unknown suite: " + name);
  SuiteResult r;
  r.suite = name;
  auto t0 = std::chrono::steady_clock::now();
  it->second(r, params);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::uint64_t brute_ssyt_count(const Partition& lambda, const Partition& mu) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
  int L = mu.length();
  std::vector<std::vector<int>> T(lambda.length());
  for (int r = 0; r < lambda.length(); ++r) T[r].assign(lambda[r], 0);
  std::vector<int> used(L + 1, 0);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[i];
    for (int x = 1; x <= L; ++x) {
      if (used[x] == mu[x - 1]) continue;
      if (c > 0 && T[r][c - 1] > x) continue;
      if (r > 0 && T[r - 1][c] >= x) continue;
      T[r][c] = x;
      ++used[x];
      self(self, i + 1);
      --used[x];
    }
    T[r][c] = 0;
  };
  rec(rec, 0);
  return count;
}

}  // namespace slnchar::verify
