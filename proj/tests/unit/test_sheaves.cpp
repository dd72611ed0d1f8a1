#include <doctest.h>

#include <numeric>

#include "slnchar/almost.hpp"
#include "slnchar/errors.hpp"
#include "slnchar/sheaves.hpp"

using namespace slnchar;
using namespace slnchar::sheaves;

TEST_CASE("cuspidal census") {
  CHECK(cuspidal_census(2, 3, 3).count() == 2);
  CHECK(cuspidal_census(2, 4, 2).count() == 0);
  CHECK(cuspidal_census(3, 4, 2).count() == 6);
  CHECK(cuspidal_census(3, 5, 5).count() == 0);  // q ≢ 1 mod 3: no stable faithful ε
  for (int n = 2; n <= 8; ++n)
    for (int p : {2, 3, 5, 7})
      for (long long q : {static_cast<long long>(p), static_cast<long long>(p) * p}) {
        auto c = cuspidal_census(n, q, p);
        if (c.n_prime == 1) {
          CHECK(c.count() == 0);
          continue;
        }
        orbits::CyclicF Z(c.n_prime, q);
        int faithful = 0;
        for (int e : Z.stable_characters())
          if (std::gcd(e, c.n_prime) == 1) ++faithful;
        CHECK(c.count() == static_cast<std::size_t>(Z.fixed_count() * faithful));
      }
  CHECK_THROWS_AS(cuspidal_census(2, 6, 2), InvalidArgument);
}

TEST_CASE("endomorphism data") {
  auto a = endomorphism_data(2, 2, 1, 3);
  CHECK(a.w0_factors == std::vector<int>{1, 1});
  CHECK(a.omega.order == 2);
  auto b = endomorphism_data(4, 2, 2, 5);
  CHECK(b.w0_factors == std::vector<int>{2});
  CHECK(b.omega.order == 1);
  auto c = endomorphism_data(4, 4, 2, 5);
  CHECK(c.w0_factors == std::vector<int>{1, 1});
  CHECK(c.omega.order == 2);
  CHECK(c.w_order() == 2);
  CHECK_THROWS_AS(endomorphism_data(4, 3, 1, 5), InvalidArgument);
  CHECK_THROWS_AS(endomorphism_data(4, 2, 1, 4), InvalidArgument);
}

TEST_CASE("family parameters") {
  auto f1 = family_param(2, {Partition({2}), Partition({1, 1})});
  CHECK(f1.stabilizer_order == 1);
  CHECK(f1.members.size() == 1);
  CHECK(f1.multiplicity[0][0] == Cyclotomic(1));

  auto f2 = family_param(1, {Partition({1}), Partition({1})});
  CHECK(f2.stabilizer_order == 2);
  CHECK(f2.members.size() == 4);
  for (const auto& row : f2.multiplicity)
    for (const auto& e : row) CHECK((e == Cyclotomic(Rational(1, 2)) || e == Cyclotomic(Rational(-1, 2))));
  CHECK(family_rows_normalized(f2));

  auto f3 = family_param(2, {Partition({2}), Partition({2}), Partition({2})});
  CHECK(f3.members.size() == 9);
  for (std::size_t a = 0; a < f3.members.size(); ++a) {
    CHECK(f3.signs[a] == 1);  // 3-cycles of blocks are even
    for (int th = 0; th < 3; ++th)
      CHECK(f3.multiplicity[a][th] ==
            Cyclotomic(Rational(1, 3)) * Cyclotomic::root_of_unity(3, -th * f3.members[a].x));
  }
  CHECK(family_rows_normalized(f3));

  auto f4 = family_param(1, {Partition({1}), Partition({1}), Partition({1}), Partition({1})});
  CHECK(f4.stabilizer_order == 4);
  CHECK(family_rows_normalized(f4));
}

TEST_CASE("X_M and Ψ") {
  CHECK(xm_group(2, 1, 3).order == 2);
  CHECK(xm_group(2, 1, 3).fixed_count() == 2);
  CHECK(xm_group(4, 2, 5).order == 2);
  CHECK(xm_group(5, 5, 2).order == 1);

  auto ctx2 = endomorphism_data(2, 2, 1, 3);
  CHECK(psi_character(0, ctx2).exponents == std::vector<int>{0, 0});
  CHECK(psi_character(1, ctx2).exponents == std::vector<int>{0, 1});  // sign of Z/2
  auto ctx3 = endomorphism_data(3, 3, 1, 4);
  CHECK(psi_character(1, ctx3).exponents == std::vector<int>{0, 2, 1});  // y₀ ↦ ζ₃⁻¹
  CHECK_THROWS_AS(psi_character(2, ctx2), InvalidArgument);

  for (int k = 1; k <= 24; ++k)
    for (int q = 0; q < k; ++q) CHECK(psi_bijection_holds(k, q));
}

TEST_CASE("ε₁ pullback") {
  CHECK(eps1_pullback(0, 2, Partition({4}), 4) == 0);
  CHECK(eps1_pullback(1, 4, Partition({4}), 4) == 1);
  CHECK(eps1_pullback(1, 2, Partition({4}), 4) == 2);  // order 2 in Z/4
  CHECK_THROWS_AS(eps1_pullback(1, 2, Partition({2, 2}), 4), InvalidArgument);
}

TEST_CASE("locate z_E for SL_2") {
  auto ctx = endomorphism_data(2, 2, 1, 3);
  ExtendedCharLabel triv{SnCharLabel(Partition({1})), 2, 0};
  ExtendedCharLabel sgn{SnCharLabel(Partition({1})), 2, 1};
  auto a = locate_zE(triv, ctx);
  auto b = locate_zE(sgn, ctx);
  // E_ι = χ^{(1,1)} restricts to the sign of Ω, so the sign twist is the one matched at x = 0
  CHECK(a.rho == Partition({1, 1}));
  CHECK(a.orbit == Partition({2}));
  CHECK(a.x_E == 1);
  CHECK(a.z_E == 1);
  CHECK(b.x_E == 0);
  CHECK(b.z_E == 0);
  CHECK(a.alpha_E == Cyclotomic(1));

  auto c = locate_zE(ExtendedCharLabel{SnCharLabel(Partition({1})), 1, 0}, endomorphism_data(2, 2, 2, 3), 1);
  CHECK(c.x_E == 0);
  CHECK(c.z_E == 1);
}

TEST_CASE("z_E uniqueness sweep") {
  int cases = 0;
  for (int n = 1; n <= 8; ++n)
    for (int t : divisors(n))
      for (int d : divisors(t))
        for (long long q : {3, 4, 5}) {
          if (std::gcd<long long>(t, q) != 1) continue;
          auto ctx = endomorphism_data(n, t, d, q);
          for (const auto& nu : partitions_of(ctx.b))
            for (int w : admissible_twists(ctx))
              for (int z = 0; z < d; ++z) {
                auto r = locate_zE(ExtendedCharLabel{SnCharLabel(nu), ctx.k, w}, ctx, z);
                CHECK(r.alpha_E * r.alpha_E.conj() == Cyclotomic(1));
                ++cases;
              }
        }
  CHECK(cases > 100);
}

TEST_CASE("ν_E assembly") {
  for (int qt : {0, 1, 2, 3}) {
    auto r = nu_scalar(1, 0, 0, Zeta::explicit_value(qt), Cyclotomic(1));
    CHECK(r.unit_modulus());
  }
  auto triv = nu_scalar(1, 0, 0, Zeta::explicit_value(0), Cyclotomic(1));
  CHECK(triv.product() == ZetaTerm{0, CycLaurent(1)});
  auto sl2 = nu_scalar(2, 1, 0, Zeta::symbolic(), Cyclotomic(1));
  CHECK(sl2.product() == ZetaTerm{3, CycLaurent(1)});
  CHECK_THROWS_AS(nu_scalar(2, 1, 0, Zeta::symbolic(), Cyclotomic(2)), InvalidArgument);

  // cuspidal reduction agrees with the extraction through the Γ pairing
  for (int t : {2, 3})
    for (long long q : {7LL, 13LL}) {
      almost::Context ctx(t, q);
      for (int c0 : ctx.fixed_points())
        for (int z : ctx.fixed_points())
          for (int e : ctx.stable_characters()) {
            auto ex = almost::extract_cuspidal_scalar(z, e, ctx, Zeta::symbolic(), c0);
            auto rec = nu_scalar(t, e, c0, Zeta::symbolic(), Cyclotomic(1));
            CHECK(rec.product() == ex.scalar);
            CHECK(rec.unit_modulus());
          }
    }
}
