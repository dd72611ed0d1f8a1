#include <doctest.h>

#include <numeric>

#include "slnchar/almost.hpp"

using namespace slnchar;
using namespace slnchar::almost;

TEST_CASE("pairing values") {
  Context one(1, 3);
  CHECK(pairing({0, 0}, {0, 0}, one) == Cyclotomic(1));
  Context c2(2, 3);
  CHECK(pairing({1, 0}, {1, 0}, c2) == Cyclotomic(Rational(1, 2)));
  CHECK(pairing({1, 1}, {1, 1}, c2) == Cyclotomic(Rational(1, 2)));
  CHECK(pairing({1, 1}, {0, 1}, c2) == Cyclotomic(Rational(-1, 2)));
  CHECK_THROWS(pairing({1, 0}, {0, 0}, Context(3, 5)));
  CHECK_THROWS(Context(2, 4));
}

TEST_CASE("transform matrices") {
  auto m1 = transform_matrix(Context(1, 2));
  CHECK(m1.rows.size() == 1);
  CHECK(m1.entry(0, 0) == Cyclotomic(1));
  auto m2 = transform_matrix(Context(2, 3));
  CHECK(m2.rows.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      auto e = m2.entry(i, j);
      CHECK((e == Cyclotomic(Rational(1, 2)) || e == Cyclotomic(Rational(-1, 2))));
    }
  CHECK(is_unitary(m2));
  auto m3 = transform_matrix(Context(3, 4));
  CHECK(m3.rows.size() == 9);
  CHECK(is_unitary(m3));
}

TEST_CASE("exact unitarity for t ≤ 24, all q mod t") {
  for (int t = 1; t <= 24; ++t)
    for (int r = 0; r < t; ++r) {
      if (std::gcd(r, t) != 1) continue;
      Context ctx(t, r + t);
      auto m = transform_matrix(ctx);
      CHECK(is_unitary(m));
      CHECK(rows_normalized(m));
    }
}

TEST_CASE("closed-form inner products") {
  Context c2(2, 3);
  CHECK(gggr_vs_almost_inner(0, 0, 0, 0, c2) == Cyclotomic(Rational(1, 2)));
  CHECK(gggr_vs_almost_inner(0, 0, 0, 0, c2, false).is_zero());
  CHECK(gggr_vs_almost_inner(1, 1, 1, 1, c2) == Cyclotomic(Rational(1, 2)));
  CHECK(cuspidal_charfun_inner(0, 0, 0, 0, c2, Zeta::explicit_value(0), 0) == ZetaTerm{0, CycLaurent(Rational(1, 2))});
  CHECK(cuspidal_charfun_inner(0, 0, 0, 0, c2, Zeta::symbolic(), 0) == ZetaTerm{3, CycLaurent(Rational(1, 2))});
}

TEST_CASE("cuspidal scalar extraction") {
  for (auto [t, q] : {std::pair{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 7}, {4, 5}, {5, 11}}) {
    Context ctx(t, q);
    for (int z : ctx.fixed_points())
      for (int eps : ctx.stable_characters())
        for (int c0 = 0; c0 < ctx.g(); ++c0)
          for (auto zeta : {Zeta::symbolic(), Zeta::explicit_value(1)}) {
            auto ex = extract_cuspidal_scalar(z, eps, ctx, zeta, c0);
            REQUIRE(ex.single_support);
            CHECK(ex.row_independent);
            CHECK(ex.support_z == z);
            CHECK(ex.support_eps == (t - eps) % t);
            auto expect = zeta.apply(-1, CycLaurent(Cyclotomic::root_of_unity(t, -static_cast<long long>(eps) * c0)));
            CHECK(ex.scalar == expect);
          }
  }
}
