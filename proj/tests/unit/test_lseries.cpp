#include <doctest.h>

#include <numeric>

#include "slnchar/cyclotomic.hpp"
#include "slnchar/errors.hpp"
#include "slnchar/fforacle.hpp"
#include "slnchar/lseries.hpp"

using namespace slnchar;
using namespace slnchar::lseries;

TEST_CASE("semisimple class enumeration for SL_2") {
  auto c3 = enumerate_semisimple_classes(2, 3);
  CHECK(c3.size() == 3);
  int with_omega = 0;
  for (const auto& c : c3)
    if (c.omega.order == 2) {
      ++with_omega;
      CHECK(c.w_shape == Partition({1, 1}));
    }
  CHECK(with_omega == 1);
  CHECK(enumerate_semisimple_classes(2, 5).size() == 5);
  CHECK(enumerate_semisimple_classes(2, 4).size() == 4);
  CHECK_THROWS_AS(enumerate_semisimple_classes(5, 3), CapExceeded);
}

TEST_CASE("class invariants") {
  for (auto [n, q] : {std::pair{2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 4}, {3, 7}, {4, 3}}) {
    for (const auto& c : enumerate_semisimple_classes(n, q)) {
      std::uint64_t ws = 1;
      for (int m : c.multiplicities) ws *= factorial(m);
      CHECK(factorial(n) % (ws * c.omega.order) == 0);
      CHECK(n % c.omega.order == 0);
      for (const auto& e : c.stable_orbits)
        CHECK(param_set_bar(c.omega, e).elements.size() == param_set_fixed_side_size(c.omega, e));
    }
  }
}

TEST_CASE("special classes") {
  auto s = special_class(2, 2, 3);
  CHECK(s.omega.order == 2);
  CHECK(special_class(4, 2, 3).w_shape == Partition({2, 2}));
  CHECK(special_class(4, 2, 3).omega.order == 2);
  auto s3 = special_class(3, 3, 4);
  CHECK(s3.w_shape == Partition({1, 1, 1}));
  CHECK(s3.omega.order == 3);
  CHECK(s3.omega.multiplier == 1);
  CHECK_THROWS(special_class(4, 3, 5));
  CHECK_THROWS(special_class(2, 2, 4));
}

TEST_CASE("parameter sets") {
  auto s = special_class(2, 2, 3);
  const EOrbit* triv = nullptr;
  for (const auto& e : s.stable_orbits)
    if (e.stabilizer_order == 2) triv = &e;
  REQUIRE(triv);
  CHECK(param_set_bar(s.omega, *triv).elements.size() == 4);
  auto s3 = special_class(3, 3, 4);
  CHECK(param_set_bar(s3.omega, s3.stable_orbits.at(0)).elements.size() == 9);
  CHECK(param_set_bar(orbits::CyclicF(1, 3), EOrbit{}).elements.size() == 1);
  CHECK(param_set_bar_N(2, Partition({2}), 3, 3).elements.size() == 4);
  CHECK_THROWS(param_set_bar_N(2, Partition({2}), 2, 4));
  CHECK(param_set_bar_N(3, Partition({3}), 2, 4).elements.size() == 9);
  CHECK_THROWS(param_set_bar_N(2, Partition({3}), 5, 5));
}

TEST_CASE("irreducible counts agree with class counts") {
  CHECK(irr_count(2, 3) == 7);
  CHECK(irr_count(2, 4) == 5);
  CHECK(irr_count(2, 5) == 9);
  for (auto [n, q] : {std::pair{2, 7}, {2, 8}, {2, 9}, {3, 2}, {3, 3}})
    CHECK(irr_count(n, q) == fforacle::conjugacy_classes(n, q).classes.size());
}

TEST_CASE("bijection_27 respects the pairings") {
  for (int t = 1; t <= 12; ++t)
    for (int qm = 0; qm < t; ++qm) {
      if (std::gcd(qm, t) != 1) continue;
      long long q = qm + t;  // any integer ≡ qm mod t
      auto b = bijection_27(t, q);
      int g = b.g;
      orbits::CyclicF om(t, q);
      auto fixed = om.fixed_points();
      auto stable = om.stable_characters();
      REQUIRE(static_cast<int>(fixed.size()) == g);
      REQUIRE(static_cast<int>(stable.size()) == g);
      CHECK(b.f[0] == 0);
      CHECK(b.h[0] == 0);
      // E side: ε ∈ (Ω∧)^F evaluated on z′ ∈ Ω_F; ε′ ∈ (Ω^F)∧ on z ∈ Ω^F
      // N side: ξ′ ∈ (Ā^F)∧ on c ∈ Ā^F; ξ ∈ (Ā∧)^F on c′ ∈ Ā_F
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
              CHECK(lhs1 == rhs1);
              CHECK(lhs2 == rhs2);
            }
    }
}

TEST_CASE("center size identity") {
  for (long long q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16})
    for (int d = 1; d <= 12; ++d)
      for (int r = 1; r <= 3; ++r) {
        auto s = center_sizes(d, r, q);
        CHECK(s.lhs == s.rhs);
      }
}
