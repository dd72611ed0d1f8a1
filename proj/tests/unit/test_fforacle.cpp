#include <doctest.h>

#include <random>

#include "slnchar/errors.hpp"
#include "slnchar/fforacle.hpp"

using namespace slnchar;
using namespace slnchar::fforacle;

TEST_CASE("field axioms and Frobenius") {
  std::mt19937 rng(12345);
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64}) {
    auto F = Field::get(q);
    std::uniform_int_distribution<int> d(0, q - 1);
    for (int t = 0; t < 1000; ++t) {
      int x = d(rng), y = d(rng), z = d(rng);
      REQUIRE(F->frobenius(F->add(x, y)) == F->add(F->frobenius(x), F->frobenius(y)));
      REQUIRE(F->frobenius(F->mul(x, y)) == F->mul(F->frobenius(x), F->frobenius(y)));
      REQUIRE(F->mul(x, F->add(y, z)) == F->add(F->mul(x, y), F->mul(x, z)));
      if (x) REQUIRE(F->mul(x, F->inv(x)) == 1);
    }
    // the generator is primitive
    int g = F->generator(), o = 1;
    for (int x = g; x != 1; x = F->mul(x, g)) ++o;
    CHECK(o == q - 1);
  }
}

TEST_CASE("group enumeration sizes") {
  CHECK(GroupEnumeration(2, 3).size() == 24);
  CHECK(GroupEnumeration(2, 4).size() == 60);
  CHECK(GroupEnumeration(3, 2).size() == 168);
  CHECK(sl_order(3, 4) == 60480);
  CHECK_THROWS_AS(GroupEnumeration(3, 7), CapExceeded);
  CHECK_THROWS_AS(GroupEnumeration(2, 5, 100), CapExceeded);
}

TEST_CASE("conjugacy class counts") {
  CHECK(conjugacy_classes(2, 3).classes.size() == 7);
  CHECK(conjugacy_classes(2, 4).classes.size() == 5);
  CHECK(conjugacy_classes(2, 5).classes.size() == 9);
  CHECK(conjugacy_classes(2, 7).classes.size() == 11);
  CHECK(conjugacy_classes(3, 2).classes.size() == 6);
}

TEST_CASE("census invariants") {
  for (auto [n, q] : {std::pair{2, 3}, {2, 4}, {2, 5}, {3, 2}, {2, 9}}) {
    auto c = conjugacy_classes(n, q);
    std::uint64_t s = 0;
    for (const auto& cl : c.classes) {
      s += cl.size;
      CHECK(c.group_order % cl.size == 0);
      CHECK(cl.size * cl.centralizer == c.group_order);
    }
    CHECK(s == c.group_order);
    for (std::size_t i = 1; i < c.classes.size(); ++i)
      CHECK(c.classes[i - 1].representative < c.classes[i].representative);
  }
}

TEST_CASE("unipotent centralizers") {
  CHECK(unipotent_centralizer_order(2, 3, Partition({2})) == 6);
  CHECK(unipotent_centralizer_order(2, 3, Partition({1, 1})) == 24);
  CHECK(unipotent_centralizer_order(3, 2, Partition({3})) == 4);
}

TEST_CASE("unipotent classes split according to A_G(u)_F") {
  // SL_2(F_q), q odd: the regular unipotent class splits into two rational classes
  for (int q : {3, 5, 7}) {
    auto c = conjugacy_classes(2, q);
    auto F = Field::get(q);
    int reg = 0;
    for (const auto& cl : c.classes)
      if (unipotent_type(*F, cl.representative) == Partition({2})) ++reg;
    CHECK(reg == 2);
  }
  auto c = conjugacy_classes(2, 4);
  int reg = 0;
  for (const auto& cl : c.classes)
    if (unipotent_type(*Field::get(4), cl.representative) == Partition({2})) ++reg;
  CHECK(reg == 1);
}

TEST_CASE("twist class c0") {
  for (int q : {3, 5, 7}) {
    auto r = solve_twist_c0(2, q, Partition({2}));
    CHECK(r.c0 == 0);
    auto F = Field::get(q);
    Matrix lhs = mat_mul(*F, mat_mul(*F, r.conjugator, r.N_c0), mat_inverse(*F, r.conjugator));
    CHECK(lhs == mat_scale(*F, F->neg(1), r.N_star));
    CHECK(mat_det(*F, r.conjugator) == 1);
  }
  CHECK(solve_twist_c0(2, 3, Partition({1, 1})).c0 == 0);
  CHECK_THROWS(solve_twist_c0(3, 3, Partition({3})));
  CHECK(solve_twist_c0(3, 7, Partition({3})).c0 == 0);
}

TEST_CASE("twisted nilpotents represent distinct rational classes") {
  // for SL_2(F_q), N_0 and N_1 are not SL_2(F_q)-conjugate
  for (int q : {3, 5}) {
    GroupEnumeration G(2, q);
    auto F = Field::get(q);
    Matrix N0 = twisted_nilpotent(*F, Partition({2}), 0), N1 = twisted_nilpotent(*F, Partition({2}), 1);
    bool conj = false;
    for (std::size_t h = 0; h < G.size(); ++h)
      if (mat_mul(*F, mat_mul(*F, G[h], N0), G.inverse(h)) == N1) conj = true;
    CHECK_FALSE(conj);
  }
}
