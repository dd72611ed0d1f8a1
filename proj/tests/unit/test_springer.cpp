#include <doctest.h>

#include "slnchar/springer.hpp"

using namespace slnchar;
using namespace slnchar::springer;

TEST_CASE("block lists") {
  auto b = blocks(2, 3);
  REQUIRE(b.size() == 2);
  CHECK(b[0].d == 1);
  CHECK(block_members(b[0]).size() == 2);
  CHECK(b[1].d == 2);
  CHECK(block_members(b[1]).size() == 1);
  CHECK(blocks(2, 2).size() == 1);
  auto b4 = blocks(4, 3);
  REQUIRE(b4.size() == 4);
  CHECK(block_members(b4[0]).size() == 5);
  CHECK(block_members(b4[1]).size() == 2);
  CHECK(b4[2].d == 4);
  CHECK(b4[3].d == 4);
  CHECK(b4[2].eps != b4[3].eps);
}

TEST_CASE("correspondence on SL_2") {
  auto b = blocks(2, 3);
  CHECK(springer_map(b[0], Partition({2})) == PairLabel{Partition({2}), 0});
  CHECK(springer_map(b[0], Partition({1, 1})) == PairLabel{Partition({1, 1}), 0});
  CHECK(springer_map(b[1], Partition({1})) == PairLabel{Partition({2}), 1});
}

TEST_CASE("census identity and inverse") {
  for (int p : {2, 3, 5, 7})
    for (int n = 1; n <= 30; ++n) CHECK(census_lhs(n, p) == census_rhs(n, p));
  for (int p : {2, 3, 5})
    for (int n = 1; n <= 20; ++n)
      for (const auto& b : blocks(n, p))
        for (const auto& mb : partitions_of(b.rank())) {
          auto iota = springer_map(b, mb);
          CHECK(iota.orbit.all_divisible_by(b.d));
          auto back = springer_inverse(n, p, iota);
          CHECK(back.block == b);
          CHECK(back.mu_bar == mb);
        }
}

TEST_CASE("b-values") {
  auto b = blocks(2, 3);
  auto v = b_values(PairLabel{Partition({2}), 0}, b[0]);
  CHECK(v.b_u == 0);
  CHECK(v.b0_u == 0);
  v = b_values(PairLabel{Partition({2}), 1}, b[1]);
  CHECK(v.b_u == 0);
  CHECK(v.b0_u == 1);
  CHECK(b_values(PairLabel{Partition({1, 1}), 0}, b[0]).b_u == 2);
  CHECK_THROWS(b_values(PairLabel{Partition({1, 1}), 0}, b[1]));
  for (int n = 1; n <= 15; ++n)
    for (const auto& bl : blocks(n, 5))
      for (const auto& iota : block_members(bl)) CHECK(b_values(iota, bl).b_u >= 0);
}

TEST_CASE("wave-front set") {
  CHECK(wave_front({Partition({2, 1})}) == Partition({2, 1}));
  CHECK(wave_front({Partition({1}), Partition({1})}) == Partition({2}));
  CHECK(wave_front({Partition({2}), Partition({2})}) == Partition({2, 2}));
}
