#include <doctest.h>

#include <numeric>

#include "slnchar/laurent.hpp"
#include "slnchar/symmetric.hpp"

using namespace slnchar;

TEST_CASE("dual partition") {
  CHECK(Partition({3}).dual() == Partition({1, 1, 1}));
  CHECK(Partition({2, 1}).dual() == Partition({2, 1}));
  CHECK(Partition({4, 2, 1}).dual() == Partition({3, 2, 1, 1}));
  for (int n = 0; n <= 30; ++n)
    for (const auto& p : partitions_of(n)) REQUIRE(p.dual().dual() == p);
}

TEST_CASE("n invariant") {
  CHECK(Partition({5}).n_invariant() == 0);
  CHECK(Partition({1, 1, 1}).n_invariant() == 3);
  CHECK(Partition({2, 2}).n_invariant() == 2);
}

TEST_CASE("partition validation") {
  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(Partition({2, 0}));
  CHECK(Partition::parse("3,1,1") == Partition({3, 1, 1}));
  CHECK(partitions_of(6).size() == 11);
  CHECK(partition_count(30) == 5604);
}

TEST_CASE("sn character values") {
  CHECK(sn_char_value(Partition({2}), Partition({2})) == 1);
  CHECK(sn_char_value(Partition({1, 1}), Partition({2})) == -1);
  CHECK(sn_char_value(Partition({2, 1}), Partition({3})) == -1);
  CHECK(sn_char_value(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK_THROWS(sn_char_value(Partition({2}), Partition({1, 1, 1})));
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t s = 0;
    Partition ones = Partition(std::vector<int>(n, 1));
    for (const auto& l : partitions_of(n)) {
      long long d = sn_char_value(l, ones);
      s += d * d;
    }
    CHECK(s == factorial(n));
  }
}

TEST_CASE("column orthogonality") {
  for (int n = 1; n <= 7; ++n) {
    const auto& P = partitions_of(n);
    for (const auto& a : P)
      for (const auto& b : P) {
        long long s = 0;
        for (const auto& l : P) s += sn_char_value(l, a) * sn_char_value(l, b);
        REQUIRE(s == (a == b ? static_cast<long long>(a.z_order()) : 0));
      }
  }
}

TEST_CASE("sign character via Murnaghan-Nakayama") {
  for (const auto& rho : partitions_of(6)) {
    int sgn = ((6 - rho.length()) % 2) ? -1 : 1;
    CHECK(sn_char_value(Partition(std::vector<int>(6, 1)), rho) == sgn);
  }
}

TEST_CASE("restriction multiplicity") {
  auto L = [](std::vector<int> v) { return SnCharLabel(Partition(v)); };
  CHECK(restriction_multiplicity(L({2}), {L({1}), L({1})}) == 1);
  CHECK(restriction_multiplicity(L({2, 1}), {L({2}), L({1})}) == 1);
  CHECK(restriction_multiplicity(L({2, 1}), {L({1, 1}), L({1})}) == 1);
  CHECK(restriction_multiplicity(L({3, 2, 1}), {L({2, 1}), L({2, 1})}) == 2);
  CHECK(restriction_multiplicity(L({4}), {L({2}), L({1, 1})}) == 0);
  CHECK_THROWS(restriction_multiplicity(L({3}), {L({1})}));
}

TEST_CASE("extended characters") {
  ExtendedCharLabel triv{SnCharLabel(Partition({2})), 2, 0};
  ExtendedCharLabel sgnbase{SnCharLabel(Partition({1, 1})), 2, 0};
  ExtendedCharLabel tw{SnCharLabel(Partition({2})), 2, 1};
  Permutation id2{0, 1}, sw{1, 0};
  CHECK(extended_char_value(triv, 1, {id2, id2}) == CycLaurent(1));
  CHECK(extended_char_value(sgnbase, 1, {id2, id2}) == CycLaurent(1));
  CHECK(extended_char_value(sgnbase, 1, {sw, id2}) == CycLaurent(-1));
  CHECK(extended_char_value(tw, 1, {id2, id2}) == CycLaurent(-1));
  // j = 0 factorizes
  ExtendedCharLabel e{SnCharLabel(Partition({2, 1})), 3, 1};
  auto perms = all_permutations(3);
  for (const auto& a : perms)
    for (const auto& b : perms) {
      long long v = sn_char_value(Partition({2, 1}), cycle_type(a)) * sn_char_value(Partition({2, 1}), cycle_type(b)) *
                    sn_char_value(Partition({2, 1}), Partition({1, 1, 1}));
      CHECK(extended_char_value(e, 0, {a, b, perms[0]}) == CycLaurent(static_cast<long>(v)));
    }
}

TEST_CASE("extended characters have norm one on the wreath product") {
  // S_2 ≀ Z/2 of order 8: Σ |χ|² = |G| for every twist of every base
  auto perms = all_permutations(2);
  for (const auto& base : partitions_of(2))
    for (int tw = 0; tw < 2; ++tw) {
      ExtendedCharLabel E{SnCharLabel(base), 2, tw};
      CycLaurent s;
      for (int j = 0; j < 2; ++j)
        for (const auto& a : perms)
          for (const auto& b : perms) s += extended_char_value(E, j, {a, b}).abs2();
      CHECK(s == CycLaurent(8));
    }
}

TEST_CASE("cyclotomic arithmetic") {
  Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  CHECK(z3 * z3 * z3 == Cyclotomic(1));
  CHECK(Cyclotomic(1) + z3 + z3 * z3 == Cyclotomic(0));
  Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  CHECK(i * i == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(12, 3) == i);
  CHECK(Cyclotomic::root_of_unity(6, 2) == z3);
  Cyclotomic x = Cyclotomic(2) + z3;
  CHECK(x * x.inverse() == Cyclotomic(1));
  CHECK(z3.conj() == z3 * z3);
  CHECK(Cyclotomic::root_of_unity(2, 1) == Cyclotomic(-1));
  CHECK(std::abs(z3.to_complex() - std::complex<double>(-0.5, std::sqrt(3.0) / 2)) < 1e-12);
}

TEST_CASE("cyclotomic laurent") {
  CycLaurent u = CycLaurent::u_power(1);
  CycLaurent q = u * u;
  CHECK(q == CycLaurent::from_q_poly({0, 1}));
  CycLaurent a = q * q - CycLaurent(1);
  CHECK(a.divide_exact(q - CycLaurent(1)) == q + CycLaurent(1));
  CHECK_THROWS(a.divide_exact(q + CycLaurent(2)));
  CHECK(std::abs(u.evaluate(9.0) - 3.0) < 1e-12);
  CHECK(u.shifted(-2).evaluate_exact(4) == Cyclotomic(Rational(1, 2)));
  LaurentFraction f(q * q, q * q * q - q);
  CHECK(f == LaurentFraction(q, q * q - CycLaurent(1)));
  CHECK(f.evaluate_exact(3) == Cyclotomic(Rational(3, 8)));
  CHECK(f.den() == q * q - CycLaurent(1));
}

TEST_CASE("products of roots of unity have nonnegative norms under embeddings") {
  for (int N : {3, 4, 5, 8, 12}) {
    for (int a = 0; a < N; ++a) {
      CycLaurent x = CycLaurent::root_of_unity(N, a).shifted(a - 2) * CycLaurent::root_of_unity(N, 1);
      CycLaurent y = CycLaurent::root_of_unity(N, 2 * a + 1);
      CycLaurent p = x * y;
      for (int k = 1; k < N; ++k) {
        if (std::gcd(k, N) != 1) continue;
        CycLaurent g = p.galois(k);
        CycLaurent n2 = g * g.conj();
        CHECK(n2.has_rational_coeffs());
        CHECK(n2.evaluate(2.0).real() >= 0);
      }
    }
  }
}

TEST_CASE("unit sums") {
  UnitSum s(6);
  for (int k = 0; k < 6; ++k) s.add(k, Rational(1));
  CHECK(s.value() == Cyclotomic(0));
  UnitSum t(4);
  t.add(1, Rational(1, 2));
  t.add(5, Rational(1, 2));
  CHECK(t.value() == Cyclotomic::root_of_unity(4, 1));
}
