#include "oracles.hpp"

#include "flexcontact/errors.hpp"
#include "flexcontact/graded_group.hpp"

#include <doctest.h>

using namespace flexcontact;

TEST_CASE("rational parsing is exact") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidInput);
}

TEST_CASE("smith normal form of a known matrix") {
  IntegerMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto s = smith_normal_form(a);
  CHECK(s.invariant_factors() == std::vector<Integer>{2, 6, 12});
  CHECK(s.U * a * s.V == s.D);
  CHECK_NOTHROW(verify_smith_decomposition(a, s));
}

TEST_CASE("smith normal form of zero and empty matrices") {
  auto z = smith_normal_form(IntegerMatrix(3, 2));
  CHECK(z.rank() == 0);
  auto e = smith_normal_form(IntegerMatrix(0, 4));
  CHECK(e.rank() == 0);
}

TEST_CASE("smith diagonal agrees with the rational rank oracle on random matrices") {
  oracle::Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    auto a = oracle::random_matrix(rng, oracle::uniform(rng, 1, 6), oracle::uniform(rng, 1, 6), -5, 5);
    auto s = smith_normal_form(a);
    CHECK(s.rank() == oracle::rational_rank(a));
    CHECK(rational_rank(a) == oracle::rational_rank(a));
    if (a.rows() == a.cols()) {
      Integer product = 1;
      for (std::size_t i = 0; i < a.rows(); ++i) product *= s.D(i, i);
      CHECK(abs(Rational(product)) == abs(oracle::rational_determinant(a)));
    }
  }
}

TEST_CASE("abelian groups are canonical up to isomorphism") {
  CHECK(AbelianGroup::from_cyclic(0, {2, 3}) == AbelianGroup::from_cyclic(0, {6}));
  CHECK(!(AbelianGroup::from_cyclic(0, {2, 2}) == AbelianGroup::from_cyclic(0, {4})));
  CHECK(AbelianGroup::from_cyclic(1, {1, 4, 6}).torsion == std::vector<Integer>{2, 12});
  CHECK(to_string(AbelianGroup::from_cyclic(2, {2})) == "Z^2 + Z/2");
  CHECK(to_string(AbelianGroup{}) == "0");
}

TEST_CASE("dimensions over each coefficient ring") {
  auto g = AbelianGroup::from_cyclic(1, {2, 3, 4});
  CHECK(g.dimension(Coefficients::Rationals) == 1);
  CHECK(g.dimension(Coefficients::Integers) == 1);
  CHECK(g.dimension(Coefficients::F2) == 3);
}

TEST_CASE("remove_summand inverts direct_sum") {
  auto a = AbelianGroup::from_cyclic(1, {4, 9});
  auto c = AbelianGroup::from_cyclic(2, {2, 3});
  CHECK(remove_summand(direct_sum(a, c), c) == a);
  CHECK_THROWS_AS(remove_summand(a, AbelianGroup::from_cyclic(0, {8})), InvalidInput);
}

TEST_CASE("cancel_summand detects isomorphism and non-isomorphism") {
  GradedGroup a, b, c;
  a.set(1, AbelianGroup::from_cyclic(1, {}));
  b.set(1, AbelianGroup::from_cyclic(0, {2}));
  c.set(1, AbelianGroup::from_cyclic(0, {2}));
  auto same = cancel_summand(direct_sum(a, c), direct_sum(c, a), c);
  CHECK(same.isomorphic);
  auto different = cancel_summand(direct_sum(a, c), direct_sum(b, c), c);
  CHECK(!different.isomorphic);
}

TEST_CASE("homology of simple complexes") {
  SUBCASE("RP^2 cellular complex") {
    ChainComplex c;
    c.set_generators(0, 1);
    c.set_generators(1, 1);
    c.set_generators(2, 1);
    c.set_boundary(2, IntegerMatrix{{2}});
    auto h = homology(c);
    CHECK(h.at(0) == AbelianGroup::from_cyclic(1, {}));
    CHECK(h.at(1) == AbelianGroup::from_cyclic(0, {2}));
    CHECK(h.at(2).is_zero());
    CHECK(euler_characteristic(h) == chain_euler_characteristic(c));
  }
  SUBCASE("boundary composition must vanish") {
    ChainComplex c;
    c.set_generators(0, 1);
    c.set_generators(1, 1);
    c.set_generators(2, 1);
    c.set_boundary(1, IntegerMatrix{{1}});
    c.set_boundary(2, IntegerMatrix{{1}});
    CHECK_THROWS_AS(c.validate(), InvalidInput);
  }
  SUBCASE("shape mismatch is rejected") {
    ChainComplex c;
    c.set_generators(0, 2);
    c.set_generators(1, 1);
    CHECK_THROWS_AS(c.set_boundary(1, IntegerMatrix{{1, 0}}), InvalidInput);
  }
}

TEST_CASE("random complexes match the rational rank oracle and Euler characteristic") {
  oracle::Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    auto c = oracle::random_complex(rng);
    CHECK_NOTHROW(c.validate());
    auto h = homology(c);
    for (int k = 0; k <= 2; ++k)
      CHECK(h.rank(k) == c.generators(k) - oracle::rational_rank(c.boundary(k)) -
                             oracle::rational_rank(c.boundary(k + 1)));
    CHECK(euler_characteristic(h) == chain_euler_characteristic(c));
  }
}

TEST_CASE("cohomology from homology moves torsion up one degree") {
  GradedGroup h;
  h.set(0, AbelianGroup::from_cyclic(1, {}));
  h.set(1, AbelianGroup::from_cyclic(0, {2}));
  auto c = cohomology_from_homology(h);
  CHECK(c.at(0) == AbelianGroup::from_cyclic(1, {}));
  CHECK(c.at(1).is_zero());
  CHECK(c.at(2) == AbelianGroup::from_cyclic(0, {2}));
}

TEST_CASE("semi-characteristic over Q and F2") {
  GradedGroup rp3;
  rp3.set(0, AbelianGroup::from_cyclic(1, {}));
  rp3.set(1, AbelianGroup::from_cyclic(0, {2}));
  rp3.set(3, AbelianGroup::from_cyclic(1, {}));
  CHECK(semi_characteristic(rp3, 3) == 1);
  CHECK(semi_characteristic(rp3, 3, Coefficients::F2) == 0);
  CHECK_THROWS_AS(semi_characteristic(rp3, 4), InvalidInput);
}

TEST_CASE("reindexing is an involution for sign -1") {
  GradedGroup g;
  g.set(0, AbelianGroup::from_cyclic(1, {}));
  g.set(3, AbelianGroup::from_cyclic(2, {5}));
  CHECK(g.reindexed(-1, 7).reindexed(-1, 7) == g);
  CHECK(g.reindexed(-1, 7).at(4) == g.at(3));
}

TEST_CASE("coprime base factors values into pairwise coprime pieces") {
  auto base = coprime_base({12, 18});
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i + 1; j < base.size(); ++j) CHECK(gcd(base[i], base[j]) == 1);
}
