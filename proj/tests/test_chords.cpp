#include "oracles.hpp"

#include "flexcontact/errors.hpp"

#include <doctest.h>

using namespace flexcontact;

TEST_CASE("chord degree from front data") {
  CHECK(chord_degree(2, 0, 0) == 1);
  CHECK(chord_degree(0, 0, 0) == -1);
  CHECK(chord_degree(1, 3, 2) == -1);
  CHECK_THROWS_AS(chord_degree(-1, 0, 0), InvalidInput);
}

TEST_CASE("stabilization shifts degrees and adds zig-zag chords") {
  ChordSpectrum s;
  s.n = 5;
  s.bound = 10;
  s.chords.push_back(ChordRecord{"a", -3, Rational(2), FrontData{0, 2, 0}, true});
  s.chords.push_back(ChordRecord{"b", 0, Rational(4), std::nullopt, true});
  const int N = min_positive_N(s);
  CHECK(N == 4);
  auto q = choose_Q(5);
  auto out = stabilize(s, N, q, Rational(1));
  CHECK(out.chords[0].degree == 5);
  CHECK(out.chords[0].front->down == 8);
  CHECK(chord_degree(out.chords[0].front->down, 2, 0) == out.chords[0].degree);
  CHECK(out.chords[1].degree == 8);
  CHECK(out.chords.size() == 2 + 2 * 2 * q.critical_indices.size() * N);
  for (std::size_t i = 2; i < out.chords.size(); ++i) {
    CHECK(out.chords[i].degree >= 1);
    CHECK(out.chords[i].action < 1);
    CHECK(chord_degree(out.chords[i].front->down, out.chords[i].front->up, out.chords[i].front->index) ==
          out.chords[i].degree);
  }
  CHECK(stabilize(s, 0, q, Rational(1)) == s);
  CHECK(stabilize(s, 1, q, Rational(1), 1).chords.size() == 2 + 2 * q.critical_indices.size());
  CHECK_THROWS_AS(stabilize(s, 1, q, Rational(20)), InvalidInput);
  CHECK_THROWS_AS(stabilize(s, 1, choose_Q(4), Rational(1)), InvalidInput);
}

TEST_CASE("choice of Q has vanishing Euler characteristic") {
  for (int n = 3; n <= 10; ++n) {
    auto q = choose_Q(n);
    CHECK(q.euler == 0);
    CHECK(q.dimension == n - 2);
    CHECK_NOTHROW(q.validate());
  }
  CHECK_THROWS_AS(choose_Q(2), InvalidInput);
}

TEST_CASE("self-intersection index") {
  MorseData s2{"S^2", 2, 2, true, {0, 2}};
  CHECK(self_intersection_index(4, 3, s2).value == -6);
  CHECK(!self_intersection_index(4, 3, s2).mod2);
  MorseData rp2{"RP^2", 2, 1, false, {0, 1, 2}};
  auto v = self_intersection_index(4, 3, rp2);
  CHECK(v.mod2);
  CHECK(v.value == 1);
  MorseData point{"pt", 0, 1, true, {0}};
  CHECK(self_intersection_index(2, 5, point).value == 5);
  MorseData bad{"bad", 2, 2, true, {0, 1}};
  CHECK_THROWS_AS(self_intersection_index(4, 1, bad), InvalidInput);
}

TEST_CASE("chord spectra are validated") {
  ChordSpectrum s;
  s.n = 3;
  s.bound = 5;
  s.chords.push_back(ChordRecord{"a", 1, Rational(6), std::nullopt, true});
  CHECK_THROWS_AS(s.validate(), InvalidInput);
  s.chords[0].action = 0;
  CHECK_THROWS_AS(s.validate(), InvalidInput);
  s.chords[0].action = 1;
  s.chords.push_back(ChordRecord{"a", 2, Rational(2), std::nullopt, true});
  CHECK_THROWS_AS(s.validate(), InvalidInput);
  s.chords[1].id = "b";
  s.chords[1].front = FrontData{0, 0, 0};
  CHECK_THROWS_AS(s.validate(), InvalidInput);
}

TEST_CASE("least rotation agrees with brute force") {
  oracle::Rng rng(3);
  for (int t = 0; t < 500; ++t) {
    std::vector<std::size_t> w(oracle::uniform(rng, 1, 9));
    for (auto& x : w) x = oracle::uniform(rng, 0, 2);
    CHECK(canonical_rotation(w) == oracle::least_rotation(w));
  }
}

TEST_CASE("word enumeration matches the brute-force oracle") {
  oracle::Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    ChordSpectrum s;
    s.n = 3;
    s.bound = 12;
    for (long i = oracle::uniform(rng, 1, 4); i > 0; --i)
      s.chords.push_back(ChordRecord{"c" + std::to_string(i), static_cast<int>(oracle::uniform(rng, -2, 4)),
                                     oracle::random_rational(rng, 2, 6, 3), std::nullopt, true});
    Rational bound = oracle::random_rational(rng, 1, 12, 2);
    CHECK(oracle::keys_of(enumerate_words(s, bound)) == oracle::brute_force_words(s, bound, true));
    CHECK(oracle::keys_of(enumerate_linear_words(s, bound)) == oracle::brute_force_words(s, bound, false));
  }
}

TEST_CASE("the seven-word example") {
  ChordSpectrum s;
  s.n = 3;
  s.bound = 5;
  s.chords.push_back(ChordRecord{"a", 1, Rational(1), std::nullopt, true});
  s.chords.push_back(ChordRecord{"b", 2, Rational(3, 2), std::nullopt, true});
  auto words = enumerate_words(s, 4);
  REQUIRE(words.size() == 7);
  std::vector<std::string> labels;
  for (const auto& w : words) labels.push_back(word_label(s, w));
  CHECK(labels == std::vector<std::string>{"a", "b", "a a", "a b", "b b", "a a a", "a a b"});
  CHECK(words.back().degree == 4);
  CHECK(words.back().action == Rational(7, 2));
}

TEST_CASE("word enumeration respects its limit") {
  ChordSpectrum s;
  s.n = 3;
  s.bound = 100;
  s.chords.push_back(ChordRecord{"a", 1, Rational(1, 100), std::nullopt, true});
  s.chords.push_back(ChordRecord{"b", 1, Rational(1, 99), std::nullopt, true});
  CHECK_THROWS_AS(enumerate_words(s, 1, 1000), InvalidInput);
}
