#include "oracles.hpp"

#include "flexcontact/errors.hpp"
#include "flexcontact/surgery.hpp"

#include <doctest.h>

using namespace flexcontact;

namespace {

OrbitSpectrum orbits(int n, Rational bound, std::vector<std::pair<int, Rational>> records) {
  OrbitSpectrum y;
  y.n = n;
  y.bound = bound;
  for (auto& [degree, action] : records) y.orbits.push_back(OrbitRecord{degree, action, OrbitOrigin::Old, "", 0, true});
  return y;
}

ChordSpectrum chords(int n, Rational bound, std::vector<std::pair<int, Rational>> records) {
  ChordSpectrum s;
  s.n = n;
  s.bound = bound;
  int i = 0;
  for (auto& [degree, action] : records)
    s.chords.push_back(ChordRecord{std::string(1, static_cast<char>('a' + i++)), degree, action, std::nullopt, true});
  return s;
}

Stage stage(Rational scale, Rational bound, OrbitSpectrum spectrum) { return Stage{scale, bound, std::move(spectrum)}; }

}  // namespace

TEST_CASE("critical surgery adds one orbit per cyclic word") {
  auto y = orbits(4, 10, {{3, Rational(2)}, {5, Rational(9)}});
  auto s = chords(4, 10, {{1, Rational(2)}, {-1, Rational(3)}});
  auto out = bee_surgery(y, s, 7);
  std::size_t old = 0, words = 0;
  for (const auto& o : out.orbits) {
    if (o.origin == OrbitOrigin::Old) ++old;
    if (o.origin == OrbitOrigin::Word) ++words;
  }
  CHECK(old == 1);
  CHECK(words == oracle::brute_force_words(s, 7, true).size());
  CHECK(out.bound == 7);
  CHECK_THROWS_AS(bee_surgery(y, s, 11), InvalidInput);
}

TEST_CASE("subcritical surgery adds belt orbits") {
  auto y = orbits(5, 10, {});
  auto out = subcritical_surgery(y, 3, 4, Rational(1, 2));
  REQUIRE(out.orbits.size() == 4);
  for (int j = 1; j <= 4; ++j) {
    CHECK(out.orbits[j - 1].degree == 2 * 5 - 3 - 4 + 2 * j);
    CHECK(out.orbits[j - 1].action == Rational(j) / 2);
  }
  CHECK_THROWS_AS(subcritical_surgery(y, 5, 1, Rational(1)), InvalidInput);
  CHECK_THROWS_AS(subcritical_surgery(y, 2, 1, Rational(1)), InvalidInput);
  CHECK_THROWS_AS(subcritical_surgery(y, 3, 20, Rational(1)), InvalidInput);
}

TEST_CASE("ambient surgery adds the belt chord") {
  auto s = chords(5, 10, {{2, Rational(3)}});
  auto out = ambient_surgery(s, 2, Rational(1, 3));
  REQUIRE(out.chords.size() == 2);
  CHECK(out.chords.back().degree == 5 - 2 - 1);
  CHECK_THROWS_AS(ambient_surgery(s, 4, Rational(1, 3)), InvalidInput);
}

TEST_CASE("belt sphere chords come from words") {
  auto s = chords(4, 10, {{1, Rational(2)}, {2, Rational(3)}});
  auto linear = belt_sphere_chords(s, 6);
  CHECK(linear.chords.size() == oracle::brute_force_words(s, 6, false).size());
  for (const auto& c : linear.chords) CHECK(c.degree >= 1 + 4 - 2);
  auto cyclic = belt_sphere_chords(s, 6, WordKind::Cyclic);
  CHECK(cyclic.chords.size() == oracle::brute_force_words(s, 6, true).size());
}

TEST_CASE("nonsimultaneous surgery stabilizes the auxiliary chords") {
  auto own = chords(3, 10, {{1, Rational(5)}});
  auto into = chords(3, 10, {{0, Rational(1)}});
  auto out_of = chords(3, 10, {{1, Rational(1)}});
  auto aux = chords(3, 10, {{1, Rational(3)}});
  auto result = nonsimultaneous_surgery(own, into, out_of, aux, 9, Rational(8));
  CHECK(result.stabilization == 1);
  bool found_plain = false;
  for (const auto& c : result.chords.chords) {
    CHECK(c.action < 9);
    CHECK(c.degree >= 1);
    if (c.id == "a a") {
      found_plain = true;
      CHECK(c.degree == 2 + 3);
      CHECK(c.action == 2);
    }
  }
  CHECK(found_plain);
}

TEST_CASE("ADC check") {
  ADCCertificate c{3, {stage(1, 4, orbits(3, 4, {{1, Rational(2)}})), stage(Rational(1, 2), 8, orbits(3, 8, {{2, Rational(7)}}))}};
  CHECK(adc_check(c).pass);
  CHECK(adc_check(ADCCertificate{3, {}}).pass);
  auto bad = c;
  bad.stages[1].spectrum.orbits[0].degree = 0;
  auto v = adc_check(bad);
  CHECK(!v.pass);
  CHECK(v.stage == 1);
  CHECK(v.record == 0);
  bad = c;
  bad.stages[1].scale = 2;
  CHECK(!adc_check(bad).pass);
  bad = c;
  bad.stages[1].bound = 4;
  bad.stages[1].spectrum.bound = 4;
  bad.stages[1].spectrum.orbits.clear();
  CHECK(!adc_check(bad).pass);
  bad = c;
  bad.stages[0].spectrum.orbits[0].contractible = false;
  bad.stages[0].spectrum.orbits[0].degree = -5;
  CHECK(adc_check(bad).pass);
}

TEST_CASE("normalization keeps a geometric subsequence") {
  ADCCertificate c{3, {stage(1, 2, orbits(3, 2, {{1, Rational(1)}})), stage(1, 3, orbits(3, 3, {})),
                       stage(1, 9, orbits(3, 9, {{2, Rational(8)}}))}};
  auto out = normalize_certificate(c, Rational(1, 2));
  REQUIRE(out.stages.size() == 2);
  CHECK(out.stages[1].scale == Rational(1, 2));
  CHECK(out.stages[1].bound == Rational(9, 2));
  CHECK(out.stages[1].spectrum.orbits[0].action == 4);
  CHECK(Rational(1, 2) * out.stages[0].scale >= out.stages[1].scale);
  CHECK(adc_check(out).pass);
  CHECK_THROWS_AS(normalize_certificate(c, Rational(1, 2), 3), InvalidInput);
  CHECK_THROWS_AS(normalize_certificate(c, Rational(1)), InvalidInput);
}

TEST_CASE("flexible surgery with a negative chord stabilizes and passes") {
  ADCCertificate c{4, {stage(1, 10, orbits(4, 10, {{2, Rational(5)}})), stage(1, 40, orbits(4, 40, {}))}};
  ChordSpectrum s = chords(4, 40, {{-2, Rational(3)}});
  auto result = flexible_surgery_certificate(c, {s});
  CHECK(adc_check(result.certificate).pass);
  REQUIRE(result.certificate.stages.size() == 2);
  CHECK(result.certificate.stages[0].bound == 1);
  CHECK(result.certificate.stages[1].bound == 2);
  CHECK(result.stabilization[0] == 3);
}

TEST_CASE("flexible surgery rejects bad inputs") {
  ADCCertificate small{4, {stage(1, 3, orbits(4, 3, {}))}};
  CHECK_THROWS_AS(flexible_surgery_certificate(small, {chords(4, 3, {{1, Rational(1)}})}), InvalidInput);
  ADCCertificate low{2, {stage(1, 10, orbits(2, 10, {}))}};
  CHECK_THROWS_AS(flexible_surgery_certificate(low, {chords(2, 10, {{1, Rational(1)}})}), InvalidInput);
  ADCCertificate failing{4, {stage(1, 10, orbits(4, 10, {{0, Rational(1)}}))}};
  CHECK_THROWS_AS(flexible_surgery_certificate(failing, {chords(4, 10, {{1, Rational(1)}})}), InvalidInput);
}
