#include "flexcontact/errors.hpp"
#include "flexcontact/handle_presentation.hpp"
#include "flexcontact/json_io.hpp"

#include <doctest.h>

using namespace flexcontact;

TEST_CASE("graded group round trip") {
  GradedGroup g;
  g.set(0, AbelianGroup::from_cyclic(1, {}));
  g.set(3, AbelianGroup::from_cyclic(2, {2, 6}));
  CHECK(graded_group_from_json(to_json(g)) == g);
}

TEST_CASE("chord spectrum round trip") {
  ChordSpectrum s;
  s.n = 4;
  s.bound = Rational(7, 2);
  s.chords.push_back(ChordRecord{"a", 1, Rational(1, 3), FrontData{2, 0, 0}, true});
  s.chords.push_back(ChordRecord{"b", -2, Rational(3), std::nullopt, false});
  CHECK(chord_spectrum_from_json(to_json(s)) == s);
}

TEST_CASE("certificate round trip") {
  OrbitSpectrum o;
  o.n = 3;
  o.bound = 5;
  o.orbits.push_back(OrbitRecord{2, Rational(9, 4), OrbitOrigin::Word, "a b", 0, true});
  o.orbits.push_back(OrbitRecord{-1, Rational(1), OrbitOrigin::Old, "x", 0, false});
  ADCCertificate c{3, {Stage{Rational(1, 2), 5, o}}};
  CHECK(certificate_from_json(to_json(c)) == c);
}

TEST_CASE("presentation parsing") {
  auto j = Json::parse(R"({"schema": 1, "n": 2, "handles": [{"index": 0}, {"index": 2}],
                           "boundary_matrices": {}})");
  auto p = presentation_from_json(j);
  CHECK(p.handle_count(2) == 1);
  CHECK(p.dimension == 4);
}

TEST_CASE("rationals accept numbers and strings") {
  CHECK(rational_from_json(Json(3), "x") == 3);
  CHECK(rational_from_json(Json("5/10"), "x") == Rational(1, 2));
  CHECK_THROWS_AS(rational_from_json(Json::array(), "x"), InvalidInput);
}

TEST_CASE("schema versions") {
  CHECK_NOTHROW(check_schema(Json::parse(R"({"schema": 1})")));
  CHECK_NOTHROW(check_schema(Json::object()));
  CHECK_THROWS_AS(check_schema(Json::parse(R"({"schema": 2})")), InvalidInput);
  CHECK_THROWS_AS(check_schema(Json::array()), InvalidInput);
}
