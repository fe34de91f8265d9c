#include "flexcontact/errors.hpp"
#include "flexcontact/floer_formulas.hpp"
#include "flexcontact/handle_presentation.hpp"
#include "flexcontact/topology.hpp"

#include <doctest.h>

using namespace flexcontact;

namespace {

GradedGroup free_group(std::initializer_list<std::pair<int, std::size_t>> ranks) {
  GradedGroup g;
  for (auto [k, r] : ranks) g.set(k, AbelianGroup::from_cyclic(r, {}));
  return g;
}

}  // namespace

TEST_CASE("SH+ of a flexible domain is cohomology reflected about n + 1") {
  const int n = 4;
  auto h = cohomology(cotangent_sphere(n)).cohomology;
  auto sh = sh_plus_from_vanishing(h, n);
  CHECK(sh.rank(n + 1) == 1);
  CHECK(sh.rank(1) == 1);
  CHECK(cohomology_from_sh_plus(sh, n) == h);
  CHECK(!flexible_support_test(support_of(sh), n).obstructed);
  CHECK_THROWS_AS(sh_plus_from_vanishing(free_group({{n + 1, 1}}), n), InvalidInput);
  CHECK_NOTHROW(sh_plus_from_vanishing(free_group({{n + 1, 1}}), n, false));
}

TEST_CASE("tautological sequence bounds") {
  auto bounds = taut_les_bounds({{3, 2}}, {{0, 1}, {2, 1}}, 3);
  CHECK(bounds.at(3) == Interval{1, 3});
  CHECK(bounds.at(4) == Interval{0, 1});
  CHECK_THROWS_AS(taut_les_bounds({{1, -1}}, {}, 3), InvalidInput);
}

TEST_CASE("flexible fillings are distinguished by integral cohomology") {
  auto a = free_group({{0, 1}, {3, 1}});
  auto b = free_group({{0, 1}, {3, 2}});
  auto r = distinguish_flexible_fillings(a, b, 3);
  CHECK(r.verdict == Verdict::Distinct);
  CHECK(r.degree == 3);
  CHECK(distinguish_flexible_fillings(a, a, 3).verdict == Verdict::Indistinguishable);
  GradedGroup t = a;
  t.set(2, AbelianGroup::from_cyclic(0, {2}));
  CHECK(distinguish_flexible_fillings(a, t, 3).verdict == Verdict::Distinct);
  CHECK_THROWS_AS(distinguish_flexible_fillings(a, b, 2), InvalidInput);
}

TEST_CASE("support tests") {
  CHECK(flexible_support_test({1, 2, 5}, 4).obstructed == false);
  auto high = flexible_support_test({1, 6}, 4);
  CHECK(high.obstructed);
  CHECK(high.degree == 6);
  CHECK(flexible_support_test({0}, 4).obstructed);
  CHECK(adc_support_test({-1}, 4).obstructed);
  CHECK(!adc_support_test({0}, 4).obstructed);
}

TEST_CASE("flexible-filling obstruction threshold") {
  CHECK(!cem_flexible_obstruction(1, 0));
  CHECK(cem_flexible_obstruction(2, 0));
  CHECK(!cem_flexible_obstruction(4, 3));
  CHECK(cem_flexible_obstruction(5, 3));
}

TEST_CASE("loop-space distinguisher") {
  LoopHomologyTable lm{{{0, 1}, {2, 1}, {4, 7}}, {{0, 1}, {2, 1}}, 10};
  LoopHomologyTable ln{{{0, 1}, {2, 1}, {4, 1}}, {{0, 1}, {2, 1}}, 10};
  DimensionTable y{{0, 1}, {5, 1}};
  auto r = boundedinfinite_distinguisher(lm, ln, y, 5);
  CHECK(r.verdict == Verdict::Distinct);
  CHECK(r.degree == 4);
  CHECK(boundedinfinite_distinguisher(lm, lm, y, 5).verdict == Verdict::Indistinguishable);
  CHECK_THROWS_AS(boundedinfinite_distinguisher(lm, ln, y, 3), InvalidInput);
}

TEST_CASE("wrapped Floer gradings") {
  auto l = free_group({{0, 1}, {3, 1}});
  auto wh = wh_plus_from_vanishing(l, 4);
  CHECK(wh.rank(3) == 1);
  CHECK(wh.rank(0) == 1);
  auto loops = free_group({{0, 1}, {2, 1}});
  auto w = wrapped_loop_grading(loops, 4);
  CHECK(w.rank(2) == 1);
  CHECK(w.rank(4) == 1);
}

TEST_CASE("nearby Lagrangian conclusion") {
  auto s3 = free_group({{0, 1}, {3, 1}});
  CHECK(nearby_conclusion(s3, s3, 3, true).isomorphism);
  CHECK(!nearby_conclusion(s3, s3, 3, false).isomorphism);
  CHECK(!nearby_conclusion(s3, free_group({{0, 1}, {1, 1}, {2, 1}, {3, 1}}), 3, true).isomorphism);
}
