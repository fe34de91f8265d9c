#include "oracles.hpp"

#include "flexcontact/errors.hpp"
#include "flexcontact/scaling.hpp"

#include <doctest.h>

#include <cmath>

using namespace flexcontact;

TEST_CASE("smooth step is a monotone transition from 0 to 1") {
  CHECK(smooth_step(-1) == 0);
  CHECK(smooth_step(2) == 1);
  double prev = 0;
  for (int i = 0; i <= 100; ++i) {
    double v = smooth_step(i / 100.0);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("profile shape") {
  ProfileG g(ProfileParameters{}, 2001);
  CHECK(g(0.1) == doctest::Approx(-1));
  CHECK(g(0.5) == doctest::Approx(-1));
  CHECK(g(1.0) == doctest::Approx(0).epsilon(1e-12));
  CHECK(g.min_value() >= -1 - 1e-12);
  CHECK(g.max_value() <= 1.25 + 1e-12);
  CHECK(g.primitive(1.0) == doctest::Approx(0).scale(1).epsilon(1e-10));
}

TEST_CASE("Simpson integral converges under refinement") {
  ProfileG g(ProfileParameters{}, 2001);
  const double coarse = simpson_integral(g, 1001);
  const double fine = simpson_integral(g);
  const double finer = simpson_integral(g, 4001);
  CHECK(std::abs(fine) < 1e-8);
  CHECK(std::abs(finer) < 1e-8);
  CHECK(std::abs(finer - fine) <= std::abs(fine - coarse) + 1e-12);
}

TEST_CASE("ratio and conformal bounds converge on refined grids") {
  ProfileG coarse(ProfileParameters{}, 501), fine(ProfileParameters{}, 1001);
  auto a = bound_ratio(coarse, 501);
  auto b = bound_ratio(fine, 1001);
  CHECK(a.max_ratio <= 1.25 + 1e-6);
  CHECK(b.max_ratio <= 1.25 + 1e-6);
  CHECK(std::abs(a.max_ratio - b.max_ratio) < 1e-3);
  CHECK(a.max_on_nonpositive <= 0);
  auto c = conformal_bound(fine);
  CHECK(c.below_exponential);
  CHECK(c.below_four);
  CHECK(c.sup_factor <= std::exp(1.25));
  CHECK(c.exp_height_series == doctest::Approx(std::exp(1.25)).epsilon(1e-12));
}

TEST_CASE("h family") {
  ProfileG g(ProfileParameters{}, 1001);
  CHECK(h_family(g, 0.0, 0.7) == doctest::Approx(0.7));
  CHECK(h_family(g, 0.5, 2.0) == doctest::Approx(2.0));
  CHECK(h_family(g, 0.5, -0.3) == doctest::Approx(-h_family(g, 0.5, 0.3)));
  auto r = verify_h_family(g, 1e-3, 11, 1001);
  CHECK(r.identity_slice);
  CHECK(r.linear_middle);
  CHECK(r.identity_outside);
  CHECK(r.monotone);
  CHECK(r.odd);
  CHECK(r.max_fd_error < 1e-4);
  CHECK(!r.first_failure);
}

TEST_CASE("bounds hold for randomized feasible parameters") {
  oracle::Rng rng(123);
  std::uniform_real_distribution<double> u(0, 1);
  int feasible = 0;
  for (int t = 0; t < 20; ++t) {
    ProfileParameters p;
    p.height = 1.15 + 0.25 * u(rng);
    p.rise = 0.02 + 0.06 * u(rng);
    p.fall = 0.02 + 0.06 * u(rng);
    p.fall_start = 1 - p.fall - 0.01 - 0.05 * u(rng);
    std::optional<ProfileG> g;
    try {
      g.emplace(p, 601);
    } catch (const InvalidInput&) {
      continue;
    }
    ++feasible;
    CHECK(std::abs(simpson_integral(*g, 8001)) < 1e-8);
    CHECK(bound_ratio(*g, 301).max_ratio <= p.height + 1e-6);
    auto c = conformal_bound(*g, 51, 0.999, 101);
    CHECK(c.below_exponential);
    CHECK(c.sup_factor < 4);
  }
  CHECK(feasible >= 5);
}

TEST_CASE("infeasible profiles are rejected") {
  ProfileParameters p;
  p.fall_start = 0.6;
  CHECK_THROWS_AS(ProfileG(p, 101), InvalidInput);
  p = ProfileParameters{};
  p.height = 1;
  CHECK_THROWS_AS(ProfileG(p, 101), InvalidInput);
}

TEST_CASE("exponential series") {
  CHECK(exp_series(1.25) == doctest::Approx(3.490342957).epsilon(1e-9));
  CHECK(exp_series(0) == 1);
}
