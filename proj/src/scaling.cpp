#include "flexcontact/scaling.hpp"

#include "flexcontact/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace flexcontact {

double smooth_step(double x) {
  if (x <= 0) return 0;
  if (x >= 1) return 1;
  return 0.5 * (1 + std::tanh((x - 0.5) / (x * (1 - x))));
}

ProfileG::ProfileG(const ProfileParameters& p, std::size_t nodes) : params_(p) {
  require(p.height > 1, "hump height must exceed 1");
  require(p.rise > 0 && p.fall > 0, "transition widths must be positive");
  require(p.fall_start >= 0.5 + p.rise, "the hump must start after the rise transition ends");
  require(p.fall_start + p.fall < 1, "g must vanish near 1");
  require(nodes >= 3 && nodes % 2 == 1, "the grid needs an odd node count >= 3");
  // Each transition contributes half its width, since psi(x) + psi(1-x) = 1.
  const double negative_area = 0.5 + p.rise / 2;
  const double hump_area = (p.fall_start - 0.5 - p.rise) + p.rise / 2 + p.fall / 2;
  amplitude_ = negative_area / hump_area;
  std::ostringstream why;
  why << "infeasible profile: the hump needs height " << amplitude_ << " > " << p.height;
  require(amplitude_ <= p.height, why.str());
  grid_.resize(nodes);
  values_.resize(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    grid_[i] = static_cast<double>(i) / static_cast<double>(nodes - 1);
    values_[i] = (*this)(grid_[i]);
  }
}

double ProfileG::operator()(double z) const {
  const double up = smooth_step((z - 0.5) / params_.rise);
  const double down = smooth_step((z - params_.fall_start) / params_.fall);
  return -(1 - up) + amplitude_ * up * (1 - down);
}

double ProfileG::primitive(double z) const {
  require(z >= 0 && z <= 1, "G is defined on [0, 1]");
  if (z <= 0.5) return -z;
  using boost::math::quadrature::gauss_kronrod;
  const double breaks[] = {0.5, 0.5 + params_.rise, params_.fall_start, params_.fall_start + params_.fall, 1.0};
  double total = -0.5;
  auto f = [this](double x) { return (*this)(x); };
  for (std::size_t i = 0; i + 1 < std::size(breaks) && breaks[i] < z; ++i) {
    double a = breaks[i];
    double b = std::min(z, breaks[i + 1]);
    if (b > a) total += gauss_kronrod<double, 61>::integrate(f, a, b, 10, 1e-12);
  }
  return total;
}

double ProfileG::max_value() const { return *std::max_element(values_.begin(), values_.end()); }
double ProfileG::min_value() const { return *std::min_element(values_.begin(), values_.end()); }

namespace {

template <class F>
double simpson(F f, double a, double b, std::size_t nodes) {
  const std::size_t m = nodes - 1;
  const double h = (b - a) / static_cast<double>(m);
  double sum = f(a) + f(b);
  for (std::size_t i = 1; i < m; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f(a + h * static_cast<double>(i));
  return sum * h / 3;
}

}  // namespace

double simpson_integral(const ProfileG& g) {
  const auto& v = g.values();
  const std::size_t m = v.size() - 1;
  const double h = 1.0 / static_cast<double>(m);
  double sum = v.front() + v.back();
  for (std::size_t i = 1; i < m; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * v[i];
  return sum * h / 3;
}

double simpson_integral(const ProfileG& g, std::size_t nodes) {
  require(nodes >= 3 && nodes % 2 == 1, "Simpson needs an odd node count >= 3");
  return simpson([&g](double z) { return g(z); }, 0.0, 1.0, nodes);
}

namespace {

// h(t, z) given G(|z|); G is unused outside [-1, 1].
double h_from_primitive(double t, double z, double primitive_abs) {
  const double a = std::fabs(z);
  if (a > 1) return z;
  const double value = a + t * primitive_abs;
  return z < 0 ? -value : value;
}

}  // namespace

double h_family(const ProfileG& g, double t, double z) {
  const double a = std::fabs(z);
  return h_from_primitive(t, z, a > 1 ? 0.0 : g.primitive(a));
}

RatioReport bound_ratio(const ProfileG& g, std::size_t t_nodes, double t_max) {
  require(t_max >= 0 && t_max < 1, "t must stay below 1, where the family degenerates");
  require(t_nodes >= 2, "need at least two t nodes");
  RatioReport r;
  r.t_max = t_max;
  r.t_nodes = t_nodes;
  r.z_nodes = g.values().size();
  r.max_ratio = -std::numeric_limits<double>::infinity();
  r.max_on_nonpositive = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < t_nodes; ++i) {
    const double t = t_max * static_cast<double>(i) / static_cast<double>(t_nodes - 1);
    for (std::size_t j = 0; j < g.values().size(); ++j) {
      const double v = g.values()[j];
      const double ratio = v / (t * v + 1);
      if (ratio > r.max_ratio) {
        r.max_ratio = ratio;
        r.at_t = t;
        r.at_z = g.grid()[j];
      }
      if (v <= 0) r.max_on_nonpositive = std::max(r.max_on_nonpositive, ratio);
    }
  }
  return r;
}

double exp_series(double x) {
  double term = 1;
  double sum = 1;
  for (int k = 1; k < 200 && std::fabs(term) > 1e-18 * std::fabs(sum); ++k) {
    term *= x / k;
    sum += term;
  }
  return sum;
}

ConformalReport conformal_bound(const ProfileG& g, std::size_t t_nodes, double t_max, std::size_t s_nodes) {
  require(t_max >= 0 && t_max < 1, "t must stay below 1");
  require(t_nodes >= 2, "need at least two t nodes");
  require(s_nodes >= 3 && s_nodes % 2 == 1, "Simpson needs an odd node count >= 3");
  const double height = g.parameters().height;
  ConformalReport r;
  r.sup_factor = 0;
  r.below_exponential = true;
  for (std::size_t i = 0; i < t_nodes; ++i) {
    const double t = t_max * static_cast<double>(i) / static_cast<double>(t_nodes - 1);
    for (double v : g.values()) {
      double exponent = t == 0 ? 0 : simpson([v](double s) { return v / (s * v + 1); }, 0.0, t, s_nodes);
      double factor = std::exp(exponent);
      r.max_closed_form_gap = std::max(r.max_closed_form_gap, std::fabs(factor - (t * v + 1)));
      if (factor > r.sup_factor) {
        r.sup_factor = factor;
        r.at_t = t;
      }
      if (factor > std::exp(height * t) + 1e-12) r.below_exponential = false;
    }
  }
  r.exp_height = std::exp(height);
  r.exp_height_series = exp_series(height);
  r.below_four = r.exp_height < 4 && r.exp_height_series < 4;
  return r;
}

HFamilyReport verify_h_family(const ProfileG& g, double step, std::size_t t_nodes, std::size_t z_nodes,
                              double t_max, double z_max, double tolerance) {
  require(step > 0 && step < 0.01, "finite-difference step must lie in (0, 0.01)");
  require(t_max >= 2 * step && t_max < 1, "t grid must lie in [2 step, 1)");
  require(t_nodes >= 2 && z_nodes >= 2, "need at least two nodes per axis");
  HFamilyReport r;
  r.fd_step = step;
  r.identity_slice = r.linear_middle = r.identity_outside = r.monotone = r.odd = true;
  auto note = [&r](const char* what, double t, double z) {
    if (r.first_failure) return;
    std::ostringstream out;
    out << what << " at (t, z) = (" << t << ", " << z << ")";
    r.first_failure = out.str();
  };

  auto primitive_abs = [&g](double z) {
    const double a = std::fabs(z);
    return a > 1 ? 0.0 : g.primitive(a);
  };
  auto small_g = [&g](double z) {
    const double a = std::fabs(z);
    return a > 1 ? 0.0 : g(a);
  };

  const double fd_t[] = {step, 0.25, 0.5, 0.75, t_max - step};
  for (std::size_t j = 0; j < z_nodes; ++j) {
    const double z = -z_max + 2 * z_max * static_cast<double>(j) / static_cast<double>(z_nodes - 1);
    const double a = std::fabs(z);
    const double big = primitive_abs(z);
    for (std::size_t i = 0; i < t_nodes; ++i) {
      const double t = t_max * static_cast<double>(i) / static_cast<double>(t_nodes - 1);
      const double h = h_from_primitive(t, z, big);
      if (t == 0 && h != z) { r.identity_slice = false; note("h_0 != id", t, z); }
      if (a <= 0.5 && std::fabs(h - (1 - t) * z) > 1e-12) { r.linear_middle = false; note("h_t != (1-t) z", t, z); }
      if (a > 1 && h != z) { r.identity_outside = false; note("h_t != z outside [-1, 1]", t, z); }
      if (h_from_primitive(t, -z, big) != -h) { r.odd = false; note("h_t not odd", t, z); }
      if (t * small_g(z) + 1 <= 0) { r.monotone = false; note("dh/dz <= 0", t, z); }
    }

    // Mixed derivative: central in t, fourth-order stencil in z.
    const double offsets[] = {-2 * step, -step, step, 2 * step};
    double p[4];
    for (int m = 0; m < 4; ++m) p[m] = primitive_abs(z + offsets[m]);
    auto h_at = [&](double tt, int m) { return h_from_primitive(tt, z + offsets[m], p[m]); };
    auto dz = [&](double tt) {
      return (-h_at(tt, 3) + 8 * h_at(tt, 2) - 8 * h_at(tt, 1) + h_at(tt, 0)) / (12 * step);
    };
    for (double t : fd_t) {
      const double mixed = (dz(t + step) - dz(t - step)) / (2 * step);
      const double err = std::fabs(mixed - small_g(z));
      if (err > r.max_fd_error) r.max_fd_error = err;
      if (err > tolerance) note("mixed derivative differs from g by more than the tolerance", t, z);
    }
  }
  return r;
}

}  // namespace flexcontact
