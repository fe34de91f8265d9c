#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace flexcontact {

/// C-infinity step: 0 for x <= 0, 1 for x >= 1, 1/2 (1 + tanh((x - 1/2) /
/// (x (1 - x)))) in between. psi(x) + psi(1 - x) = 1.
double smooth_step(double x);

struct ProfileParameters {
  double height = 1.25;  // upper bound allowed for g
  double rise = 0.05;    // width of the -1 -> hump transition after z = 1/2
  double fall_start = 0.92;
  double fall = 0.06;    // width of the hump -> 0 transition
};

/// g = -1 on [0, 1/2], a hump of height `amplitude` chosen so the integral over
/// [0, 1] vanishes, and 0 from fall_start + fall on.
class ProfileG {
public:
  /// Throws InvalidInput if the parameters cannot meet the constraints.
  explicit ProfileG(const ProfileParameters& p, std::size_t nodes = 2001);

  double operator()(double z) const;
  /// G(z) = int_0^z g for z in [0, 1], by adaptive Gauss-Kronrod on the smooth
  /// pieces.
  double primitive(double z) const;

  const ProfileParameters& parameters() const { return params_; }
  double amplitude() const { return amplitude_; }
  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  double max_value() const;
  double min_value() const;

private:
  ProfileParameters params_;
  double amplitude_ = 0;
  std::vector<double> grid_;
  std::vector<double> values_;
};

/// Composite Simpson on the profile's uniform grid (odd node count).
double simpson_integral(const ProfileG& g);
double simpson_integral(const ProfileG& g, std::size_t nodes);

/// h(t, z) = z + t G(z) on [0, 1], odd in z, and z for |z| > 1.
double h_family(const ProfileG& g, double t, double z);

struct RatioReport {
  double max_ratio = 0;
  double at_t = 0;
  double at_z = 0;
  double max_on_nonpositive = 0;  // max of the ratio where g <= 0
  double t_max = 0;
  std::size_t t_nodes = 0;
  std::size_t z_nodes = 0;
};

/// Maximum of g / (t g + 1) over t in [0, t_max] x the profile grid.
RatioReport bound_ratio(const ProfileG& g, std::size_t t_nodes = 2001, double t_max = 0.999);

struct ConformalReport {
  double sup_factor = 0;          // sup of gamma_t over the sampled grid
  double at_t = 0;
  double max_closed_form_gap = 0;  // |quadrature - (t g + 1)|
  bool below_exponential = false;  // gamma_t <= e^{height t} at every sample
  double exp_height = 0;           // e^{height} by std::exp
  double exp_height_series = 0;    // e^{height} by its Taylor series
  bool below_four = false;
};

/// gamma_t = exp(int_0^t g / (s g + 1) ds), integrated in s by Simpson.
ConformalReport conformal_bound(const ProfileG& g, std::size_t t_nodes = 201, double t_max = 0.999,
                                std::size_t s_nodes = 201);

struct HFamilyReport {
  bool identity_slice = false;
  bool linear_middle = false;
  bool identity_outside = false;
  bool monotone = false;
  bool odd = false;
  double max_fd_error = 0;
  double fd_step = 0;
  std::optional<std::string> first_failure;  // "check at (t, z)"
};

/// Checks the listed properties on a (t, z) grid over [0, t_max] x [-z_max,
/// z_max]; the mixed derivative uses central differences in t and a
/// fourth-order stencil in z, compared against g.
HFamilyReport verify_h_family(const ProfileG& g, double step = 1e-3, std::size_t t_nodes = 21,
                              std::size_t z_nodes = 2001, double t_max = 0.999, double z_max = 1.25,
                              double tolerance = 1e-4);

/// e^x by summing its Taylor series to convergence.
double exp_series(double x);

}  // namespace flexcontact
