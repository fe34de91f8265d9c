#pragma once

#include "flexcontact/graded_group.hpp"
#include "flexcontact/handle_presentation.hpp"

#include <map>
#include <string>
#include <vector>

namespace flexcontact {

struct WeinsteinCohomology {
  GradedGroup homology;    // H_k(W; Z)
  GradedGroup cohomology;  // H^k(W; Z)
};

WeinsteinCohomology cohomology(const HandlePresentation& p);

/// Homology of the boundary Y = dW from the sequence of the pair (W, Y) and
/// Lefschetz duality H_j(W, Y) = H^{d-j}(W).
struct BoundaryHomologyReport {
  int dimension = 0;  // dim Y
  std::map<int, std::size_t> rational_betti;
  /// Integral groups in the degrees where the sequence forces them.
  GradedGroup integral;
  std::vector<int> undetermined;
  std::size_t intersection_rank = 0;
  Integer euler_characteristic = 0;
  Integer expected_euler_characteristic = 0;
  bool duality_holds = false;

  std::size_t betti(int k) const;
  bool determined(int k) const;
};

BoundaryHomologyReport boundary_homology(const HandlePresentation& p);

/// dim H^n(W;Q) + dim H^{n-1}(W;Q) - dim H^n(Y;Q). Needs dimension 2n.
std::size_t intersection_form_rank(const HandlePresentation& p);

/// The form on H_n(W) = ker d_n, in the basis given by the normal form.
IntegerMatrix intersection_form_on_homology(const HandlePresentation& p);

struct ManifoldFlags {
  bool closed = false;
  bool simply_connected = false;
  bool stably_parallelizable = false;
};

struct OmegaVerdict {
  bool member = false;
  std::string reason;
};

/// Membership in the class of closed, simply connected, stably parallelizable
/// n-manifolds with chi = 2 (n even) or chi_{1/2} = 1 (n odd). `homology` is
/// H_*(M; Z).
OmegaVerdict omega_membership(const GradedGroup& homology, int n, const ManifoldFlags& flags,
                              Coefficients c = Coefficients::Rationals);

/// Boundary connected sum: the presentations share their single 0-handle.
HandlePresentation boundary_connect_sum(const HandlePresentation& p, const HandlePresentation& q);

struct C1Entry {
  std::string label;
  int index = 0;
  bool applies = false;
  std::string note;
};

struct C1Report {
  bool equivalence_holds = false;  // c1(Y) = 0 iff c1(W) = 0
  std::vector<C1Entry> handles;
};

C1Report c1_propagation_check(const HandlePresentation& p);

}  // namespace flexcontact
