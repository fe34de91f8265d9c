#pragma once

#include "flexcontact/chain_complex.hpp"
#include "flexcontact/integer_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flexcontact {

struct Handle {
  int index = 0;
  std::string label;
};

/// A handle decomposition recorded as integer chain data. The manifold has
/// dimension `dimension` (2n for a Weinstein domain; odd values describe
/// thickenings such as W^{n+1}). The degree-k generators of `chain` are the
/// index-k handles in the order they appear in `handles`.
struct HandlePresentation {
  int n = 0;
  int dimension = 0;
  std::vector<Handle> handles;
  ChainComplex chain;
  /// Symmetric pairing on the middle-dimensional chain group (n-handles),
  /// used for the intersection form when dimension == 2n. When absent each
  /// n-handle is treated as a Lagrangian sphere with self-intersection
  /// (-1)^{n(n-1)/2} chi(S^n) and distinct handles are orthogonal.
  std::optional<IntegerMatrix> intersection_form;
  /// Allows more than one 0-handle.
  bool allow_multiple_zero_handles = false;

  std::size_t handle_count(int index) const;

  /// Throws InvalidInput on any violated invariant.
  void validate() const;
};

/// Builds the chain complex from per-index handle counts and boundary
/// matrices; dimension 0 means 2n.
HandlePresentation make_presentation(int n, std::vector<Handle> handles,
                                     const std::vector<std::pair<int, IntegerMatrix>>& boundaries,
                                     int dimension = 0);

/// The ball B^{2n}: one 0-handle.
HandlePresentation ball(int n);

/// T*S^n: a 0-handle and one n-handle, zero differential.
HandlePresentation cotangent_sphere(int n);

/// Thickening of a wedge of spheres: one 0-handle and one k-handle for every
/// entry of `sphere_dims`, all differentials zero.
HandlePresentation wedge_thickening(int dimension, const std::vector<int>& sphere_dims);

/// The effective pairing on the n-handles (the stored one or the default).
IntegerMatrix middle_pairing(const HandlePresentation& p);

}  // namespace flexcontact
