#pragma once

#include "flexcontact/integer_matrix.hpp"

#include <vector>

namespace flexcontact {

/// U * A * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ... and
/// all d_i >= 0.
struct SmithDecomposition {
  IntegerMatrix D;
  IntegerMatrix U;
  IntegerMatrix V;

  std::size_t rank() const;
  /// Nonzero diagonal entries in order.
  std::vector<Integer> invariant_factors() const;
};

/// Total function. The postconditions are checked before returning; a failed
/// check throws std::logic_error since it can only mean an internal defect.
SmithDecomposition smith_normal_form(const IntegerMatrix& a);

/// Throws std::logic_error describing the first failed postcondition.
void verify_smith_decomposition(const IntegerMatrix& a, const SmithDecomposition& s);

}  // namespace flexcontact
