#pragma once

#include "flexcontact/graded_group.hpp"
#include "flexcontact/integer_matrix.hpp"

#include <cstddef>
#include <map>

namespace flexcontact {

/// Finite chain complex of free abelian groups. The boundary in degree k is an
/// n_{k-1} x n_k matrix; missing boundaries are zero.
class ChainComplex {
public:
  ChainComplex() = default;

  void set_generators(int degree, std::size_t count);
  /// Throws InvalidInput if the shape disagrees with the generator counts.
  void set_boundary(int degree, IntegerMatrix boundary);

  std::size_t generators(int degree) const;
  /// The stored matrix, or a zero matrix of the right shape.
  IntegerMatrix boundary(int degree) const;

  const std::map<int, std::size_t>& generator_counts() const { return generators_; }
  const std::map<int, IntegerMatrix>& boundaries() const { return boundaries_; }

  /// Shapes match and consecutive boundaries compose to zero. Throws
  /// InvalidInput naming the first offending degree.
  void validate() const;

private:
  std::map<int, std::size_t> generators_;
  std::map<int, IntegerMatrix> boundaries_;
};

/// H_k = ker d_k / im d_{k+1}. Rejects complexes with dd != 0.
GradedGroup homology(const ChainComplex& complex);

Integer chain_euler_characteristic(const ChainComplex& complex);

}  // namespace flexcontact
