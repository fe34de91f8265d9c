#pragma once

#include "flexcontact/numbers.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flexcontact {

/// Coefficients used when a dimension count is asked of an integral group.
enum class Coefficients { Integers, Rationals, F2 };

Coefficients parse_coefficients(const std::string& name);
std::string to_string(Coefficients c);

/// One degree of a finitely generated abelian group: Z^rank plus cyclic
/// torsion in invariant-factor form (d_1 | d_2 | ..., each d_i >= 2).
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  /// Rank of the free part, or dim over F2 (= rank + number of even factors).
  std::size_t dimension(Coefficients c) const;

  /// Canonicalizes an arbitrary list of cyclic orders. Orders 1 and -1 are
  /// dropped, 0 contributes to the rank.
  static AbelianGroup from_cyclic(std::size_t rank, const std::vector<Integer>& orders);

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);
std::string to_string(const AbelianGroup& g);

/// Graded finitely generated abelian group. Degrees not present are zero, and
/// zero components are never stored, so equality is isomorphism.
class GradedGroup {
public:
  GradedGroup() = default;

  void set(int degree, AbelianGroup group);
  const AbelianGroup& at(int degree) const;
  std::size_t rank(int degree) const { return at(degree).rank; }
  std::size_t dimension(int degree, Coefficients c) const { return at(degree).dimension(c); }

  const std::map<int, AbelianGroup>& components() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  std::optional<int> min_degree() const;
  std::optional<int> max_degree() const;

  /// new degree = sign * old degree + offset
  GradedGroup reindexed(int sign, int offset) const;

  friend bool operator==(const GradedGroup&, const GradedGroup&) = default;

private:
  std::map<int, AbelianGroup> parts_;
};

GradedGroup direct_sum(const GradedGroup& a, const GradedGroup& b);
std::string to_string(const GradedGroup& g);

/// Universal coefficients: H^k = Free(H_k) + Tors(H_{k-1}).
GradedGroup cohomology_from_homology(const GradedGroup& homology);

struct Cancellation {
  GradedGroup a;
  GradedGroup b;
  bool isomorphic = false;
};

/// Given A+C and B+C, recovers A and B. Throws InvalidInput if C is not a
/// direct summand of either input in some degree.
Cancellation cancel_summand(const GradedGroup& a_plus_c, const GradedGroup& b_plus_c,
                            const GradedGroup& c);

/// Removes the summand c from g in one degree; throws InvalidInput if c is not
/// a summand of g.
AbelianGroup remove_summand(const AbelianGroup& g, const AbelianGroup& c);

Integer euler_characteristic(const GradedGroup& g);

/// sum_{i=0}^{(n-1)/2} dim H_i mod 2, for odd n. The group is read as homology.
int semi_characteristic(const GradedGroup& homology, int n,
                        Coefficients c = Coefficients::Rationals);

/// Pairwise coprime integers b_j > 1 such that every |value| > 1 is a product
/// of powers of the b_j.
std::vector<Integer> coprime_base(const std::vector<Integer>& values);

}  // namespace flexcontact
