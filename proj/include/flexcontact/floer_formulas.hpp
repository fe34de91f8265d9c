#pragma once

#include "flexcontact/graded_group.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>

namespace flexcontact {

/// Rational dimensions per degree; missing degrees are zero.
using DimensionTable = std::map<int, long>;

DimensionTable dimensions_of(const GradedGroup& g);

enum class Verdict { Distinct, Indistinguishable, Invalid };
std::string to_string(Verdict v);

struct DistinguisherReport {
  Verdict verdict = Verdict::Indistinguishable;
  std::optional<int> degree;  // witnessing degree
  std::string detail;         // the evaluated comparison
};

/// SH^+_k(W) = H^{n-k+1}(W) for a domain with vanishing SH. With
/// `weinstein`, cohomology above degree n is rejected, which is the same as
/// SH^+_k = 0 for k <= 0.
GradedGroup sh_plus_from_vanishing(const GradedGroup& cohomology, int n, bool weinstein = true);

/// Inverse reindexing: H^j = SH^+_{n+1-j}.
GradedGroup cohomology_from_sh_plus(const GradedGroup& sh_plus, int n);

struct Interval {
  long lo = 0;
  long hi = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// |dim SH_k - dim SH^+_k| <= dim H^{n-k} + dim H^{n-k+1}. Given one side in
/// `known`, returns for every relevant degree the interval allowed for the
/// other side, clamped at 0.
std::map<int, Interval> taut_les_bounds(const DimensionTable& known,
                                        const DimensionTable& cohomology, int n);

/// Flexible fillings with c1 = 0 and non-isomorphic integral cohomology have
/// non-contactomorphic boundaries.
DistinguisherReport distinguish_flexible_fillings(const GradedGroup& a, const GradedGroup& b, int n);

/// k copies of the boundary of C^n_k-type domains cannot all be flexibly
/// filled once k >= dim H^1(Y; Z/2) + 2.
bool cem_flexible_obstruction(long k, long dim_h1_mod2);

struct SupportVerdict {
  bool obstructed = false;
  std::optional<int> degree;
};

/// Flexible fillings have SH^+ supported in [1, n+1].
SupportVerdict flexible_support_test(const std::set<int>& support, int n);

/// ADC fillings have SH^+_k = 0 for k <= 3 - n.
SupportVerdict adc_support_test(const std::set<int>& support, int n);

std::set<int> support_of(const GradedGroup& g);

struct LoopHomologyTable {
  DimensionTable dims;  // dim H_k(LM; Q)
  DimensionTable base;  // dim H_k(M; Q)
  int horizon = 0;      // dims are trusted for 0 <= k <= horizon
};

/// Compares loop homology of M and N against twice the cohomology of Y in
/// degrees n-k and n-k+1, for min_degree <= k <= the common horizon.
DistinguisherReport boundedinfinite_distinguisher(const LoopHomologyTable& lm,
                                                  const LoopHomologyTable& ln,
                                                  const DimensionTable& y_cohomology, int n,
                                                  int min_degree = 2);

/// WH^+_k(L, L; W) = H^{n-k-1}(L) when WH(L, L; W) = 0.
GradedGroup wh_plus_from_vanishing(const GradedGroup& cohomology_l, int n);

/// WH_k(T*_x M, T*_x M; T*M) = H_{k-n+2}(Omega M).
GradedGroup wrapped_loop_grading(const GradedGroup& based_loop_homology, int n);

struct NearbyVerdict {
  bool isomorphism = false;
  std::string reason;
};

/// pi_*: H(L) -> H(M) is surjective when pi has degree +-1; a surjection
/// between isomorphic finitely generated groups is an isomorphism.
NearbyVerdict nearby_conclusion(const GradedGroup& hl, const GradedGroup& hm, int n, bool degree_pm1);

}  // namespace flexcontact
