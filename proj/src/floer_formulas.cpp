#include "flexcontact/floer_formulas.hpp"

#include "flexcontact/errors.hpp"

#include <algorithm>
#include <sstream>

namespace flexcontact {

DimensionTable dimensions_of(const GradedGroup& g) {
  DimensionTable out;
  for (const auto& [k, group] : g.components())
    if (group.rank > 0) out[k] = static_cast<long>(group.rank);
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Distinct: return "distinct";
    case Verdict::Indistinguishable: return "indistinguishable";
    case Verdict::Invalid: return "invalid";
  }
  return "?";
}

namespace {

long lookup(const DimensionTable& t, int k) {
  auto it = t.find(k);
  return it == t.end() ? 0 : it->second;
}

void require_nonnegative(const DimensionTable& t, const std::string& what) {
  for (const auto& [k, v] : t)
    require(v >= 0, what + " has negative dimension " + std::to_string(v) + " in degree " +
                        std::to_string(k));
}

}  // namespace

GradedGroup sh_plus_from_vanishing(const GradedGroup& cohomology, int n, bool weinstein) {
  if (weinstein && !cohomology.is_zero()) {
    require(*cohomology.min_degree() >= 0, "cohomology in negative degree");
    require(*cohomology.max_degree() <= n,
            "a Weinstein domain has no cohomology above degree n = " + std::to_string(n));
  }
  return cohomology.reindexed(-1, n + 1);
}

GradedGroup cohomology_from_sh_plus(const GradedGroup& sh_plus, int n) {
  return sh_plus.reindexed(-1, n + 1);
}

std::map<int, Interval> taut_les_bounds(const DimensionTable& known,
                                        const DimensionTable& cohomology, int n) {
  require_nonnegative(known, "SH table");
  require_nonnegative(cohomology, "cohomology table");
  std::set<int> degrees;
  for (const auto& [k, v] : known) degrees.insert(k);
  for (const auto& [j, v] : cohomology) {
    degrees.insert(n - j);      // j = n - k
    degrees.insert(n - j + 1);  // j = n - k + 1
  }
  std::map<int, Interval> out;
  for (int k : degrees) {
    long b = lookup(cohomology, n - k) + lookup(cohomology, n - k + 1);
    long s = lookup(known, k);
    out[k] = Interval{std::max(0L, s - b), s + b};
  }
  return out;
}

DistinguisherReport distinguish_flexible_fillings(const GradedGroup& a, const GradedGroup& b, int n) {
  require(n >= 3, "flexibility is only defined for n >= 3");
  DistinguisherReport report;
  std::set<int> degrees;
  for (const auto& [k, g] : a.components()) degrees.insert(k);
  for (const auto& [k, g] : b.components()) degrees.insert(k);
  for (int k : degrees) {
    if (a.at(k) == b.at(k)) continue;
    report.verdict = Verdict::Distinct;
    report.degree = k;
    report.detail = "H^" + std::to_string(k) + ": " + to_string(a.at(k)) + " != " + to_string(b.at(k));
    return report;
  }
  report.detail = "integral cohomology agrees in every degree";
  return report;
}

bool cem_flexible_obstruction(long k, long dim_h1_mod2) {
  require(k >= 1, "number of copies must be at least 1");
  require(dim_h1_mod2 >= 0, "dim H^1(Y; Z/2) must be non-negative");
  return k >= dim_h1_mod2 + 2;
}

SupportVerdict flexible_support_test(const std::set<int>& support, int n) {
  for (int k : support)
    if (k >= n + 2 || k <= 0) return {true, k};
  return {false, std::nullopt};
}

SupportVerdict adc_support_test(const std::set<int>& support, int n) {
  for (int k : support)
    if (k <= 3 - n) return {true, k};
  return {false, std::nullopt};
}

std::set<int> support_of(const GradedGroup& g) {
  std::set<int> out;
  for (const auto& [k, group] : g.components()) out.insert(k);
  return out;
}

namespace {

void check_loop_table(const LoopHomologyTable& t, const std::string& name) {
  require_nonnegative(t.dims, name + " loop table");
  require_nonnegative(t.base, name + " base table");
  require(t.horizon >= 0, name + " loop table has a negative horizon");
  for (const auto& [k, v] : t.base)
    if (k <= t.horizon)
      require(lookup(t.dims, k) >= v,
              name + ": dim H_" + std::to_string(k) + " of the loop space is " +
                  std::to_string(lookup(t.dims, k)) + ", below the constant-loop bound " +
                  std::to_string(v));
}

}  // namespace

DistinguisherReport boundedinfinite_distinguisher(const LoopHomologyTable& lm,
                                                  const LoopHomologyTable& ln,
                                                  const DimensionTable& y_cohomology, int n,
                                                  int min_degree) {
  require(n >= 4, "the loop-space distinguisher needs n >= 4");
  require_nonnegative(y_cohomology, "H^*(Y) table");
  check_loop_table(lm, "M");
  check_loop_table(ln, "N");
  DistinguisherReport report;
  const int horizon = std::min(lm.horizon, ln.horizon);
  for (int k = min_degree; k <= horizon; ++k) {
    long diff = lookup(lm.dims, k) - lookup(ln.dims, k);
    long bound = 2 * lookup(y_cohomology, n - k) + 2 * lookup(y_cohomology, n - k + 1);
    if (std::labs(diff) > bound) {
      std::ostringstream detail;
      detail << "k = " << k << ": |" << lookup(lm.dims, k) << " - " << lookup(ln.dims, k)
             << "| = " << std::labs(diff) << " > 2*" << lookup(y_cohomology, n - k) << " + 2*"
             << lookup(y_cohomology, n - k + 1) << " = " << bound;
      report.verdict = Verdict::Distinct;
      report.degree = k;
      report.detail = detail.str();
      return report;
    }
  }
  report.detail = "no degree in [" + std::to_string(min_degree) + ", " + std::to_string(horizon) +
                  "] exceeds the bound";
  return report;
}

GradedGroup wh_plus_from_vanishing(const GradedGroup& cohomology_l, int n) {
  return cohomology_l.reindexed(-1, n - 1);
}

GradedGroup wrapped_loop_grading(const GradedGroup& based_loop_homology, int n) {
  return based_loop_homology.reindexed(1, n - 2);
}

NearbyVerdict nearby_conclusion(const GradedGroup& hl, const GradedGroup& hm, int n, bool degree_pm1) {
  require(n >= 1, "dimension n must be at least 1");
  for (const auto* g : {&hl, &hm})
    if (!g->is_zero())
      require(*g->min_degree() >= 0 && *g->max_degree() <= n,
              "homology table outside degrees [0, n] for n = " + std::to_string(n));
  if (!degree_pm1) return {false, "projection degree not asserted to be +-1"};
  if (!(hl == hm)) return {false, "H(L) and H(M) are not isomorphic, so surjectivity gives no isomorphism"};
  return {true, "pi_* is surjective between isomorphic finitely generated groups, hence an isomorphism"};
}

}  // namespace flexcontact
