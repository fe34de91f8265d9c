#include "flexcontact/topology.hpp"

#include "flexcontact/errors.hpp"
#include "flexcontact/smith_normal_form.hpp"

#include <optional>

namespace flexcontact {

WeinsteinCohomology cohomology(const HandlePresentation& p) {
  p.validate();
  WeinsteinCohomology out;
  out.homology = homology(p.chain);
  out.cohomology = cohomology_from_homology(out.homology);
  return out;
}

IntegerMatrix intersection_form_on_homology(const HandlePresentation& p) {
  p.validate();
  require(p.dimension == 2 * p.n, "the intersection form needs dimension 2n");
  const std::size_t m = p.handle_count(p.n);
  IntegerMatrix kernel = IntegerMatrix::identity(m);
  IntegerMatrix d = p.chain.boundary(p.n);
  if (!d.is_zero()) {
    auto snf = smith_normal_form(d);
    std::size_t r = snf.rank();
    kernel = IntegerMatrix(m, m - r);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = r; j < m; ++j) kernel(i, j - r) = snf.V(i, j);
  }
  return kernel.transpose() * middle_pairing(p) * kernel;
}

std::size_t BoundaryHomologyReport::betti(int k) const {
  auto it = rational_betti.find(k);
  return it == rational_betti.end() ? 0 : it->second;
}

bool BoundaryHomologyReport::determined(int k) const {
  for (int u : undetermined)
    if (u == k) return false;
  return true;
}

namespace {

struct MapData {
  std::optional<AbelianGroup> kernel;
  std::optional<AbelianGroup> cokernel;
  std::size_t rank = 0;
};

AbelianGroup torsion_part(const AbelianGroup& g) { return AbelianGroup{0, g.torsion}; }

}  // namespace

BoundaryHomologyReport boundary_homology(const HandlePresentation& p) {
  require(p.n >= 2, "boundary homology needs n >= 2");
  auto w = cohomology(p);
  const int d = p.dimension;
  BoundaryHomologyReport report;
  report.dimension = d - 1;

  // j_m : H_m(W) -> H_m(W, Y) = H^{d-m}(W). Handles stop at d/2, so j_m can
  // only be nonzero in the middle degree of an even-dimensional W.
  std::map<int, MapData> maps;
  for (int m = 0; m <= d; ++m) {
    MapData data;
    const AbelianGroup& source = w.homology.at(m);
    if (d % 2 == 0 && m == d / 2 && source.rank > 0) {
      IntegerMatrix form = intersection_form_on_homology(p);
      auto snf = smith_normal_form(form);
      data.rank = snf.rank();
      data.kernel = AbelianGroup{source.rank - data.rank, {}};
      if (w.homology.at(m - 1).torsion.empty()) {
        std::vector<Integer> orders;
        for (const auto& f : snf.invariant_factors()) orders.push_back(f);
        data.cokernel = AbelianGroup::from_cyclic(source.rank - data.rank, orders);
      }
    } else {
      data.kernel = source;
      data.cokernel = w.cohomology.at(d - m);
    }
    maps[m] = data;
  }
  report.intersection_rank = d % 2 == 0 ? maps[d / 2].rank : 0;

  for (int k = 0; k < d; ++k) {
    const auto& next = maps[k + 1];
    const auto& here = maps[k];
    std::size_t b = w.homology.at(d - k - 1).rank - next.rank + w.homology.at(k).rank - here.rank;
    if (b > 0) report.rational_betti[k] = b;
  }

  std::map<int, std::optional<AbelianGroup>> integral;
  for (int k = 0; k < d; ++k) {
    const auto& c = maps[k + 1].cokernel;
    const auto& kk = maps[k].kernel;
    std::optional<AbelianGroup> g;
    if (c && kk) {
      if (c->is_zero())
        g = *kk;
      else if (kk->is_zero() || kk->torsion.empty())
        g = direct_sum(*c, *kk);
    }
    integral[k] = g;
  }
  // Poincare duality and universal coefficients: H_k(Y) = Free(H_{d-1-k}) +
  // Tors(H_{d-2-k}).
  for (bool changed = true; changed;) {
    changed = false;
    for (int k = 0; k < d; ++k) {
      if (integral[k]) continue;
      int partner = d - 2 - k;
      if (partner < 0) {
        integral[k] = AbelianGroup{report.betti(k), {}};
        changed = true;
      } else if (integral[partner]) {
        integral[k] = AbelianGroup{report.betti(k), torsion_part(*integral[partner]).torsion};
        changed = true;
      }
    }
  }
  for (int k = 0; k < d; ++k) {
    if (integral[k]) {
      if (integral[k]->rank != report.betti(k))
        throw std::logic_error("boundary homology: integral and rational ranks disagree");
      report.integral.set(k, *integral[k]);
    } else {
      report.undetermined.push_back(k);
    }
  }

  report.duality_holds = true;
  for (int k = 0; k < d; ++k) {
    if (report.betti(k) != report.betti(d - 1 - k)) report.duality_holds = false;
    if (k % 2 == 0)
      report.euler_characteristic += static_cast<unsigned long>(report.betti(k));
    else
      report.euler_characteristic -= static_cast<unsigned long>(report.betti(k));
  }
  report.expected_euler_characteristic =
      d % 2 == 1 ? Integer(2 * chain_euler_characteristic(p.chain)) : Integer(0);
  return report;
}

std::size_t intersection_form_rank(const HandlePresentation& p) {
  require(p.dimension == 2 * p.n, "the intersection form rank needs dimension 2n");
  auto w = cohomology(p);
  auto y = boundary_homology(p);
  // Over Q, H^k(Y) and H_k(Y) have the same dimension.
  long value = static_cast<long>(w.cohomology.rank(p.n)) +
               static_cast<long>(w.cohomology.rank(p.n - 1)) - static_cast<long>(y.betti(p.n));
  if (value < 0) throw std::logic_error("intersection form rank came out negative");
  return static_cast<std::size_t>(value);
}

OmegaVerdict omega_membership(const GradedGroup& homology, int n, const ManifoldFlags& flags,
                              Coefficients c) {
  require(n >= 1, "dimension n must be at least 1");
  if (!flags.closed) return {false, "not asserted closed"};
  if (!flags.simply_connected) return {false, "not asserted simply connected"};
  if (!flags.stably_parallelizable) return {false, "not asserted stably parallelizable"};
  if (n % 2 == 0) {
    Integer chi = euler_characteristic(homology);
    if (chi == 2) return {true, "n even and chi = 2"};
    return {false, "n even and chi = " + chi.get_str() + " != 2"};
  }
  int semi = semi_characteristic(homology, n, c);
  if (semi == 1) return {true, "n odd and chi_1/2 = 1 mod 2 over " + to_string(c)};
  return {false, "n odd and chi_1/2 = 0 mod 2 over " + to_string(c)};
}

HandlePresentation boundary_connect_sum(const HandlePresentation& p, const HandlePresentation& q) {
  p.validate();
  q.validate();
  require(p.n == q.n && p.dimension == q.dimension, "boundary connected sum needs equal dimensions");
  require(p.handle_count(0) == 1 && q.handle_count(0) == 1,
          "boundary connected sum needs a single 0-handle on each side");

  HandlePresentation out;
  out.n = p.n;
  out.dimension = p.dimension;
  const int top = p.dimension / 2;
  for (int k = 0; k <= top; ++k) out.chain.set_generators(k, p.chain.generators(k) + (k == 0 ? 0 : q.chain.generators(k)));
  for (int k = 1; k <= top; ++k) {
    IntegerMatrix a = p.chain.boundary(k);
    IntegerMatrix b = q.chain.boundary(k);
    IntegerMatrix m(out.chain.generators(k - 1), out.chain.generators(k));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    // Both 0-handles are identified, so in degree 1 the rows coincide.
    std::size_t row_offset = k == 1 ? 0 : a.rows();
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(row_offset + i, a.cols() + j) = b(i, j);
    out.chain.set_boundary(k, m);
  }
  // Handle order within an index follows p then q, so the middle pairing is
  // block diagonal.
  if (p.intersection_form || q.intersection_form) {
    IntegerMatrix a = middle_pairing(p);
    IntegerMatrix b = middle_pairing(q);
    IntegerMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    out.intersection_form = m;
  }
  // Generator order in the chain must match handle order per index.
  std::vector<Handle> ordered;
  for (int k = 0; k <= top; ++k) {
    for (const auto& h : p.handles)
      if (h.index == k) ordered.push_back(h);
    for (const auto& h : q.handles)
      if (h.index == k && k != 0) ordered.push_back(h);
  }
  out.handles = std::move(ordered);
  out.validate();
  return out;
}

C1Report c1_propagation_check(const HandlePresentation& p) {
  p.validate();
  C1Report report;
  report.equivalence_holds = p.n >= 3;
  for (const auto& h : p.handles) {
    C1Entry e;
    e.label = h.label;
    e.index = h.index;
    if (h.index != 2) {
      e.applies = true;
      e.note = "index != 2";
    } else if (p.n >= 3) {
      e.applies = true;
      e.note = "index 2 with n >= 3";
    } else {
      e.applies = false;
      e.note = "index 2 with n < 3: equivalence not available";
    }
    report.handles.push_back(e);
  }
  return report;
}

}  // namespace flexcontact
