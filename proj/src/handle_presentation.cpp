#include "flexcontact/handle_presentation.hpp"

#include "flexcontact/errors.hpp"

#include <map>

namespace flexcontact {

std::size_t HandlePresentation::handle_count(int index) const {
  std::size_t count = 0;
  for (const auto& h : handles)
    if (h.index == index) ++count;
  return count;
}

void HandlePresentation::validate() const {
  require(n >= 1, "half-dimension n must be at least 1");
  require(dimension >= 1, "dimension must be positive");
  const int top = dimension / 2;
  for (const auto& h : handles) {
    require(h.index >= 0, "handle '" + h.label + "' has negative index");
    require(h.index <= top, "handle '" + h.label + "' has index " + std::to_string(h.index) +
                                " above " + std::to_string(top) + " (Weinstein constraint)");
  }
  if (!allow_multiple_zero_handles)
    require(handle_count(0) == 1, "expected exactly one 0-handle, found " +
                                      std::to_string(handle_count(0)));
  for (int k = 0; k <= top; ++k)
    require(chain.generators(k) == handle_count(k),
            "chain has " + std::to_string(chain.generators(k)) + " generators in degree " +
                std::to_string(k) + " but there are " + std::to_string(handle_count(k)) +
                " handles of that index");
  for (const auto& [k, count] : chain.generator_counts())
    require(k >= 0 && k <= top, "chain generators in degree " + std::to_string(k) +
                                    " with no matching handles (count " + std::to_string(count) + ")");
  chain.validate();
  if (intersection_form) {
    const auto& q = *intersection_form;
    std::size_t m = handle_count(n);
    require(dimension == 2 * n, "intersection_form is only meaningful when dimension = 2n");
    require(q.rows() == m && q.cols() == m,
            "intersection_form must be " + std::to_string(m) + "x" + std::to_string(m));
    const int sign = n % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        require(q(i, j) == sign * q(j, i), n % 2 == 0 ? "intersection_form must be symmetric for even n"
                                                      : "intersection_form must be antisymmetric for odd n");
  }
}

HandlePresentation make_presentation(int n, std::vector<Handle> handles,
                                     const std::vector<std::pair<int, IntegerMatrix>>& boundaries,
                                     int dimension) {
  HandlePresentation p;
  p.n = n;
  p.dimension = dimension == 0 ? 2 * n : dimension;
  p.handles = std::move(handles);
  std::map<int, std::size_t> counts;
  for (const auto& h : p.handles) ++counts[h.index];
  for (const auto& [k, c] : counts) p.chain.set_generators(k, c);
  for (const auto& [k, m] : boundaries) p.chain.set_boundary(k, m);
  p.validate();
  return p;
}

HandlePresentation ball(int n) {
  return make_presentation(n, {{0, "h0"}}, {});
}

HandlePresentation cotangent_sphere(int n) {
  return make_presentation(n, {{0, "h0"}, {n, "zero-section"}}, {});
}

HandlePresentation wedge_thickening(int dimension, const std::vector<int>& sphere_dims) {
  std::vector<Handle> handles{{0, "h0"}};
  for (std::size_t i = 0; i < sphere_dims.size(); ++i)
    handles.push_back({sphere_dims[i], "S" + std::to_string(sphere_dims[i]) + "_" + std::to_string(i + 1)});
  return make_presentation(dimension / 2, std::move(handles), {}, dimension);
}

IntegerMatrix middle_pairing(const HandlePresentation& p) {
  if (p.intersection_form) return *p.intersection_form;
  std::size_t m = p.handle_count(p.n);
  // (-1)^{n(n-1)/2} chi(S^n); chi(S^n) = 2 for n even, 0 for n odd.
  long self = 0;
  if (p.n % 2 == 0) self = ((p.n * (p.n - 1) / 2) % 2 == 0) ? 2 : -2;
  return IntegerMatrix::diagonal(std::vector<Integer>(m, Integer(self)));
}

}  // namespace flexcontact
