#include "flexcontact/chain_complex.hpp"

#include "flexcontact/errors.hpp"
#include "flexcontact/smith_normal_form.hpp"


namespace flexcontact {

void ChainComplex::set_generators(int degree, std::size_t count) {
  if (count == 0)
    generators_.erase(degree);
  else
    generators_[degree] = count;
}

void ChainComplex::set_boundary(int degree, IntegerMatrix boundary) {
  require(boundary.rows() == generators(degree - 1) && boundary.cols() == generators(degree),
          "boundary d_" + std::to_string(degree) + " has shape " + std::to_string(boundary.rows()) +
              "x" + std::to_string(boundary.cols()) + ", expected " +
              std::to_string(generators(degree - 1)) + "x" + std::to_string(generators(degree)));
  if (boundary.is_zero())
    boundaries_.erase(degree);
  else
    boundaries_[degree] = std::move(boundary);
}

std::size_t ChainComplex::generators(int degree) const {
  auto it = generators_.find(degree);
  return it == generators_.end() ? 0 : it->second;
}

IntegerMatrix ChainComplex::boundary(int degree) const {
  auto it = boundaries_.find(degree);
  if (it != boundaries_.end()) return it->second;
  return IntegerMatrix(generators(degree - 1), generators(degree));
}

void ChainComplex::validate() const {
  for (const auto& [k, d] : boundaries_) {
    require(d.rows() == generators(k - 1) && d.cols() == generators(k),
            "boundary d_" + std::to_string(k) + " does not match the generator counts");
    auto next = boundaries_.find(k + 1);
    if (next == boundaries_.end()) continue;
    require((d * next->second).is_zero(),
            "d_" + std::to_string(k) + " * d_" + std::to_string(k + 1) + " is not zero");
  }
}

GradedGroup homology(const ChainComplex& complex) {
  complex.validate();
  std::map<int, std::size_t> ranks;
  std::map<int, std::vector<Integer>> factors;
  for (const auto& [k, d] : complex.boundaries()) {
    auto snf = smith_normal_form(d);
    ranks[k] = snf.rank();
    factors[k] = snf.invariant_factors();
  }
  auto rank_of = [&](int k) {
    auto it = ranks.find(k);
    return it == ranks.end() ? std::size_t{0} : it->second;
  };
  GradedGroup out;
  for (const auto& [k, count] : complex.generator_counts()) {
    std::size_t free = count - rank_of(k) - rank_of(k + 1);
    std::vector<Integer> torsion;
    if (auto it = factors.find(k + 1); it != factors.end())
      for (const auto& f : it->second)
        if (f > 1) torsion.push_back(f);
    out.set(k, AbelianGroup{free, torsion});
  }
  return out;
}

Integer chain_euler_characteristic(const ChainComplex& complex) {
  Integer chi = 0;
  for (const auto& [k, count] : complex.generator_counts()) {
    if (k % 2 == 0)
      chi += static_cast<unsigned long>(count);
    else
      chi -= static_cast<unsigned long>(count);
  }
  return chi;
}

}  // namespace flexcontact
