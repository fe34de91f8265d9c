#include "flexcontact/graded_group.hpp"

#include "flexcontact/errors.hpp"

#include <algorithm>
#include <sstream>

namespace flexcontact {

Coefficients parse_coefficients(const std::string& name) {
  if (name == "Z") return Coefficients::Integers;
  if (name == "Q") return Coefficients::Rationals;
  if (name == "F2" || name == "Z2" || name == "Z/2") return Coefficients::F2;
  throw InvalidInput("unknown coefficient field '" + name + "' (expected Z, Q or F2)");
}

std::string to_string(Coefficients c) {
  switch (c) {
    case Coefficients::Integers: return "Z";
    case Coefficients::Rationals: return "Q";
    case Coefficients::F2: return "F2";
  }
  return "?";
}

std::vector<Integer> coprime_base(const std::vector<Integer>& values) {
  std::vector<Integer> base;
  for (const auto& v : values) {
    Integer a = abs(v);
    if (a > 1) base.push_back(a);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < base.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        Integer g = gcd(base[i], base[j]);
        if (g == 1) continue;
        changed = true;
        if (base[i] == base[j]) {
          base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
          break;
        }
        Integer x = base[i] / g;
        Integer y = base[j] / g;
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
        for (Integer* part : {&g, &x, &y})
          if (*part > 1) base.push_back(*part);
      }
  }
  std::sort(base.begin(), base.end());
  return base;
}

namespace {

// Exponent of each base element in value; value must factor over the base.
std::vector<unsigned> exponents_over(const std::vector<Integer>& base, Integer value) {
  std::vector<unsigned> e(base.size(), 0);
  value = abs(value);
  for (std::size_t i = 0; i < base.size(); ++i)
    while (mpz_divisible_p(value.get_mpz_t(), base[i].get_mpz_t())) {
      value /= base[i];
      ++e[i];
    }
  if (value != 1) throw std::logic_error("value does not factor over the coprime base");
  return e;
}

// For each base element, the multiset of exponents of the cyclic factors.
using ExponentTable = std::vector<std::vector<unsigned>>;

ExponentTable exponent_table(const std::vector<Integer>& base, const std::vector<Integer>& orders) {
  ExponentTable table(base.size());
  for (const auto& order : orders) {
    auto e = exponents_over(base, order);
    for (std::size_t i = 0; i < base.size(); ++i)
      if (e[i] > 0) table[i].push_back(e[i]);
  }
  for (auto& column : table) std::sort(column.begin(), column.end(), std::greater<>());
  return table;
}

// Largest invariant factor takes the largest power of every base element, and
// so on down.
std::vector<Integer> assemble_invariant_factors(const std::vector<Integer>& base,
                                                const ExponentTable& table) {
  std::size_t count = 0;
  for (const auto& column : table) count = std::max(count, column.size());
  std::vector<Integer> factors(count, Integer(1));
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t t = 0; t < table[i].size(); ++t) {
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), base[i].get_mpz_t(), table[i][t]);
      factors[t] *= power;
    }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

}  // namespace

std::size_t AbelianGroup::dimension(Coefficients c) const {
  if (c != Coefficients::F2) return rank;
  std::size_t even = 0;
  for (const auto& d : torsion)
    if (mpz_even_p(d.get_mpz_t())) ++even;
  return rank + even;
}

AbelianGroup AbelianGroup::from_cyclic(std::size_t rank, const std::vector<Integer>& orders) {
  AbelianGroup g;
  g.rank = rank;
  std::vector<Integer> finite;
  for (const auto& o : orders) {
    if (o == 0)
      ++g.rank;
    else if (abs(o) > 1)
      finite.push_back(abs(o));
  }
  auto base = coprime_base(finite);
  g.torsion = assemble_invariant_factors(base, exponent_table(base, finite));
  return g;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Integer> orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  return AbelianGroup::from_cyclic(a.rank + b.rank, orders);
}

AbelianGroup remove_summand(const AbelianGroup& g, const AbelianGroup& c) {
  require(c.rank <= g.rank, "summand has larger free rank than the group");
  std::vector<Integer> all = g.torsion;
  all.insert(all.end(), c.torsion.begin(), c.torsion.end());
  auto base = coprime_base(all);
  auto gt = exponent_table(base, g.torsion);
  auto ct = exponent_table(base, c.torsion);
  for (std::size_t i = 0; i < base.size(); ++i)
    for (unsigned e : ct[i]) {
      auto it = std::find(gt[i].begin(), gt[i].end(), e);
      require(it != gt[i].end(), "torsion " + to_string(c) + " is not a direct summand of " + to_string(g));
      gt[i].erase(it);
    }
  AbelianGroup out;
  out.rank = g.rank - c.rank;
  out.torsion = assemble_invariant_factors(base, gt);
  return out;
}

std::string to_string(const AbelianGroup& g) {
  if (g.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  if (g.rank > 0) {
    out << "Z";
    if (g.rank > 1) out << "^" << g.rank;
    first = false;
  }
  for (const auto& d : g.torsion) {
    if (!first) out << " + ";
    out << "Z/" << d.get_str();
    first = false;
  }
  return out.str();
}

void GradedGroup::set(int degree, AbelianGroup group) {
  if (group.is_zero())
    parts_.erase(degree);
  else
    parts_[degree] = std::move(group);
}

const AbelianGroup& GradedGroup::at(int degree) const {
  static const AbelianGroup zero;
  auto it = parts_.find(degree);
  return it == parts_.end() ? zero : it->second;
}

std::optional<int> GradedGroup::min_degree() const {
  if (parts_.empty()) return std::nullopt;
  return parts_.begin()->first;
}

std::optional<int> GradedGroup::max_degree() const {
  if (parts_.empty()) return std::nullopt;
  return parts_.rbegin()->first;
}

GradedGroup GradedGroup::reindexed(int sign, int offset) const {
  require(sign == 1 || sign == -1, "reindex sign must be +1 or -1");
  GradedGroup out;
  for (const auto& [k, g] : parts_) out.set(sign * k + offset, g);
  return out;
}

GradedGroup direct_sum(const GradedGroup& a, const GradedGroup& b) {
  GradedGroup out = a;
  for (const auto& [k, g] : b.components()) out.set(k, direct_sum(a.at(k), g));
  return out;
}

std::string to_string(const GradedGroup& g) {
  if (g.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, group] : g.components()) {
    if (!first) out << ", ";
    out << "[" << k << "] " << to_string(group);
    first = false;
  }
  return out.str();
}

GradedGroup cohomology_from_homology(const GradedGroup& homology) {
  GradedGroup out;
  for (const auto& [k, g] : homology.components()) {
    if (g.rank > 0) out.set(k, direct_sum(out.at(k), AbelianGroup{g.rank, {}}));
    if (!g.torsion.empty()) out.set(k + 1, direct_sum(out.at(k + 1), AbelianGroup{0, g.torsion}));
  }
  return out;
}

Cancellation cancel_summand(const GradedGroup& a_plus_c, const GradedGroup& b_plus_c,
                            const GradedGroup& c) {
  Cancellation out;
  for (const auto& [k, g] : a_plus_c.components()) out.a.set(k, g);
  for (const auto& [k, g] : b_plus_c.components()) out.b.set(k, g);
  for (const auto& [k, summand] : c.components()) {
    try {
      out.a.set(k, remove_summand(a_plus_c.at(k), summand));
      out.b.set(k, remove_summand(b_plus_c.at(k), summand));
    } catch (const InvalidInput& e) {
      throw InvalidInput("degree " + std::to_string(k) + ": " + e.what());
    }
  }
  out.isomorphic = out.a == out.b;
  return out;
}

Integer euler_characteristic(const GradedGroup& g) {
  Integer chi = 0;
  for (const auto& [k, group] : g.components()) {
    if (k % 2 == 0)
      chi += static_cast<unsigned long>(group.rank);
    else
      chi -= static_cast<unsigned long>(group.rank);
  }
  return chi;
}

int semi_characteristic(const GradedGroup& homology, int n, Coefficients c) {
  require(n % 2 != 0, "semi-characteristic needs an odd dimension, got " + std::to_string(n));
  require(n >= 1, "semi-characteristic needs a positive dimension");
  std::size_t total = 0;
  for (int i = 0; i <= (n - 1) / 2; ++i) {
    if (c == Coefficients::F2) {
      // dim H_i(;F2) = rank H_i + #even factors of H_i + #even factors of H_{i-1}
      std::size_t prev_even = homology.at(i - 1).dimension(Coefficients::F2) - homology.at(i - 1).rank;
      total += homology.at(i).dimension(Coefficients::F2) + prev_even;
    } else {
      total += homology.at(i).rank;
    }
  }
  return static_cast<int>(total % 2);
}

}  // namespace flexcontact
