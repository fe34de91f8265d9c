#include "flexcontact/chords.hpp"

#include "flexcontact/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace flexcontact {

void ChordSpectrum::validate() const {
  require(n >= 1, "chord spectrum needs n >= 1");
  require(bound > 0, "chord spectrum bound must be positive");
  std::unordered_set<std::string> ids;
  ids.reserve(chords.size());
  for (const auto& c : chords) {
    if (c.action <= 0) throw InvalidInput("chord '" + c.id + "' has non-positive action");
    if (c.action >= bound)
      throw InvalidInput("chord '" + c.id + "' has action " + to_string(c.action) + " not below the bound " +
                         to_string(bound));
    if (!ids.insert(c.id).second) throw InvalidInput("duplicate chord id '" + c.id + "'");
    if (c.front) {
      if (c.front->down < 0 || c.front->up < 0 || c.front->index < 0)
        throw InvalidInput("chord '" + c.id + "' has negative front data");
      if (chord_degree(c.front->down, c.front->up, c.front->index) != c.degree)
        throw InvalidInput("chord '" + c.id + "' degree disagrees with its front data");
    }
  }
}

std::optional<int> ChordSpectrum::min_degree() const {
  if (chords.empty()) return std::nullopt;
  int m = chords.front().degree;
  for (const auto& c : chords) m = std::min(m, c.degree);
  return m;
}

void MorseData::validate() const {
  require(dimension >= 0, "Morse data: negative dimension");
  long alternating = 0;
  for (int i : critical_indices) {
    require(i >= 0 && i <= dimension, "Morse data: critical index " + std::to_string(i) +
                                          " outside [0, " + std::to_string(dimension) + "]");
    alternating += i % 2 == 0 ? 1 : -1;
  }
  require(alternating == euler, "Morse data: critical points give chi = " + std::to_string(alternating) +
                                    " but chi(Q) = " + std::to_string(euler));
}

int chord_degree(int down, int up, int index) {
  require(down >= 0 && up >= 0 && index >= 0, "cusp counts and Morse index must be non-negative");
  return down - up + index - 1;
}

ChordSpectrum stabilize(const ChordSpectrum& s, int N, const MorseData& q, const Rational& epsilon,
                        std::optional<std::size_t> sites) {
  s.validate();
  q.validate();
  require(N >= 0, "N must be non-negative");
  require(q.dimension == s.n - 2, "Q must have dimension n - 2 = " + std::to_string(s.n - 2));
  if (N == 0) return s;
  require(epsilon > 0, "zig-zag action must be positive");
  require(epsilon < s.bound, "zig-zag action " + to_string(epsilon) + " is not below the bound " +
                                 to_string(s.bound));
  const std::size_t site_count = sites.value_or(s.chords.size());

  ChordSpectrum out = s;
  for (auto& c : out.chords) {
    c.degree += 2 * N;
    if (c.front) c.front->down += 2 * N;
  }
  const std::size_t total = 2 * static_cast<std::size_t>(N) * q.critical_indices.size() * site_count;
  const Rational step = epsilon / Rational(Integer(static_cast<unsigned long>(total + 1)));
  out.chords.reserve(out.chords.size() + total);
  std::size_t j = 0;
  for (std::size_t site = 0; site < site_count; ++site) {
    const std::string prefix = "z" + std::to_string(site + 1) + ".";
    for (std::size_t p = 0; p < q.critical_indices.size(); ++p) {
      const std::string middle = prefix + std::to_string(p + 1) + ".";
      const int index = q.critical_indices[p];
      for (int m = 0; m < 2 * N; ++m) {
        ++j;
        ChordRecord& c = out.chords.emplace_back();
        c.id = middle + std::to_string(m + 1);
        c.front = FrontData{2, 0, index};
        c.degree = chord_degree(2, 0, index);
        c.action = step * static_cast<unsigned long>(j);
        c.null_homotopic = true;
      }
    }
  }
  out.validate();
  return out;
}

int min_positive_N(const ChordSpectrum& s) {
  auto m = s.min_degree();
  if (!m || *m >= 1) return 0;
  return 1 - *m;
}

SelfIntersectionIndex self_intersection_index(int n, int N, const MorseData& q) {
  require(n >= 2, "self-intersection index needs n >= 2");
  q.validate();
  long exponent = static_cast<long>(n - 1) * (n - 2) / 2;
  Integer value = Integer(N) * Integer(q.euler);
  if (exponent % 2 != 0) value = -value;
  SelfIntersectionIndex out;
  if (n % 2 == 0 && q.orientable) {
    out.value = value;
  } else {
    out.mod2 = true;
    out.value = mpz_odd_p(value.get_mpz_t()) ? 1 : 0;
  }
  return out;
}

MorseData choose_Q(int n) {
  require(n >= 3, "no closed Q^{n-2} with chi = 0 exists for n <= 2");
  MorseData q;
  q.dimension = n - 2;
  q.euler = 0;
  q.orientable = true;
  if (n == 3) {
    q.name = "S^1";
    q.critical_indices = {0, 1};
  } else {
    q.name = "S^1 x S^" + std::to_string(n - 3);
    q.critical_indices = {0, 1, n - 3, n - 2};
    std::sort(q.critical_indices.begin(), q.critical_indices.end());
  }
  return q;
}

ChordSpectrum rescale(const ChordSpectrum& s, const Rational& factor) {
  require(factor > 0, "rescaling factor must be positive");
  ChordSpectrum out = s;
  for (auto& c : out.chords) c.action *= factor;
  out.bound *= factor;
  return out;
}

}  // namespace flexcontact
