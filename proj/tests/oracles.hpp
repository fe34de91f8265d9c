#pragma once

// Independent reference implementations used only by the tests.

#include "flexcontact/adc.hpp"
#include "flexcontact/chain_complex.hpp"
#include "flexcontact/chords.hpp"
#include "flexcontact/smith_normal_form.hpp"
#include "flexcontact/words.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using flexcontact::ChordRecord;
using flexcontact::ChordSpectrum;
using flexcontact::Integer;
using flexcontact::IntegerMatrix;
using flexcontact::Rational;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Rank over Q by fraction-exact Gaussian elimination.
inline std::size_t rational_rank(const IntegerMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = Rational(m(r, c));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][c] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Determinant by fraction-exact elimination.
inline Rational rational_determinant(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = Rational(m(r, c));
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

inline IntegerMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(rng, lo, hi);
  return m;
}

/// A random complex C_2 -> C_1 -> C_0 with d1 d2 = 0: d2 maps into an integral kernel basis of d1.
inline flexcontact::ChainComplex random_complex(Rng& rng) {
  const std::size_t n0 = uniform(rng, 1, 4), n1 = uniform(rng, 1, 5), n2 = uniform(rng, 1, 4);
  IntegerMatrix d1 = random_matrix(rng, n0, n1, -3, 3);
  if (uniform(rng, 0, 3) == 0) d1 = IntegerMatrix(n0, n1);
  auto snf = flexcontact::smith_normal_form(d1);
  const std::size_t r = snf.rank();
  IntegerMatrix d2(n1, n2);
  if (r < n1) {
    IntegerMatrix mix = random_matrix(rng, n1 - r, n2, -3, 3);
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n2; ++j)
        for (std::size_t k = 0; k < n1 - r; ++k) d2(i, j) += snf.V(i, r + k) * mix(k, j);
  }
  flexcontact::ChainComplex c;
  c.set_generators(0, n0);
  c.set_generators(1, n1);
  c.set_generators(2, n2);
  c.set_boundary(1, d1);
  c.set_boundary(2, d2);
  return c;
}

struct WordKey {
  std::vector<std::size_t> letters;
  long degree;
  Rational action;
  friend bool operator<(const WordKey& a, const WordKey& b) {
    return std::tie(a.letters, a.degree) < std::tie(b.letters, b.degree) ||
           (std::tie(a.letters, a.degree) == std::tie(b.letters, b.degree) && a.action < b.action);
  }
  friend bool operator==(const WordKey& a, const WordKey& b) {
    return a.letters == b.letters && a.degree == b.degree && a.action == b.action;
  }
};

/// Lexicographically least rotation by trying every rotation.
inline std::vector<std::size_t> least_rotation(const std::vector<std::size_t>& w) {
  std::vector<std::size_t> best = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::vector<std::size_t> rot(w.begin() + r, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + r);
    best = std::min(best, rot);
  }
  return best;
}

/// Every letter sequence with total action below the bound, deduplicated by rotation.
inline std::vector<WordKey> brute_force_words(const ChordSpectrum& s, const Rational& bound, bool cyclic) {
  std::set<WordKey> found;
  std::vector<std::size_t> current;
  auto extend = [&](auto&& self, const Rational& action, long degree) -> void {
    if (!current.empty())
      found.insert(WordKey{cyclic ? least_rotation(current) : current, degree, action});
    for (std::size_t i = 0; i < s.chords.size(); ++i) {
      Rational next = action + s.chords[i].action;
      if (next >= bound) continue;
      current.push_back(i);
      self(self, next, degree + s.chords[i].degree);
      current.pop_back();
    }
  };
  extend(extend, Rational(0), 0);
  return {found.begin(), found.end()};
}

inline std::vector<WordKey> keys_of(const std::vector<flexcontact::Word>& words) {
  std::vector<WordKey> out;
  for (const auto& w : words) out.push_back(WordKey{w.letters, w.degree, w.action});
  std::sort(out.begin(), out.end());
  return out;
}

inline Rational random_rational(Rng& rng, long lo_num, long hi_num, long max_den) {
  long den = uniform(rng, 1, max_den);
  Rational r(Integer(uniform(rng, lo_num * den, hi_num * den)), Integer(den));
  r.canonicalize();
  return r;
}

/// A chord spectrum with degrees in [dlo, dhi] and actions in (0, bound).
inline ChordSpectrum random_spectrum(Rng& rng, int n, std::size_t max_chords, int dlo, int dhi,
                                     const Rational& bound) {
  ChordSpectrum s;
  s.n = n;
  s.bound = bound;
  const std::size_t count = uniform(rng, 1, static_cast<long>(max_chords));
  for (std::size_t i = 0; i < count; ++i) {
    Rational a(Integer(uniform(rng, 1, 999)), Integer(1000));
    s.chords.push_back(ChordRecord{"c" + std::to_string(i + 1), static_cast<int>(uniform(rng, dlo, dhi)),
                                   Rational(a * bound), std::nullopt, true});
  }
  return s;
}

}  // namespace oracle
