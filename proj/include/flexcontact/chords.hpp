#pragma once

#include "flexcontact/numbers.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace flexcontact {

/// Front-projection provenance of a chord: cusp counts along a path between
/// the endpoints and the Morse index of the height difference.
struct FrontData {
  int down = 0;
  int up = 0;
  int index = 0;
  friend bool operator==(const FrontData&, const FrontData&) = default;
};

struct ChordRecord {
  std::string id;
  int degree = 0;
  Rational action;
  std::optional<FrontData> front;
  bool null_homotopic = true;
  friend bool operator==(const ChordRecord&, const ChordRecord&) = default;
};

/// Reeb chords of a Legendrian in Y^{2n-1} with action below `bound`.
struct ChordSpectrum {
  int n = 0;
  std::vector<ChordRecord> chords;
  Rational bound;

  void validate() const;
  std::optional<int> min_degree() const;
  friend bool operator==(const ChordSpectrum&, const ChordSpectrum&) = default;
};

/// A closed manifold Q^{n-2} carried only through a Morse function on it.
struct MorseData {
  std::string name;
  int dimension = 0;
  long euler = 0;
  bool orientable = true;
  std::vector<int> critical_indices;

  void validate() const;
};

/// |c| = D - U + ind - 1.
int chord_degree(int down, int up, int index);

/// Stabilizes along Q with N zig-zags at `sites` chord endpoints (default: one
/// per chord). Old degrees rise by 2N; each site adds 2N chords per critical
/// point p of degree 1 + ind(p) and action below epsilon.
ChordSpectrum stabilize(const ChordSpectrum& s, int N, const MorseData& q, const Rational& epsilon,
                        std::optional<std::size_t> sites = std::nullopt);

/// Smallest N >= 0 making every old degree positive after stabilization.
int min_positive_N(const ChordSpectrum& s);

struct SelfIntersectionIndex {
  Integer value;
  bool mod2 = false;  // value is a residue in {0, 1}
};

/// (-1)^{(n-1)(n-2)/2} N chi(Q), an integer when n is even and Q orientable,
/// otherwise taken mod 2.
SelfIntersectionIndex self_intersection_index(int n, int N, const MorseData& q);

/// S^1 for n = 3 and S^1 x S^{n-3} for n >= 4, with minimal Morse data.
MorseData choose_Q(int n);

ChordSpectrum rescale(const ChordSpectrum& s, const Rational& factor);

}  // namespace flexcontact
