#pragma once

#include "flexcontact/chords.hpp"
#include "flexcontact/orbits.hpp"
#include "flexcontact/words.hpp"

namespace flexcontact {

/// Orbits after flexible surgery along a Legendrian with chords `s`: the old
/// orbits below `bound` plus one orbit per cyclic word w with action below
/// `bound` and degree |w| + n - 3.
OrbitSpectrum bee_surgery(const OrbitSpectrum& y, const ChordSpectrum& s, const Rational& bound,
                          std::size_t word_limit = kDefaultWordLimit);

/// Surgery on an isotropic (k-1)-sphere, k < n. Adds iterates gamma^1..gamma^i
/// of degree 2n - k - 4 + 2j and action epsilon * j. For k = 2 the caller must
/// assert the extra c1 and pi_1 hypotheses.
OrbitSpectrum subcritical_surgery(const OrbitSpectrum& y, int k, int iterates, const Rational& epsilon,
                                  bool k2_hypotheses = false);

/// Ambient Legendrian surgery of index k < n - 1, or the simultaneous variant
/// along Lambda^{k-1} inside the Legendrian: one new chord of degree n - k - 1
/// and action epsilon.
ChordSpectrum ambient_surgery(const ChordSpectrum& s, int k, const Rational& epsilon);

enum class WordKind { Linear, Cyclic };

/// Chords of the belt sphere: one chord c_w per word w with action below
/// `bound`, of degree |w| + n - 2.
ChordSpectrum belt_sphere_chords(const ChordSpectrum& s, const Rational& bound,
                                 WordKind kind = WordKind::Linear,
                                 std::size_t word_limit = kDefaultWordLimit);

/// Surgery on a Legendrian Lambda loose in the complement of Lambda_-. The new
/// chords of Lambda_- are its old chords plus words a c_1 ... c_m b with a in
/// `into` (Lambda_- to Lambda), c_i in `aux` (chords of Lambda) and b in
/// `out_of` (Lambda to Lambda_-). Every chord touching Lambda is first raised
/// by the stabilization that makes `aux`, `into` and `out_of` positive.
struct NonsimultaneousResult {
  ChordSpectrum chords;
  int stabilization = 0;  // the N used
};

NonsimultaneousResult nonsimultaneous_surgery(const ChordSpectrum& own, const ChordSpectrum& into,
                                              const ChordSpectrum& out_of, const ChordSpectrum& aux,
                                              const Rational& bound, const Rational& zigzag_action,
                                              std::size_t word_limit = kDefaultWordLimit);

}  // namespace flexcontact
