#pragma once

#include "flexcontact/chords.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace flexcontact {

/// A word in the chords of a spectrum, stored as indices into its chord list.
/// For cyclic words the letters are the lexicographically least rotation.
struct Word {
  std::vector<std::size_t> letters;
  Rational action;
  long degree = 0;
  friend bool operator==(const Word&, const Word&) = default;
};

/// Least rotation (Booth's algorithm).
std::vector<std::size_t> canonical_rotation(const std::vector<std::size_t>& letters);

/// Default ceiling on the number of words an enumeration may produce.
inline constexpr std::size_t kDefaultWordLimit = 2'000'000;

/// Every nonempty cyclic class of words with total action below `bound`,
/// each once, ordered by (length, letters). Throws InvalidInput if a chord is
/// not null-homotopic or the limit is exceeded.
std::vector<Word> enumerate_words(const ChordSpectrum& s, const Rational& bound,
                                  std::size_t limit = kDefaultWordLimit);

/// Every nonempty linear word with total action below `bound`.
std::vector<Word> enumerate_linear_words(const ChordSpectrum& s, const Rational& bound,
                                         std::size_t limit = kDefaultWordLimit);

/// Chord ids joined by spaces.
std::string word_label(const ChordSpectrum& s, const Word& w);

}  // namespace flexcontact
