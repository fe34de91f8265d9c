#include "flexcontact/words.hpp"

#include "flexcontact/errors.hpp"

#include <algorithm>

namespace flexcontact {

std::vector<std::size_t> canonical_rotation(const std::vector<std::size_t>& letters) {
  const std::size_t n = letters.size();
  if (n == 0) return letters;
  // Booth: failure function over the doubled string.
  std::vector<long> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const std::size_t sj = letters[j % n];
    long i = f[j - k - 1];
    while (i != -1 && sj != letters[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < letters[(k + static_cast<std::size_t>(i) + 1) % n]) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && sj != letters[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < letters[(k + static_cast<std::size_t>(i) + 1) % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  std::vector<std::size_t> out(n);
  for (std::size_t t = 0; t < n; ++t) out[t] = letters[(k + t) % n];
  return out;
}

namespace {

void check_alphabet(const ChordSpectrum& s, const Rational& bound) {
  s.validate();
  require(bound > 0, "word bound must be positive");
  for (const auto& c : s.chords)
    require(c.null_homotopic, "chord '" + c.id + "' is not null-homotopic; its words have no grading");
}

class Enumerator {
public:
  Enumerator(const ChordSpectrum& s, const Rational& bound, std::size_t limit, bool cyclic)
      : s_(s), bound_(bound), limit_(limit), cyclic_(cyclic) {}

  std::vector<Word> run() {
    for (std::size_t first = 0; first < s_.chords.size(); ++first) {
      current_.assign(1, first);
      extend(s_.chords[first].action, s_.chords[first].degree, first);
    }
    std::sort(out_.begin(), out_.end(), [](const Word& a, const Word& b) {
      if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
      return a.letters < b.letters;
    });
    return std::move(out_);
  }

private:
  void extend(const Rational& action, long degree, std::size_t first) {
    if (action >= bound_) return;
    if (!cyclic_ || canonical_rotation(current_) == current_) {
      require(out_.size() < limit_, "word enumeration exceeds the limit of " + std::to_string(limit_) +
                                        " words; lower the bound or raise chord actions");
      out_.push_back(Word{current_, action, degree});
    }
    // A least rotation starts with its smallest letter.
    for (std::size_t next = cyclic_ ? first : 0; next < s_.chords.size(); ++next) {
      current_.push_back(next);
      extend(action + s_.chords[next].action, degree + s_.chords[next].degree, first);
      current_.pop_back();
    }
  }

  const ChordSpectrum& s_;
  Rational bound_;
  std::size_t limit_;
  bool cyclic_;
  std::vector<std::size_t> current_;
  std::vector<Word> out_;
};

}  // namespace

std::vector<Word> enumerate_words(const ChordSpectrum& s, const Rational& bound, std::size_t limit) {
  check_alphabet(s, bound);
  return Enumerator(s, bound, limit, true).run();
}

std::vector<Word> enumerate_linear_words(const ChordSpectrum& s, const Rational& bound,
                                         std::size_t limit) {
  check_alphabet(s, bound);
  return Enumerator(s, bound, limit, false).run();
}

std::string word_label(const ChordSpectrum& s, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i > 0) out += ' ';
    out += s.chords.at(w.letters[i]).id;
  }
  return out;
}

}  // namespace flexcontact
