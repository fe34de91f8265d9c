#include "flexcontact/surgery.hpp"

#include "flexcontact/errors.hpp"

#include <algorithm>

namespace flexcontact {

OrbitSpectrum bee_surgery(const OrbitSpectrum& y, const ChordSpectrum& s, const Rational& bound,
                          std::size_t word_limit) {
  y.validate();
  require(y.n >= 2 && s.n == y.n, "orbit and chord spectra need the same n >= 2");
  require(bound <= y.bound && bound <= s.bound, "bound exceeds the range the spectra are complete in");
  OrbitSpectrum out = restrict_below(y, bound);
  for (const auto& w : enumerate_words(s, bound, word_limit)) {
    OrbitRecord o;
    o.degree = static_cast<int>(w.degree) + y.n - 3;
    o.action = w.action;
    o.origin = OrbitOrigin::Word;
    o.label = word_label(s, w);
    o.contractible = true;
    out.orbits.push_back(std::move(o));
  }
  return out;
}

OrbitSpectrum subcritical_surgery(const OrbitSpectrum& y, int k, int iterates, const Rational& epsilon,
                                  bool k2_hypotheses) {
  y.validate();
  const int n = y.n;
  require(n >= 2, "subcritical surgery needs n >= 2");
  require(k >= 1 && k < n, "surgery index k = " + std::to_string(k) + " is not subcritical for n = " +
                               std::to_string(n));
  require(k != 2 || k2_hypotheses, "k = 2 needs the c1 and pi_1 hypotheses to be asserted");
  require(iterates >= 0, "iterate horizon must be non-negative");
  OrbitSpectrum out = y;
  if (iterates == 0) return out;
  require(epsilon > 0, "handle-shrinking parameter must be positive");
  require(epsilon * iterates < y.bound, "epsilon * i = " + to_string(Rational(epsilon * iterates)) +
                                            " is not below the bound " + to_string(y.bound));
  for (int j = 1; j <= iterates; ++j) {
    OrbitRecord o;
    o.degree = 2 * n - k - 4 + 2 * j;
    o.action = epsilon * j;
    o.origin = OrbitOrigin::Belt;
    o.iterate = j;
    o.contractible = true;
    out.orbits.push_back(std::move(o));
  }
  return out;
}

ChordSpectrum ambient_surgery(const ChordSpectrum& s, int k, const Rational& epsilon) {
  s.validate();
  require(k >= 1, "surgery index must be at least 1");
  require(k < s.n - 1, "index k = " + std::to_string(k) + " is critical or worse for n = " +
                           std::to_string(s.n) + "; critical surgery creates chords of degree 0");
  require(epsilon > 0 && epsilon < s.bound, "new chord action must lie in (0, bound)");
  ChordSpectrum out = s;
  ChordRecord c;
  c.id = "belt";
  for (int suffix = 1; std::any_of(out.chords.begin(), out.chords.end(),
                                   [&](const ChordRecord& r) { return r.id == c.id; });
       ++suffix)
    c.id = "belt" + std::to_string(suffix);
  c.degree = s.n - k - 1;
  c.action = epsilon;
  out.chords.push_back(std::move(c));
  return out;
}

ChordSpectrum belt_sphere_chords(const ChordSpectrum& s, const Rational& bound, WordKind kind,
                                 std::size_t word_limit) {
  require(s.n >= 2, "belt sphere chords need n >= 2");
  require(bound <= s.bound, "bound exceeds the range the chord spectrum is complete in");
  auto words = kind == WordKind::Linear ? enumerate_linear_words(s, bound, word_limit)
                                        : enumerate_words(s, bound, word_limit);
  ChordSpectrum out;
  out.n = s.n;
  out.bound = bound;
  for (const auto& w : words) {
    ChordRecord c;
    c.id = "c[" + word_label(s, w) + "]";
    c.degree = static_cast<int>(w.degree) + s.n - 2;
    c.action = w.action;
    out.chords.push_back(std::move(c));
  }
  return out;
}

namespace {

ChordSpectrum shift_degrees(ChordSpectrum s, int shift) {
  for (auto& c : s.chords) {
    c.degree += shift;
    if (c.front) c.front->down += shift;
  }
  return s;
}

}  // namespace

NonsimultaneousResult nonsimultaneous_surgery(const ChordSpectrum& own, const ChordSpectrum& into,
                                              const ChordSpectrum& out_of, const ChordSpectrum& aux,
                                              const Rational& bound, const Rational& zigzag_action,
                                              std::size_t word_limit) {
  for (const auto* s : {&own, &into, &out_of, &aux}) s->validate();
  const int n = own.n;
  require(into.n == n && out_of.n == n && aux.n == n, "all chord sets need the same n");
  require(n >= 3, "looseness needs n >= 3");
  require(bound > 0, "bound must be positive");
  for (const auto* s : {&own, &into, &out_of, &aux})
    require(bound <= s->bound, "bound exceeds the range the chord sets are complete in");

  int N = 0;
  for (const auto* s : {&into, &out_of, &aux}) N = std::max(N, min_positive_N(*s));
  ChordSpectrum a = shift_degrees(into, 2 * N);
  ChordSpectrum b = shift_degrees(out_of, 2 * N);
  ChordSpectrum c = N == 0 ? aux : stabilize(aux, N, choose_Q(n), zigzag_action);

  NonsimultaneousResult result;
  result.stabilization = N;
  result.chords.n = n;
  result.chords.bound = bound;
  for (const auto& chord : own.chords)
    if (chord.action < bound) result.chords.chords.push_back(chord);

  // Middle segments c_1 ... c_m, m >= 0, as linear words over aux.
  std::vector<Word> middles{Word{{}, Rational(0), 0}};
  if (!c.chords.empty()) {
    auto linear = enumerate_linear_words(c, bound, word_limit);
    middles.insert(middles.end(), linear.begin(), linear.end());
  }
  for (const auto& x : a.chords)
    for (const auto& m : middles)
      for (const auto& y : b.chords) {
        Rational action = x.action + m.action + y.action;
        if (action >= bound) continue;
        require(result.chords.chords.size() < word_limit, "mixed word count exceeds the limit");
        ChordRecord r;
        r.id = x.id + (m.letters.empty() ? "" : " " + word_label(c, m)) + " " + y.id;
        r.degree = x.degree + static_cast<int>(m.degree) + y.degree;
        r.action = action;
        result.chords.chords.push_back(std::move(r));
      }
  return result;
}

}  // namespace flexcontact
