#include "flexcontact/adc.hpp"

#include "flexcontact/errors.hpp"
#include "flexcontact/surgery.hpp"

namespace flexcontact {

ADCVerdict adc_check(const ADCCertificate& c) {
  auto fail = [](std::size_t stage, std::optional<std::size_t> record, std::string reason) {
    return ADCVerdict{false, stage, record, std::move(reason)};
  };
  for (std::size_t k = 0; k < c.stages.size(); ++k) {
    const Stage& s = c.stages[k];
    if (s.scale <= 0) return fail(k, std::nullopt, "scale is not positive");
    if (s.bound <= 0) return fail(k, std::nullopt, "bound is not positive");
    if (k > 0 && s.scale > c.stages[k - 1].scale)
      return fail(k, std::nullopt, "scale " + to_string(s.scale) + " exceeds the previous scale " +
                                       to_string(c.stages[k - 1].scale));
    if (k > 0 && s.bound <= c.stages[k - 1].bound)
      return fail(k, std::nullopt, "bound " + to_string(s.bound) + " does not exceed the previous bound " +
                                       to_string(c.stages[k - 1].bound));
    if (s.spectrum.n != c.n) return fail(k, std::nullopt, "spectrum dimension differs from the certificate");
    if (s.spectrum.bound != s.bound) return fail(k, std::nullopt, "spectrum bound differs from the stage bound");
    for (std::size_t r = 0; r < s.spectrum.orbits.size(); ++r) {
      const auto& o = s.spectrum.orbits[r];
      if (o.action <= 0 || o.action >= s.bound)
        return fail(k, r, "action " + to_string(o.action) + " outside (0, " + to_string(s.bound) + ")");
      if (o.contractible && o.degree <= 0)
        return fail(k, r, "contractible orbit of degree " + std::to_string(o.degree));
    }
  }
  return ADCVerdict{true, std::nullopt, std::nullopt, "all stages pass"};
}

ADCCertificate normalize_certificate(const ADCCertificate& c, const Rational& eps, std::size_t min_stages) {
  require(eps > 0 && eps < 1, "epsilon must lie in (0, 1)");
  auto verdict = adc_check(c);
  require(verdict.pass, "input certificate fails the ADC check: " + verdict.reason);
  require(!c.stages.empty(), "certificate has no stages");
  const Rational factor = 1 / (eps * eps);
  std::vector<std::size_t> chosen{0};
  for (std::size_t i = 1; i < c.stages.size(); ++i)
    if (c.stages[i].bound >= factor * c.stages[chosen.back()].bound) chosen.push_back(i);
  require(chosen.size() >= min_stages, "only " + std::to_string(chosen.size()) +
                                           " stages satisfy D_next >= D / eps^2, need " +
                                           std::to_string(min_stages));
  ADCCertificate out;
  out.n = c.n;
  Rational power = 1;
  for (std::size_t i : chosen) {
    const Stage& s = c.stages[i];
    out.stages.push_back(Stage{s.scale * power, s.bound * power, rescale(s.spectrum, power)});
    power *= eps;
  }
  return out;
}

FlexibleSurgeryResult flexible_surgery_certificate(const ADCCertificate& c,
                                                   const std::vector<ChordSpectrum>& chords,
                                                   const FlexibleSurgeryOptions& options) {
  require(c.n >= 3, "flexible Weinstein domains are only defined for n >= 3");
  auto verdict = adc_check(c);
  require(verdict.pass, "input certificate fails the ADC check: " + verdict.reason);
  require(chords.size() == 1 || chords.size() == c.stages.size(),
          "give one chord spectrum, or one per stage");
  require(options.zigzag_fraction > 0 && options.zigzag_fraction < 1, "zig-zag fraction must lie in (0, 1)");
  for (const auto& s : chords) {
    s.validate();
    require(s.n == c.n, "chord spectrum dimension differs from the certificate");
  }

  FlexibleSurgeryResult result;
  result.certificate.n = c.n;
  const MorseData q = choose_Q(c.n);
  long k = 1;
  Rational four_k = 4;
  for (std::size_t i = 0; i < c.stages.size(); ++i) {
    const Stage& stage = c.stages[i];
    const Rational cutoff = four_k * k;
    if (!(stage.bound > cutoff)) continue;

    ChordSpectrum s = chords.size() == 1 ? rescale(chords[0], stage.scale / c.stages[0].scale) : chords[i];
    require(s.bound >= cutoff, "chord spectrum at stage " + std::to_string(i) +
                                   " is only complete below " + to_string(s.bound) + ", need " +
                                   to_string(cutoff));
    ChordSpectrum restricted;
    restricted.n = s.n;
    restricted.bound = cutoff;
    for (const auto& chord : s.chords)
      if (chord.action < cutoff && chord.null_homotopic) restricted.chords.push_back(chord);

    int N = min_positive_N(restricted);
    if (N > 0) {
      const std::size_t old_count = restricted.chords.size();
      const Rational eps = cutoff * options.zigzag_fraction;
      restricted = stabilize(restricted, N, q, eps);
      // Zig-zag actions only need to lie in (0, eps); moving them into [eps/2, eps) keeps words short.
      for (std::size_t j = old_count; j < restricted.chords.size(); ++j)
        restricted.chords[j].action = (eps + restricted.chords[j].action) / 2;
    }

    OrbitSpectrum surgered = bee_surgery(stage.spectrum, restricted, cutoff, options.word_limit);
    const Rational shrink = 1 / four_k;
    result.certificate.stages.push_back(
        Stage{stage.scale * shrink, Rational(k), rescale(surgered, shrink)});
    result.chosen.push_back(i);
    result.stabilization.push_back(N);
    ++k;
    four_k *= 4;
  }
  require(!result.certificate.stages.empty(), "no stage has D_k > k 4^k; the bound condition is unsatisfiable");
  auto out_verdict = adc_check(result.certificate);
  if (!out_verdict.pass)
    throw std::logic_error("flexible surgery produced a failing certificate: " + out_verdict.reason);
  return result;
}

}  // namespace flexcontact
