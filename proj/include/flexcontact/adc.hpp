#pragma once

#include "flexcontact/chords.hpp"
#include "flexcontact/orbits.hpp"
#include "flexcontact/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flexcontact {

/// One contact form alpha_k = scale * alpha_1 together with its orbits below
/// `bound`, actions measured with alpha_k.
struct Stage {
  Rational scale;
  Rational bound;
  OrbitSpectrum spectrum;
  friend bool operator==(const Stage&, const Stage&) = default;
};

struct ADCCertificate {
  int n = 0;
  std::vector<Stage> stages;
  friend bool operator==(const ADCCertificate&, const ADCCertificate&) = default;
};

struct ADCVerdict {
  bool pass = true;
  std::optional<std::size_t> stage;   // 0-based
  std::optional<std::size_t> record;  // 0-based, within the stage
  std::string reason;
};

/// Scales positive and non-increasing, bounds strictly increasing, spectra
/// consistent with their stage, contractible orbits of positive degree.
ADCVerdict adc_check(const ADCCertificate& c);

/// Picks stages with D_{next} >= D_prev / eps^2 (starting at the first) and
/// multiplies stage k (0-based) by eps^k. Throws if fewer than `min_stages`
/// stages survive.
ADCCertificate normalize_certificate(const ADCCertificate& c, const Rational& eps,
                                     std::size_t min_stages = 1);

struct FlexibleSurgeryOptions {
  /// Action given to zig-zag chords when a stage needs stabilizing, as a
  /// fraction of the stage cut-off k 4^k.
  Rational zigzag_fraction{99, 100};
  std::size_t word_limit = kDefaultWordLimit;
};

struct FlexibleSurgeryResult {
  ADCCertificate certificate;
  std::vector<std::size_t> chosen;  // input stage used for output stage k = 1, 2, ...
  std::vector<int> stabilization;   // N applied at each output stage
};

/// Flexible surgery along a Legendrian whose chords at each input stage are
/// `chords[i]` (or `chords[0]` rescaled by the stage scale when a single
/// spectrum is given). Chooses stages with D > k 4^k, stabilizes where some
/// chord below k 4^k has non-positive degree, adds word orbits and rescales
/// by 4^{-k}, so output stage k has bound k.
FlexibleSurgeryResult flexible_surgery_certificate(const ADCCertificate& c,
                                                   const std::vector<ChordSpectrum>& chords,
                                                   const FlexibleSurgeryOptions& options = {});

}  // namespace flexcontact
