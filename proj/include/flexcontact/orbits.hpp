#pragma once

#include "flexcontact/numbers.hpp"

#include <string>
#include <vector>

namespace flexcontact {

enum class OrbitOrigin { Old, Word, Belt };
std::string to_string(OrbitOrigin o);
OrbitOrigin parse_orbit_origin(const std::string& text);

struct OrbitRecord {
  int degree = 0;
  Rational action;
  OrbitOrigin origin = OrbitOrigin::Old;
  std::string label;  // chord word for Word, free text for Old
  int iterate = 0;    // j >= 1 for Belt
  bool contractible = true;
  friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

/// Reeb orbits of Y^{2n-1} with action below `bound`.
struct OrbitSpectrum {
  int n = 0;
  std::vector<OrbitRecord> orbits;
  Rational bound;

  void validate() const;
  friend bool operator==(const OrbitSpectrum&, const OrbitSpectrum&) = default;
};

/// Actions and bound are multiplied by `factor`; degrees are unchanged.
OrbitSpectrum rescale(const OrbitSpectrum& s, const Rational& factor);

/// Keeps the orbits of action below `bound` and lowers the bound to it.
OrbitSpectrum restrict_below(const OrbitSpectrum& s, const Rational& bound);

}  // namespace flexcontact
