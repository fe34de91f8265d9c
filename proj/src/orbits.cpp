#include "flexcontact/orbits.hpp"

#include "flexcontact/errors.hpp"

namespace flexcontact {

std::string to_string(OrbitOrigin o) {
  switch (o) {
    case OrbitOrigin::Old: return "old";
    case OrbitOrigin::Word: return "word";
    case OrbitOrigin::Belt: return "belt";
  }
  return "?";
}

OrbitOrigin parse_orbit_origin(const std::string& text) {
  if (text == "old") return OrbitOrigin::Old;
  if (text == "word") return OrbitOrigin::Word;
  if (text == "belt") return OrbitOrigin::Belt;
  throw InvalidInput("unknown orbit origin '" + text + "'");
}

void OrbitSpectrum::validate() const {
  require(n >= 1, "orbit spectrum needs n >= 1");
  require(bound > 0, "orbit spectrum bound must be positive");
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const auto& o = orbits[i];
    const std::string where = "orbit #" + std::to_string(i);
    require(o.action > 0, where + " has non-positive action");
    require(o.action < bound, where + " has action " + to_string(o.action) + " not below the bound " +
                                  to_string(bound));
    if (o.origin == OrbitOrigin::Belt) require(o.iterate >= 1, where + " is a belt orbit with iterate < 1");
  }
}

OrbitSpectrum rescale(const OrbitSpectrum& s, const Rational& factor) {
  require(factor > 0, "rescaling factor must be positive");
  OrbitSpectrum out = s;
  for (auto& o : out.orbits) o.action *= factor;
  out.bound *= factor;
  return out;
}

OrbitSpectrum restrict_below(const OrbitSpectrum& s, const Rational& bound) {
  require(bound > 0, "bound must be positive");
  OrbitSpectrum out;
  out.n = s.n;
  out.bound = bound;
  for (const auto& o : s.orbits)
    if (o.action < bound) out.orbits.push_back(o);
  return out;
}

}  // namespace flexcontact
