#pragma once

#include "flexcontact/adc.hpp"
#include "flexcontact/chain_complex.hpp"
#include "flexcontact/chords.hpp"
#include "flexcontact/floer_formulas.hpp"
#include "flexcontact/graded_group.hpp"
#include "flexcontact/handle_presentation.hpp"
#include "flexcontact/orbits.hpp"

#include <json.hpp>

#include <string>

namespace flexcontact {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Accepts a missing "schema" field; any value other than 1 is rejected.
void check_schema(const Json& j);

Json read_json_file(const std::string& path);

Json to_json(const Integer& value);
Json to_json(const Rational& value);
Json to_json(const IntegerMatrix& m);
Json to_json(const AbelianGroup& g);
Json to_json(const GradedGroup& g);
Json to_json(const ChainComplex& c);
Json to_json(const HandlePresentation& p);
Json to_json(const ChordSpectrum& s);
Json to_json(const MorseData& q);
Json to_json(const OrbitSpectrum& s);
Json to_json(const ADCCertificate& c);
Json to_json(const DimensionTable& t);
Json to_json(const LoopHomologyTable& t);

Integer integer_from_json(const Json& j, const std::string& where);
Rational rational_from_json(const Json& j, const std::string& where);
IntegerMatrix matrix_from_json(const Json& j, const std::string& where);
GradedGroup graded_group_from_json(const Json& j);
ChainComplex chain_complex_from_json(const Json& j);
HandlePresentation presentation_from_json(const Json& j);
ChordSpectrum chord_spectrum_from_json(const Json& j);
MorseData morse_data_from_json(const Json& j);
OrbitSpectrum orbit_spectrum_from_json(const Json& j, int n = 0, std::optional<Rational> bound = std::nullopt);
ADCCertificate certificate_from_json(const Json& j);
DimensionTable dimension_table_from_json(const Json& j, const std::string& where);
LoopHomologyTable loop_table_from_json(const Json& j);

}  // namespace flexcontact
