#include "flexcontact/json_io.hpp"

#include "flexcontact/errors.hpp"

#include <fstream>
#include <map>

namespace flexcontact {

void check_schema(const Json& j) {
  require(j.is_object(), "expected a JSON object at the top level");
  if (!j.contains("schema")) return;
  require(j["schema"].is_number_integer() && j["schema"].get<long>() == kSchemaVersion,
          "unsupported schema version " + j["schema"].dump() + " (expected 1)");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  require(j.is_object() && j.contains(key), where + ": missing field '" + key + "'");
  return j[key];
}

long small_int(const Json& j, const std::string& where) {
  require(j.is_number_integer(), where + ": expected an integer, got " + j.dump());
  return j.get<long>();
}

int degree_key(const std::string& key, const std::string& where) {
  Integer k = parse_integer(key);
  require(k.fits_sint_p(), where + ": degree " + key + " out of range");
  return static_cast<int>(k.get_si());
}

bool flag(const Json& j, const char* key, bool fallback) {
  if (!j.contains(key)) return fallback;
  require(j[key].is_boolean(), std::string("field '") + key + "' must be true or false");
  return j[key].get<bool>();
}

}  // namespace

Json to_json(const Integer& value) { return value.get_str(); }
Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const IntegerMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const AbelianGroup& g) {
  Json torsion = Json::array();
  for (const auto& d : g.torsion) torsion.push_back(d.get_str());
  return Json{{"rank", g.rank}, {"torsion", torsion}};
}

Json to_json(const GradedGroup& g) {
  Json groups = Json::object();
  for (const auto& [k, group] : g.components()) groups[std::to_string(k)] = to_json(group);
  return Json{{"schema", kSchemaVersion}, {"groups", groups}};
}

Json to_json(const ChainComplex& c) {
  Json generators = Json::object();
  for (const auto& [k, n] : c.generator_counts()) generators[std::to_string(k)] = n;
  Json boundaries = Json::object();
  for (const auto& [k, m] : c.boundaries()) boundaries[std::to_string(k)] = to_json(m);
  return Json{{"schema", kSchemaVersion}, {"generators", generators}, {"boundaries", boundaries}};
}

Json to_json(const HandlePresentation& p) {
  Json handles = Json::array();
  for (const auto& h : p.handles) handles.push_back(Json{{"index", h.index}, {"label", h.label}});
  Json boundaries = Json::object();
  for (const auto& [k, m] : p.chain.boundaries()) boundaries[std::to_string(k)] = to_json(m);
  Json out{{"schema", kSchemaVersion}, {"n", p.n}, {"dimension", p.dimension}, {"handles", handles},
           {"boundary_matrices", boundaries}};
  if (p.intersection_form) out["intersection_form"] = to_json(*p.intersection_form);
  if (p.allow_multiple_zero_handles) out["allow_multiple_zero_handles"] = true;
  return out;
}

Json to_json(const ChordSpectrum& s) {
  Json chords = Json::array();
  for (const auto& c : s.chords) {
    Json j{{"id", c.id}, {"degree", c.degree}, {"action", to_string(c.action)}};
    if (c.front) j["front"] = Json{{"down", c.front->down}, {"up", c.front->up}, {"index", c.front->index}};
    j["null_homotopic"] = c.null_homotopic;
    chords.push_back(j);
  }
  return Json{{"schema", kSchemaVersion}, {"n", s.n}, {"bound", to_string(s.bound)}, {"chords", chords}};
}

Json to_json(const MorseData& q) {
  return Json{{"name", q.name},           {"dimension", q.dimension},
              {"euler", q.euler},         {"orientable", q.orientable},
              {"critical_indices", q.critical_indices}};
}

namespace {

Json orbit_records(const OrbitSpectrum& s) {
  Json orbits = Json::array();
  for (const auto& o : s.orbits) {
    Json j{{"degree", o.degree}, {"action", to_string(o.action)}, {"origin", to_string(o.origin)}};
    if (!o.label.empty()) j["label"] = o.label;
    if (o.origin == OrbitOrigin::Belt) j["iterate"] = o.iterate;
    j["contractible"] = o.contractible;
    orbits.push_back(j);
  }
  return orbits;
}

}  // namespace

Json to_json(const OrbitSpectrum& s) {
  return Json{{"schema", kSchemaVersion}, {"n", s.n}, {"bound", to_string(s.bound)}, {"orbits", orbit_records(s)}};
}

Json to_json(const ADCCertificate& c) {
  Json stages = Json::array();
  for (const auto& s : c.stages)
    stages.push_back(Json{{"scale", to_string(s.scale)}, {"bound", to_string(s.bound)}, {"orbits", orbit_records(s.spectrum)}});
  return Json{{"schema", kSchemaVersion}, {"n", c.n}, {"stages", stages}};
}

Json to_json(const DimensionTable& t) {
  Json out = Json::object();
  for (const auto& [k, v] : t) out[std::to_string(k)] = v;
  return out;
}

Json to_json(const LoopHomologyTable& t) {
  return Json{{"schema", kSchemaVersion}, {"dims", to_json(t.dims)}, {"base", to_json(t.base)}, {"horizon", t.horizon}};
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  require(j.is_string(), where + ": expected an integer or a decimal string, got " + j.dump());
  try {
    return parse_integer(j.get<std::string>());
  } catch (const InvalidInput& e) {
    throw InvalidInput(where + ": " + e.what());
  }
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  require(j.is_string(), where + ": expected a rational string such as \"3/2\", got " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InvalidInput& e) {
    throw InvalidInput(where + ": " + e.what());
  }
}

IntegerMatrix matrix_from_json(const Json& j, const std::string& where) {
  require(j.is_array(), where + ": a matrix is an array of rows");
  if (j.empty()) return IntegerMatrix();
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  IntegerMatrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    require(j[r].is_array() && j[r].size() == cols, where + ": rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = integer_from_json(j[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

GradedGroup graded_group_from_json(const Json& j) {
  check_schema(j);
  const Json& groups = field(j, "groups", "graded group");
  require(groups.is_object(), "graded group: 'groups' must map degrees to groups");
  GradedGroup g;
  for (const auto& [key, value] : groups.items()) {
    const std::string where = "graded group degree " + key;
    int k = degree_key(key, where);
    long rank = value.contains("rank") ? small_int(value["rank"], where + " rank") : 0;
    require(rank >= 0, where + ": negative rank");
    std::vector<Integer> orders;
    if (value.contains("torsion")) {
      require(value["torsion"].is_array(), where + ": torsion must be a list");
      for (const auto& t : value["torsion"]) {
        Integer d = integer_from_json(t, where + " torsion");
        require(d >= 2, where + ": torsion orders must be at least 2");
        orders.push_back(d);
      }
    }
    g.set(k, AbelianGroup::from_cyclic(static_cast<std::size_t>(rank), orders));
  }
  return g;
}

ChainComplex chain_complex_from_json(const Json& j) {
  check_schema(j);
  ChainComplex c;
  const Json& generators = field(j, "generators", "chain complex");
  require(generators.is_object(), "chain complex: 'generators' must map degrees to counts");
  for (const auto& [key, value] : generators.items()) {
    long count = small_int(value, "generators " + key);
    require(count >= 0, "generators " + key + ": negative count");
    c.set_generators(degree_key(key, "generators"), static_cast<std::size_t>(count));
  }
  if (j.contains("boundaries"))
    for (const auto& [key, value] : j["boundaries"].items()) {
      int k = degree_key(key, "boundaries");
      IntegerMatrix m = matrix_from_json(value, "boundary " + key);
      if (m.rows() == 0 && m.cols() == 0) m = IntegerMatrix(c.generators(k - 1), c.generators(k));
      c.set_boundary(k, m);
    }
  c.validate();
  return c;
}

HandlePresentation presentation_from_json(const Json& j) {
  check_schema(j);
  int n = static_cast<int>(small_int(field(j, "n", "presentation"), "presentation n"));
  int dimension = j.contains("dimension") ? static_cast<int>(small_int(j["dimension"], "presentation dimension")) : 0;
  std::vector<Handle> handles;
  const Json& hs = field(j, "handles", "presentation");
  require(hs.is_array(), "presentation: 'handles' must be a list");
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const std::string where = "handle #" + std::to_string(i);
    Handle h;
    h.index = static_cast<int>(small_int(field(hs[i], "index", where), where + " index"));
    h.label = hs[i].contains("label") ? hs[i]["label"].get<std::string>() : "h" + std::to_string(i);
    handles.push_back(h);
  }
  // Keep the chain generator order equal to the handle order within an index.
  std::vector<std::pair<int, IntegerMatrix>> boundaries;
  std::map<int, std::size_t> counts;
  for (const auto& h : handles) ++counts[h.index];
  if (j.contains("boundary_matrices"))
    for (const auto& [key, value] : j["boundary_matrices"].items()) {
      int k = degree_key(key, "boundary_matrices");
      IntegerMatrix m = matrix_from_json(value, "boundary matrix " + key);
      if (m.rows() == 0 && m.cols() == 0) m = IntegerMatrix(counts[k - 1], counts[k]);
      boundaries.emplace_back(k, m);
    }
  HandlePresentation p;
  try {
    p = make_presentation(n, std::move(handles), boundaries, dimension);
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string("presentation: ") + e.what());
  }
  if (j.contains("intersection_form")) p.intersection_form = matrix_from_json(j["intersection_form"], "intersection_form");
  p.allow_multiple_zero_handles = flag(j, "allow_multiple_zero_handles", false);
  p.validate();
  return p;
}

ChordSpectrum chord_spectrum_from_json(const Json& j) {
  check_schema(j);
  ChordSpectrum s;
  s.n = static_cast<int>(small_int(field(j, "n", "chord spectrum"), "chord spectrum n"));
  s.bound = rational_from_json(field(j, "bound", "chord spectrum"), "chord spectrum bound");
  const Json& chords = field(j, "chords", "chord spectrum");
  require(chords.is_array(), "chord spectrum: 'chords' must be a list");
  for (std::size_t i = 0; i < chords.size(); ++i) {
    const Json& c = chords[i];
    const std::string where = "chord #" + std::to_string(i);
    ChordRecord r;
    r.id = c.contains("id") ? c["id"].get<std::string>() : "c" + std::to_string(i + 1);
    r.action = rational_from_json(field(c, "action", where), where + " action");
    if (c.contains("front")) {
      const Json& f = c["front"];
      r.front = FrontData{static_cast<int>(small_int(field(f, "down", where), where + " down")),
                          static_cast<int>(small_int(field(f, "up", where), where + " up")),
                          static_cast<int>(small_int(field(f, "index", where), where + " index"))};
    }
    if (c.contains("degree"))
      r.degree = static_cast<int>(small_int(c["degree"], where + " degree"));
    else {
      require(r.front.has_value(), where + ": needs a degree or front data");
      r.degree = chord_degree(r.front->down, r.front->up, r.front->index);
    }
    r.null_homotopic = flag(c, "null_homotopic", true);
    s.chords.push_back(std::move(r));
  }
  s.validate();
  return s;
}

MorseData morse_data_from_json(const Json& j) {
  check_schema(j);
  MorseData q;
  q.name = j.contains("name") ? j["name"].get<std::string>() : "Q";
  q.dimension = static_cast<int>(small_int(field(j, "dimension", "Morse data"), "Morse data dimension"));
  q.euler = small_int(field(j, "euler", "Morse data"), "Morse data euler");
  q.orientable = flag(j, "orientable", true);
  const Json& idx = field(j, "critical_indices", "Morse data");
  require(idx.is_array(), "Morse data: critical_indices must be a list");
  for (const auto& i : idx) q.critical_indices.push_back(static_cast<int>(small_int(i, "critical index")));
  q.validate();
  return q;
}

OrbitSpectrum orbit_spectrum_from_json(const Json& j, int n, std::optional<Rational> bound) {
  OrbitSpectrum s;
  s.n = n != 0 ? n : static_cast<int>(small_int(field(j, "n", "orbit spectrum"), "orbit spectrum n"));
  s.bound = bound ? *bound : rational_from_json(field(j, "bound", "orbit spectrum"), "orbit spectrum bound");
  const Json& orbits = field(j, "orbits", "orbit spectrum");
  require(orbits.is_array(), "orbit spectrum: 'orbits' must be a list");
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const Json& o = orbits[i];
    const std::string where = "orbit #" + std::to_string(i);
    OrbitRecord r;
    r.degree = static_cast<int>(small_int(field(o, "degree", where), where + " degree"));
    r.action = rational_from_json(field(o, "action", where), where + " action");
    r.origin = o.contains("origin") ? parse_orbit_origin(o["origin"].get<std::string>()) : OrbitOrigin::Old;
    r.label = o.contains("label") ? o["label"].get<std::string>() : "";
    r.iterate = o.contains("iterate") ? static_cast<int>(small_int(o["iterate"], where + " iterate")) : 0;
    r.contractible = flag(o, "contractible", true);
    s.orbits.push_back(std::move(r));
  }
  return s;
}

ADCCertificate certificate_from_json(const Json& j) {
  check_schema(j);
  ADCCertificate c;
  c.n = static_cast<int>(small_int(field(j, "n", "certificate"), "certificate n"));
  require(c.n >= 1, "certificate n must be at least 1");
  const Json& stages = field(j, "stages", "certificate");
  require(stages.is_array(), "certificate: 'stages' must be a list");
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const std::string where = "stage #" + std::to_string(i);
    Stage s;
    s.scale = rational_from_json(field(stages[i], "scale", where), where + " scale");
    s.bound = rational_from_json(field(stages[i], "bound", where), where + " bound");
    Json orbits = stages[i].contains("orbits") ? stages[i] : Json{{"orbits", Json::array()}};
    s.spectrum = orbit_spectrum_from_json(orbits, c.n, s.bound);
    c.stages.push_back(std::move(s));
  }
  return c;
}

DimensionTable dimension_table_from_json(const Json& j, const std::string& where) {
  require(j.is_object(), where + ": expected an object mapping degrees to dimensions");
  DimensionTable t;
  for (const auto& [key, value] : j.items()) {
    if (key == "schema") continue;
    long v = small_int(value, where + " degree " + key);
    require(v >= 0, where + ": negative dimension in degree " + key);
    if (v != 0) t[degree_key(key, where)] = v;
  }
  return t;
}

LoopHomologyTable loop_table_from_json(const Json& j) {
  check_schema(j);
  LoopHomologyTable t;
  t.dims = dimension_table_from_json(field(j, "dims", "loop table"), "loop table dims");
  if (j.contains("base")) t.base = dimension_table_from_json(j["base"], "loop table base");
  t.horizon = static_cast<int>(small_int(field(j, "horizon", "loop table"), "loop table horizon"));
  return t;
}

}  // namespace flexcontact
