#include "flexcontact/cli.hpp"

#include "flexcontact/adc.hpp"
#include "flexcontact/corpus.hpp"
#include "flexcontact/errors.hpp"
#include "flexcontact/floer_formulas.hpp"
#include "flexcontact/json_io.hpp"
#include "flexcontact/scaling.hpp"
#include "flexcontact/surgery.hpp"
#include "flexcontact/topology.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>

namespace flexcontact {

namespace {

struct Report {
  std::string command;
  std::string formula;
  Json inputs = Json::object();
  Json result = Json::object();
  std::optional<std::string> verdict;
  int exit_code = kExitOk;
};

Report make_report(std::string command, std::string formula, Json inputs) {
  Report r;
  r.command = std::move(command);
  r.formula = std::move(formula);
  r.inputs = std::move(inputs);
  return r;
}

struct GlobalOptions {
  std::string coeff = "Q";
  std::optional<std::string> tol;
  std::optional<std::size_t> grid;
  std::optional<std::string> bound;
  bool table = false;
  bool timing = false;
};

void render_table(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) render_table(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) render_table(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << std::left << std::setw(40) << prefix << " " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

Json group_json(const GradedGroup& g) { return to_json(g)["groups"]; }

Json dims_json(const GradedGroup& g, Coefficients c) {
  Json out = Json::object();
  for (const auto& [k, group] : g.components())
    if (group.dimension(c) > 0) out[std::to_string(k)] = group.dimension(c);
  return out;
}

bool is_presentation(const Json& j) { return j.is_object() && j.contains("handles"); }

/// A cohomology table given directly, or computed from a presentation.
GradedGroup cohomology_input(const Json& j) {
  if (is_presentation(j)) return cohomology(presentation_from_json(j)).cohomology;
  return graded_group_from_json(j);
}

Rational rational_option(const std::optional<std::string>& text, const Rational& fallback) {
  return text ? parse_rational(*text) : fallback;
}

double to_double(const Rational& r) { return r.get_d(); }

Json verdict_json(const ADCVerdict& v) {
  Json j{{"pass", v.pass}, {"reason", v.reason}};
  if (v.stage) j["stage"] = *v.stage;
  if (v.record) j["record"] = *v.record;
  return j;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact homology, Floer-degree bookkeeping and ADC certificates for contact surgery."};
  app.name("flexcontact");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--coeff", g.coeff, "coefficients for dimension counts: Z, Q or F2")->check(CLI::IsMember({"Z", "Q", "F2"}));
  app.add_option("--tol", g.tol, "tolerance (rational or decimal)");
  app.add_option("--grid", g.grid, "grid nodes per axis for numerics");
  app.add_option("--bound", g.bound, "action bound (rational)");
  auto* json_flag = app.add_flag("--json", "emit JSON (default)");
  app.add_flag("--table", g.table, "emit a flat key/value table")->excludes(json_flag);
  app.add_flag("--timing", g.timing, "add wall-clock timing to the report");

  std::function<Report()> action;
  auto set = [&action](CLI::App* sub, std::function<Report()> fn) {
    sub->callback([&action, fn]() { action = fn; });
  };

  // graded algebra and topology
  std::string file_a, file_b, file_c;
  int n = 0;
  auto* homology_cmd = app.add_subcommand("homology", "homology of a chain complex or handle presentation");
  homology_cmd->add_option("file", file_a, "chain complex or presentation JSON")->required();
  set(homology_cmd, [&]() {
    Json j = read_json_file(file_a);
    ChainComplex c = is_presentation(j) ? presentation_from_json(j).chain : chain_complex_from_json(j);
    GradedGroup h = homology(c);
    Coefficients coeff = parse_coefficients(g.coeff);
    Report r = make_report("homology", "H_k = ker d_k / im d_{k+1}", {{"file", j}});
    r.result = Json{{"homology", group_json(h)},
                    {"dimensions", dims_json(h, coeff)},
                    {"coefficients", to_string(coeff)},
                    {"euler_characteristic", euler_characteristic(h).get_str()},
                    {"chain_euler_characteristic", chain_euler_characteristic(c).get_str()}};
    return r;
  });

  auto* boundary_cmd = app.add_subcommand("boundary", "homology of the boundary of a handle presentation");
  boundary_cmd->add_option("file", file_a, "presentation JSON")->required();
  set(boundary_cmd, [&]() {
    Json j = read_json_file(file_a);
    auto p = presentation_from_json(j);
    auto y = boundary_homology(p);
    Report r = make_report("boundary", "H_{k+1}(W,Y) -> H_k(Y) -> H_k(W) -> H_k(W,Y), H_j(W,Y) = H^{d-j}(W)", {{"file", j}});
    Json betti = Json::object();
    for (const auto& [k, b] : y.rational_betti) betti[std::to_string(k)] = b;
    r.result = Json{{"dimension", y.dimension},
                    {"rational_betti", betti},
                    {"integral", group_json(y.integral)},
                    {"undetermined", y.undetermined},
                    {"intersection_rank", y.intersection_rank},
                    {"euler_characteristic", y.euler_characteristic.get_str()},
                    {"expected_euler_characteristic", y.expected_euler_characteristic.get_str()},
                    {"duality_holds", y.duality_holds}};
    bool ok = y.duality_holds && y.euler_characteristic == y.expected_euler_characteristic;
    r.verdict = ok ? "consistent" : "inconsistent";
    r.exit_code = ok ? kExitOk : kExitNegative;
    return r;
  });

  auto* rank_cmd = app.add_subcommand("rank-form", "rank of the intersection form");
  rank_cmd->add_option("file", file_a, "presentation JSON")->required();
  set(rank_cmd, [&]() {
    Json j = read_json_file(file_a);
    auto p = presentation_from_json(j);
    Report r = make_report("rank-form", "dim H^n(W;Q) + dim H^{n-1}(W;Q) - dim H^n(Y;Q)", {{"file", j}});
    r.result = Json{{"rank", intersection_form_rank(p)}, {"form_on_homology", to_json(intersection_form_on_homology(p))}};
    return r;
  });

  ManifoldFlags flags;
  auto* omega_cmd = app.add_subcommand("omega-check", "closed, simply connected, stably parallelizable with chi = 2 or chi_1/2 = 1");
  omega_cmd->add_option("file", file_a, "homology of M as graded group JSON")->required();
  omega_cmd->add_option("--n", n, "dimension of M")->required();
  omega_cmd->add_flag("--closed", flags.closed);
  omega_cmd->add_flag("--simply-connected", flags.simply_connected);
  omega_cmd->add_flag("--stably-parallelizable", flags.stably_parallelizable);
  set(omega_cmd, [&]() {
    Json j = read_json_file(file_a);
    GradedGroup h = graded_group_from_json(j);
    Coefficients coeff = parse_coefficients(g.coeff);
    auto v = omega_membership(h, n, flags, coeff);
    Report r = make_report("omega-check", "n even: chi(M) = 2; n odd: sum_{i <= (n-1)/2} dim H_i(M) = 1 mod 2",
             {{"file", j}, {"n", n}, {"closed", flags.closed}, {"simply_connected", flags.simply_connected},
              {"stably_parallelizable", flags.stably_parallelizable}, {"coefficients", to_string(coeff)}});
    r.result = Json{{"member", v.member}, {"reason", v.reason}};
    r.verdict = v.member ? "member" : "not a member";
    r.exit_code = v.member ? kExitOk : kExitNegative;
    return r;
  });

  // Floer formulas
  bool not_weinstein = false;
  auto* sh_cmd = app.add_subcommand("sh-plus", "SH^+ of a domain with vanishing SH");
  sh_cmd->add_option("file", file_a, "cohomology (graded group) or presentation JSON")->required();
  sh_cmd->add_option("--n", n, "half-dimension")->required();
  sh_cmd->add_flag("--not-weinstein", not_weinstein, "skip the Weinstein degree check");
  set(sh_cmd, [&]() {
    Json j = read_json_file(file_a);
    GradedGroup h = cohomology_input(j);
    GradedGroup sh = sh_plus_from_vanishing(h, n, !not_weinstein);
    auto support = flexible_support_test(support_of(sh), n);
    Report r = make_report("sh-plus", "SH^+_k(W) = H^{n-k+1}(W)", {{"file", j}, {"n", n}});
    r.result = Json{{"sh_plus", group_json(sh)}, {"outside_flexible_range", support.obstructed}};
    return r;
  });

  auto* distinguish_cmd = app.add_subcommand("distinguish", "compare two flexible fillings by integral cohomology");
  distinguish_cmd->add_option("first", file_a)->required();
  distinguish_cmd->add_option("second", file_b)->required();
  distinguish_cmd->add_option("--n", n, "half-dimension")->required();
  set(distinguish_cmd, [&]() {
    Json a = read_json_file(file_a);
    Json b = read_json_file(file_b);
    auto v = distinguish_flexible_fillings(cohomology_input(a), cohomology_input(b), n);
    Report r = make_report("distinguish", "H^*(W_1; Z) != H^*(W_2; Z) implies non-contactomorphic boundaries",
             {{"first", a}, {"second", b}, {"n", n}});
    r.result = Json{{"verdict", to_string(v.verdict)}, {"detail", v.detail}};
    if (v.degree) r.result["degree"] = *v.degree;
    r.verdict = v.verdict == Verdict::Distinct ? "non-contactomorphic" : "indistinguishable by this invariant";
    r.exit_code = v.verdict == Verdict::Distinct ? kExitOk : kExitNegative;
    return r;
  });

  long copies = 0, h1 = 0;
  auto* cem_cmd = app.add_subcommand("cem-bound", "flexible-filling obstruction for k copies");
  cem_cmd->add_option("--k", copies, "number of copies")->required();
  cem_cmd->add_option("--h1", h1, "dim H^1(Y; Z/2)")->required();
  set(cem_cmd, [&]() {
    bool fires = cem_flexible_obstruction(copies, h1);
    Report r = make_report("cem-bound", "a flexible filling forces k <= dim H^1(Y; Z/2) + 1", {{"k", copies}, {"h1", h1}});
    r.result = Json{{"no_flexible_filling", fires}};
    r.verdict = fires ? "no flexible filling" : "inconclusive";
    r.exit_code = fires ? kExitOk : kExitNegative;
    return r;
  });

  int min_degree = 2;
  auto* loops_cmd = app.add_subcommand("loops-distinguish", "separate contact structures by loop-space homology");
  loops_cmd->add_option("loops_m", file_a)->required();
  loops_cmd->add_option("loops_n", file_b)->required();
  loops_cmd->add_option("cohomology_y", file_c, "dims of H^*(Y; Q)")->required();
  loops_cmd->add_option("--n", n, "half-dimension")->required();
  loops_cmd->add_option("--min-degree", min_degree, "smallest degree k probed");
  set(loops_cmd, [&]() {
    Json a = read_json_file(file_a);
    Json b = read_json_file(file_b);
    Json y = read_json_file(file_c);
    check_schema(y);
    DimensionTable hy = dimension_table_from_json(y.contains("dims") ? y["dims"] : y, "H^*(Y) table");
    auto v = boundedinfinite_distinguisher(loop_table_from_json(a), loop_table_from_json(b), hy, n, min_degree);
    Report r = make_report("loops-distinguish", "|dim H_k(LM) - dim H_k(LN)| > 2 dim H^{n-k}(Y) + 2 dim H^{n-k+1}(Y)",
             {{"loops_m", a}, {"loops_n", b}, {"cohomology_y", y}, {"n", n}, {"min_degree", min_degree}});
    r.result = Json{{"verdict", to_string(v.verdict)}, {"detail", v.detail}};
    if (v.degree) r.result["degree"] = *v.degree;
    r.verdict = v.verdict == Verdict::Distinct ? "non-contactomorphic" : "inconclusive";
    r.exit_code = v.verdict == Verdict::Distinct ? kExitOk : kExitNegative;
    return r;
  });

  bool based_loops = false;
  auto* wh_cmd = app.add_subcommand("wh-plus", "WH^+ of a Lagrangian with vanishing WH, or WH of a cotangent fiber");
  wh_cmd->add_option("file", file_a, "H^*(L) or, with --based-loops, H_*(Omega M)")->required();
  wh_cmd->add_option("--n", n, "half-dimension")->required();
  wh_cmd->add_flag("--based-loops", based_loops, "input is H_*(Omega M); output WH of a fiber");
  set(wh_cmd, [&]() {
    Json j = read_json_file(file_a);
    GradedGroup h = graded_group_from_json(j);
    Report r = make_report("wh-plus", based_loops ? "WH_k(T*_x M) = H_{k-n+2}(Omega M)" : "WH^+_k(L) = H^{n-k-1}(L)",
             {{"file", j}, {"n", n}, {"based_loops", based_loops}});
    r.result = Json{{"profile", group_json(based_loops ? wrapped_loop_grading(h, n) : wh_plus_from_vanishing(h, n))}};
    return r;
  });

  bool degree_pm1 = false;
  auto* nearby_cmd = app.add_subcommand("nearby", "isomorphism of pi_*: H(L) -> H(M)");
  nearby_cmd->add_option("homology_l", file_a)->required();
  nearby_cmd->add_option("homology_m", file_b)->required();
  nearby_cmd->add_option("--n", n, "dimension of L and M")->required();
  nearby_cmd->add_flag("--degree-pm1", degree_pm1, "assert that the projection has degree +-1");
  set(nearby_cmd, [&]() {
    Json a = read_json_file(file_a);
    Json b = read_json_file(file_b);
    auto v = nearby_conclusion(graded_group_from_json(a), graded_group_from_json(b), n, degree_pm1);
    Report r = make_report("nearby", "a surjection between isomorphic finitely generated abelian groups is injective",
             {{"homology_l", a}, {"homology_m", b}, {"n", n}, {"degree_pm1", degree_pm1}});
    r.result = Json{{"isomorphism", v.isomorphism}, {"reason", v.reason}};
    r.verdict = v.isomorphism ? "pi_* is an isomorphism" : "inconclusive";
    r.exit_code = v.isomorphism ? kExitOk : kExitNegative;
    return r;
  });

  // chord calculus
  int down = 0, up = 0, index = 0;
  auto* degree_cmd = app.add_subcommand("chord-degree", "degree of a chord from front data");
  degree_cmd->add_option("--down", down)->required();
  degree_cmd->add_option("--up", up)->required();
  degree_cmd->add_option("--index", index)->required();
  set(degree_cmd, [&]() {
    Report r = make_report("chord-degree", "|c| = D - U + ind - 1", {{"down", down}, {"up", up}, {"index", index}});
    r.result = Json{{"degree", chord_degree(down, up, index)}};
    return r;
  });

  std::optional<int> stab_n;
  std::optional<std::string> morse_file, epsilon_text;
  std::optional<std::size_t> sites;
  auto* stabilize_cmd = app.add_subcommand("stabilize", "zig-zag stabilization along Q");
  stabilize_cmd->add_option("file", file_a, "chord spectrum JSON")->required();
  stabilize_cmd->add_option("--N", stab_n, "number of zig-zags (default: smallest making all degrees positive)");
  stabilize_cmd->add_option("--morse", morse_file, "Morse data for Q (default: S^1 or S^1 x S^{n-3})");
  stabilize_cmd->add_option("--epsilon", epsilon_text, "action ceiling for new chords (default: bound / 2)");
  stabilize_cmd->add_option("--sites", sites, "modified chord endpoints (default: one per chord)");
  set(stabilize_cmd, [&]() {
    Json j = read_json_file(file_a);
    ChordSpectrum s = chord_spectrum_from_json(j);
    int N = stab_n.value_or(min_positive_N(s));
    MorseData q = morse_file ? morse_data_from_json(read_json_file(*morse_file)) : choose_Q(s.n);
    Rational eps = rational_option(epsilon_text, s.bound / 2);
    auto out_s = stabilize(s, N, q, eps, sites);
    Report r = make_report("stabilize", "|c|' = |c| + 2N; new chords |d| = 1 + ind(p), 2N q per site",
             {{"file", j}, {"N", N}, {"Q", to_json(q)}, {"epsilon", to_string(eps)}});
    r.result = Json{{"spectrum", to_json(out_s)}, {"min_degree", out_s.min_degree() ? Json(*out_s.min_degree()) : Json()}};
    return r;
  });

  int zig = 0;
  auto* self_cmd = app.add_subcommand("self-index", "self-intersection index of the regular homotopy");
  self_cmd->add_option("--n", n)->required();
  self_cmd->add_option("--N", zig)->required();
  self_cmd->add_option("--morse", morse_file, "Morse data for Q (default: S^1 or S^1 x S^{n-3})");
  set(self_cmd, [&]() {
    MorseData q = morse_file ? morse_data_from_json(read_json_file(*morse_file)) : choose_Q(n);
    auto v = self_intersection_index(n, zig, q);
    Report r = make_report("self-index", "(-1)^{(n-1)(n-2)/2} N chi(Q)", {{"n", n}, {"N", zig}, {"Q", to_json(q)}});
    r.result = Json{{"index", v.value.get_str()}, {"values_in", v.mod2 ? "Z/2" : "Z"}};
    return r;
  });

  bool linear = false;
  auto* words_cmd = app.add_subcommand("words", "cyclic words of chords below an action bound");
  words_cmd->add_option("file", file_a, "chord spectrum JSON")->required();
  words_cmd->add_flag("--linear", linear, "enumerate linear instead of cyclic words");
  set(words_cmd, [&]() {
    Json j = read_json_file(file_a);
    ChordSpectrum s = chord_spectrum_from_json(j);
    Rational bound = rational_option(g.bound, s.bound);
    auto words = linear ? enumerate_linear_words(s, bound) : enumerate_words(s, bound);
    Report r = make_report("words", "A(w) = sum A(c_i) < D, |w| = sum |c_i|, up to rotation", {{"file", j}, {"bound", to_string(bound)}});
    Json list = Json::array();
    for (const auto& w : words)
      list.push_back(Json{{"word", word_label(s, w)}, {"degree", w.degree}, {"action", to_string(w.action)}});
    r.result = Json{{"count", words.size()}, {"words", list}};
    return r;
  });

  // surgery
  auto* surgery_cmd = app.add_subcommand("surgery", "orbit and chord spectra after surgery");
  surgery_cmd->require_subcommand(1);

  int k_index = 0, iterates = 0;
  bool assert_k2 = false;
  auto* sub_cmd = surgery_cmd->add_subcommand("subcritical", "surgery on an isotropic sphere");
  sub_cmd->add_option("file", file_a, "orbit spectrum JSON")->required();
  sub_cmd->add_option("--k", k_index)->required();
  sub_cmd->add_option("--iterates", iterates)->required();
  sub_cmd->add_option("--epsilon", epsilon_text)->required();
  sub_cmd->add_flag("--assert-k2", assert_k2, "assert the extra hypotheses needed for k = 2");
  set(sub_cmd, [&]() {
    Json j = read_json_file(file_a);
    check_schema(j);
    OrbitSpectrum y = orbit_spectrum_from_json(j);
    Rational eps = parse_rational(*epsilon_text);
    auto result = subcritical_surgery(y, k_index, iterates, eps, assert_k2);
    Report r = make_report("surgery subcritical", "|gamma^j| = 2n - k - 4 + 2j",
             {{"file", j}, {"k", k_index}, {"iterates", iterates}, {"epsilon", to_string(eps)}});
    r.result = Json{{"spectrum", to_json(result)}};
    return r;
  });

  std::vector<std::string> chord_files;
  std::optional<std::string> zigzag_fraction;
  auto* flex_cmd = surgery_cmd->add_subcommand("flexible", "ADC certificate after flexible surgery");
  flex_cmd->add_option("certificate", file_a)->required();
  flex_cmd->add_option("chords", chord_files, "one chord spectrum, or one per stage")->required();
  flex_cmd->add_option("--zigzag-fraction", zigzag_fraction, "zig-zag action as a fraction of the cut-off");
  set(flex_cmd, [&]() {
    Json j = read_json_file(file_a);
    ADCCertificate c = certificate_from_json(j);
    std::vector<ChordSpectrum> chords;
    Json echoed = Json::array();
    for (const auto& f : chord_files) {
      Json cj = read_json_file(f);
      chords.push_back(chord_spectrum_from_json(cj));
      echoed.push_back(cj);
    }
    FlexibleSurgeryOptions opts;
    if (zigzag_fraction) opts.zigzag_fraction = parse_rational(*zigzag_fraction);
    auto result = flexible_surgery_certificate(c, chords, opts);
    Report r = make_report("surgery flexible", "stage k: D_k > k 4^k, alpha_k / 4^k, bound k, |gamma_w| = |w| + n - 3",
             {{"certificate", j}, {"chords", echoed}});
    r.result = Json{{"certificate", to_json(result.certificate)},
                    {"chosen_stages", result.chosen},
                    {"stabilization", result.stabilization},
                    {"adc_check", verdict_json(adc_check(result.certificate))}};
    return r;
  });

  bool cyclic = false;
  auto* belt_cmd = surgery_cmd->add_subcommand("belt", "chords of the belt sphere");
  belt_cmd->add_option("file", file_a, "chord spectrum JSON")->required();
  belt_cmd->add_flag("--cyclic", cyclic, "use cyclic words instead of linear words");
  set(belt_cmd, [&]() {
    Json j = read_json_file(file_a);
    ChordSpectrum s = chord_spectrum_from_json(j);
    Rational bound = rational_option(g.bound, s.bound);
    auto result = belt_sphere_chords(s, bound, cyclic ? WordKind::Cyclic : WordKind::Linear);
    Report r = make_report("surgery belt", "|c_w| = |w| + n - 2", {{"file", j}, {"bound", to_string(bound)}, {"cyclic", cyclic}});
    r.result = Json{{"spectrum", to_json(result)}};
    return r;
  });

  auto* ambient_cmd = surgery_cmd->add_subcommand("ambient", "subcritical ambient Legendrian surgery");
  ambient_cmd->add_option("file", file_a, "chord spectrum JSON")->required();
  ambient_cmd->add_option("--k", k_index)->required();
  ambient_cmd->add_option("--epsilon", epsilon_text)->required();
  set(ambient_cmd, [&]() {
    Json j = read_json_file(file_a);
    ChordSpectrum s = chord_spectrum_from_json(j);
    Rational eps = parse_rational(*epsilon_text);
    auto result = ambient_surgery(s, k_index, eps);
    Report r = make_report("surgery ambient", "new chord |c| = n - k - 1", {{"file", j}, {"k", k_index}, {"epsilon", to_string(eps)}});
    r.result = Json{{"spectrum", to_json(result)}};
    return r;
  });

  // certificates
  auto* adc_cmd = app.add_subcommand("adc-check", "check an ADC certificate");
  adc_cmd->add_option("file", file_a, "certificate JSON")->required();
  set(adc_cmd, [&]() {
    Json j = read_json_file(file_a);
    auto v = adc_check(certificate_from_json(j));
    Report r = make_report("adc-check", "scales non-increasing, bounds increasing, contractible orbits of positive degree", {{"file", j}});
    r.result = verdict_json(v);
    r.verdict = v.pass ? "pass" : "fail";
    r.exit_code = v.pass ? kExitOk : kExitNegative;
    return r;
  });

  std::string eps_text;
  std::size_t min_stages = 1;
  auto* normalize_cmd = app.add_subcommand("normalize-cert", "strengthen a certificate to eps alpha_k >= alpha_{k+1}");
  normalize_cmd->add_option("file", file_a, "certificate JSON")->required();
  normalize_cmd->add_option("--eps", eps_text, "epsilon in (0, 1)")->required();
  normalize_cmd->add_option("--min-stages", min_stages, "fail if fewer stages survive");
  set(normalize_cmd, [&]() {
    Json j = read_json_file(file_a);
    Rational eps = parse_rational(eps_text);
    auto result = normalize_certificate(certificate_from_json(j), eps, min_stages);
    Report r = make_report("normalize-cert", "D_{k+1} >= D_k / eps^2, alpha'_k = eps^k alpha_k, D'_k = eps^k D_k",
             {{"file", j}, {"eps", to_string(eps)}, {"min_stages", min_stages}});
    r.result = Json{{"certificate", to_json(result)}, {"adc_check", verdict_json(adc_check(result))}};
    return r;
  });

  // numerics
  ProfileParameters params;
  std::optional<std::string> csv_path;
  auto* scaling_cmd = app.add_subcommand("scaling-verify", "verify the scaling profile bounds numerically");
  scaling_cmd->add_option("--height", params.height, "hump ceiling (> 1)");
  scaling_cmd->add_option("--rise", params.rise, "width of the rise after z = 1/2");
  scaling_cmd->add_option("--fall-start", params.fall_start, "start of the fall to 0");
  scaling_cmd->add_option("--fall", params.fall, "width of the fall");
  scaling_cmd->add_option("--csv", csv_path, "write the g grid as CSV");
  set(scaling_cmd, [&]() {
    const std::size_t grid = g.grid.value_or(2001);
    const double tol = to_double(rational_option(g.tol, Rational(1, 10000)));
    ProfileG profile(params, grid);
    auto ratio = bound_ratio(profile, grid);
    double integral = simpson_integral(profile);
    double integral_fine = simpson_integral(profile, 2 * grid - 1);
    auto conformal = conformal_bound(profile);
    auto h = verify_h_family(profile, 1e-3, 21, grid, 0.999, 1.25, tol);
    if (csv_path) {
      std::ofstream csv(*csv_path);
      require(static_cast<bool>(csv), "cannot write '" + *csv_path + "'");
      csv << "z,g\n" << std::setprecision(17);
      for (std::size_t i = 0; i < profile.grid().size(); ++i) csv << profile.grid()[i] << "," << profile.values()[i] << "\n";
    }
    const double ratio_tol = 1e-6;
    bool ok = ratio.max_ratio <= params.height + ratio_tol && std::abs(integral) < 1e-8 &&
              conformal.below_exponential && conformal.below_four && h.max_fd_error < tol && !h.first_failure;
    Report r = make_report("scaling-verify", "g/(tg+1) <= height, int_0^1 g = 0, gamma_t = e^{int_0^t g/(sg+1) ds} <= e^{height t}",
             {{"grid", grid}, {"tol", tol}, {"height", params.height}, {"rise", params.rise},
              {"fall_start", params.fall_start}, {"fall", params.fall}});
    r.result = Json{{"amplitude", profile.amplitude()},
                    {"min_g", profile.min_value()},
                    {"max_g", profile.max_value()},
                    {"integral", integral},
                    {"integral_refined", integral_fine},
                    {"max_ratio", ratio.max_ratio},
                    {"max_ratio_at", Json{{"t", ratio.at_t}, {"z", ratio.at_z}}},
                    {"max_ratio_where_g_nonpositive", ratio.max_on_nonpositive},
                    {"conformal_sup", conformal.sup_factor},
                    {"conformal_closed_form_gap", conformal.max_closed_form_gap},
                    {"exp_height", conformal.exp_height},
                    {"exp_height_series", conformal.exp_height_series},
                    {"exp_height_below_4", conformal.below_four},
                    {"h_identity_slice", h.identity_slice},
                    {"h_linear_middle", h.linear_middle},
                    {"h_identity_outside", h.identity_outside},
                    {"h_monotone", h.monotone},
                    {"h_odd", h.odd},
                    {"fd_max_error", h.max_fd_error},
                    {"fd_step", h.fd_step}};
    if (h.first_failure) r.result["first_failure"] = *h.first_failure;
    r.verdict = ok ? "pass" : "fail";
    r.exit_code = ok ? kExitOk : kExitNegative;
    return r;
  });

  // corpus
  CorpusOptions corpus;
  std::optional<std::string> example_name;
  std::optional<int> copies_opt;
  bool list = false;
  auto* examples_cmd = app.add_subcommand("examples", "run the worked-example corpus");
  examples_cmd->add_option("name", example_name, "run only this example");
  examples_cmd->add_option("--i", copies_opt, "number of copies for wedge-family");
  examples_cmd->add_flag("--inject-degree-zero", corpus.inject_degree_zero, "seed a degree-0 orbit into adc-surgery");
  examples_cmd->add_flag("--list", list, "list example names");
  set(examples_cmd, [&]() {
    Report r = make_report("examples", "regression corpus", Json::object());
    if (list) {
      r.result = Json{{"examples", corpus_case_names()}};
      return r;
    }
    corpus.only = example_name;
    corpus.copies = copies_opt;
    if (g.grid) corpus.scaling_grid = *g.grid;
    r.inputs = Json{{"name", example_name ? Json(*example_name) : Json()},
                    {"i", copies_opt ? Json(*copies_opt) : Json()},
                    {"inject_degree_zero", corpus.inject_degree_zero}};
    Json cases = Json::array();
    bool all = true;
    for (const auto& c : run_corpus(corpus)) {
      cases.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"result", c.result}});
      all = all && c.pass;
    }
    r.result = Json{{"cases", cases}, {"all_pass", all}};
    r.verdict = all ? "pass" : "fail";
    r.exit_code = all ? kExitOk : kExitNegative;
    return r;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Report r = action();
    Json body{{"schema", kSchemaVersion}, {"command", r.command}, {"formula", r.formula}, {"inputs", r.inputs}};
    if (r.verdict) body["verdict"] = *r.verdict;
    body["result"] = r.result;
    body["exit_code"] = r.exit_code;
    if (g.timing)
      body["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (g.table)
      render_table(body, "", out);
    else
      out << body.dump(2) << "\n";
    return r.exit_code;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace flexcontact
