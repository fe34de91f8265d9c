#include "flexcontact/corpus.hpp"

#include "flexcontact/errors.hpp"
#include "flexcontact/floer_formulas.hpp"
#include "flexcontact/scaling.hpp"
#include "flexcontact/surgery.hpp"
#include "flexcontact/topology.hpp"

#include <functional>

namespace flexcontact {

namespace {

std::vector<int> repeated(std::initializer_list<int> dims, int copies) {
  std::vector<int> out;
  for (int i = 0; i < copies; ++i) out.insert(out.end(), dims);
  return out;
}

CorpusCase wedge_family(const CorpusOptions& o) {
  CorpusCase c{"wedge-family", true, "", Json::array()};
  int lo = o.copies.value_or(1);
  int hi = o.copies.value_or(10);
  require(lo >= 1, "--i must be at least 1");
  for (int i = lo; i <= hi; ++i) {
    // W_i^7 retracting to a wedge of i copies of S^2 v S^3; boundary M_i^6.
    auto w = wedge_thickening(7, repeated({2, 3}, i));
    auto wh = cohomology(w).homology;
    auto y = boundary_homology(w);
    Integer chi_w = euler_characteristic(wh);
    // W_i^6 retracting to a wedge of i copies of S^2; boundary M_i^5.
    auto v = wedge_thickening(6, repeated({2}, i));
    auto m5 = boundary_homology(v);
    int semi = semi_characteristic(m5.integral, 5);
    auto omega = omega_membership(m5.integral, 5, ManifoldFlags{true, true, true});
    bool ok = wh.rank(2) == static_cast<std::size_t>(i) && chi_w == 1 && y.euler_characteristic == 2 &&
              y.betti(2) == static_cast<std::size_t>(i) && semi == (1 + i) % 2 && omega.member == (i % 2 == 0);
    c.pass = c.pass && ok;
    c.result.push_back(Json{{"i", i},
                            {"dim_H2_W", wh.rank(2)},
                            {"chi_W", chi_w.get_str()},
                            {"chi_boundary", y.euler_characteristic.get_str()},
                            {"dim_H2_boundary", y.betti(2)},
                            {"semi_characteristic_M5", semi},
                            {"omega_M5", omega.member},
                            {"pass", ok}});
  }
  c.detail = "dim H_2 = i, chi(W_i) = 1, chi(dW_i) = 2, chi_1/2(M_i) = 1 + i mod 2";
  return c;
}

CorpusCase connected_sums(const CorpusOptions&) {
  CorpusCase c{"boundary-sum-family", true, "", Json::array()};
  const int n = 4;
  std::vector<GradedGroup> family;
  HandlePresentation sum = ball(n);
  for (int i = 1; i <= 6; ++i) {
    sum = boundary_connect_sum(sum, cotangent_sphere(n));
    auto h = cohomology(sum).cohomology;
    bool ok = h.rank(n) == static_cast<std::size_t>(i);
    c.pass = c.pass && ok;
    family.push_back(h);
    c.result.push_back(Json{{"i", i}, {"dim_Hn", h.rank(n)}, {"pass", ok}});
  }
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = 0; b < family.size(); ++b) {
      auto r = distinguish_flexible_fillings(family[a], family[b], n);
      if ((r.verdict == Verdict::Distinct) != (a != b)) c.pass = false;
    }
  c.detail = "dim H^n of the i-fold boundary sum is i and every pair i != j is separated";
  return c;
}

CorpusCase support_cases(const CorpusOptions&) {
  CorpusCase c{"flexible-support", true, "", Json::array()};
  const int n = 5;
  std::set<int> brieskorn;
  for (int k = n + 2; k <= n + 20; k += 2) brieskorn.insert(k);
  auto a = flexible_support_test(brieskorn, n);
  auto b = flexible_support_test({1, n + 1}, n);
  auto d = flexible_support_test({0}, n);
  auto sh_ball = sh_plus_from_vanishing(cohomology(ball(n)).cohomology, n);
  auto e = flexible_support_test(support_of(sh_ball), n);
  c.pass = a.obstructed && !b.obstructed && d.obstructed && !e.obstructed && sh_ball.rank(n + 1) == 1;
  c.result = Json{{"infinite_support", a.obstructed}, {"support_1_to_n_plus_1", b.obstructed},
                  {"support_0", d.obstructed}, {"ball", e.obstructed}};
  c.detail = "supports at k >= n+2 or k <= 0 rule out flexible fillings";
  return c;
}

CorpusCase cem_cases(const CorpusOptions&) {
  CorpusCase c{"cem-bound", true, "", Json::array()};
  for (long h1 = 0; h1 <= 5; ++h1)
    for (long k = 1; k <= 10; ++k)
      if (cem_flexible_obstruction(k, h1) != (k >= h1 + 2)) c.pass = false;
  c.result = Json{{"h1_0_k2", cem_flexible_obstruction(2, 0)},
                  {"h1_0_k1", cem_flexible_obstruction(1, 0)},
                  {"h1_3_k5", cem_flexible_obstruction(5, 3)}};
  c.detail = "obstruction fires exactly when k >= dim H^1(Y; Z/2) + 2";
  return c;
}

CorpusCase stabilization_case(const CorpusOptions&) {
  CorpusCase c{"stabilization", true, "", Json::object()};
  ChordSpectrum s;
  s.n = 4;
  s.bound = 10;
  s.chords.push_back(ChordRecord{"c", -2, Rational(1), std::nullopt, true});
  int N = min_positive_N(s);
  auto out = stabilize(s, N, choose_Q(4), Rational(1, 2));
  bool old_ok = out.chords.front().degree == N + 1;
  bool all_positive = *out.min_degree() >= 1;
  c.pass = N == 3 && old_ok && all_positive && out.chords.size() == 1 + 2 * 3 * 4;
  c.result = Json{{"N", N}, {"old_degree", out.chords.front().degree}, {"chords", out.chords.size()},
                  {"min_degree", *out.min_degree()}};
  c.detail = "a degree -2 chord becomes degree N + 1 = 4 and all new chords have degree >= 1";
  return c;
}

CorpusCase words_case(const CorpusOptions&) {
  CorpusCase c{"words", true, "", Json::array()};
  ChordSpectrum s;
  s.n = 3;
  s.bound = 4;
  s.chords.push_back(ChordRecord{"a", 1, Rational(1), std::nullopt, true});
  s.chords.push_back(ChordRecord{"b", 2, Rational(3, 2), std::nullopt, true});
  auto words = enumerate_words(s, 4);
  for (const auto& w : words)
    c.result.push_back(Json{{"word", word_label(s, w)}, {"degree", w.degree}, {"action", to_string(w.action)}});
  c.pass = words.size() == 7;
  c.detail = "seven cyclic words below action 4";
  return c;
}

CorpusCase adc_case(const CorpusOptions& o) {
  CorpusCase c{"adc-surgery", true, "", Json::object()};
  ADCCertificate cert;
  cert.n = 3;
  for (int k = 1; k <= 3; ++k) {
    Stage st;
    st.scale = Rational(1, k);
    st.bound = Rational(k * 200);
    st.spectrum.n = 3;
    st.spectrum.bound = st.bound;
    st.spectrum.orbits.push_back(OrbitRecord{2, Rational(1), OrbitOrigin::Old, "gamma", 0, true});
    cert.stages.push_back(st);
  }
  // One degree -2 chord per stage, with action 3/5 of the stage cut-off k 4^k.
  std::vector<ChordSpectrum> chords;
  Rational cutoff = 4;
  for (int k = 1; k <= 3; ++k) {
    ChordSpectrum s;
    s.n = 3;
    s.bound = cert.stages[k - 1].bound;
    s.chords.push_back(ChordRecord{"c", -2, cutoff * k * Rational(3, 5), std::nullopt, true});
    chords.push_back(s);
    cutoff *= 4;
  }
  auto result = flexible_surgery_certificate(cert, chords);
  if (o.inject_degree_zero) {
    auto& first = result.certificate.stages.front().spectrum.orbits;
    first.push_back(OrbitRecord{0, Rational(1, 2), OrbitOrigin::Old, "injected", 0, true});
  }
  auto verdict = adc_check(result.certificate);
  c.pass = verdict.pass;
  c.result = Json{{"stages", result.certificate.stages.size()},
                  {"stabilization", result.stabilization},
                  {"adc_check", verdict.pass},
                  {"reason", verdict.reason}};
  if (verdict.stage) c.result["failed_stage"] = *verdict.stage;
  if (verdict.record) c.result["failed_record"] = *verdict.record;
  c.detail = "flexible surgery on an ADC certificate with a degree -2 chord passes the ADC check";
  return c;
}

CorpusCase boundary_case(const CorpusOptions&) {
  CorpusCase c{"cotangent-boundaries", true, "", Json::array()};
  for (int n = 2; n <= 5; ++n) {
    auto p = cotangent_sphere(n);
    auto y = boundary_homology(p);
    std::size_t rank = intersection_form_rank(p);
    bool ok = rank == (n % 2 == 0 ? 1u : 0u) && y.betti(n) == (n % 2 == 0 ? 0u : 1u);
    c.pass = c.pass && ok;
    c.result.push_back(Json{{"n", n}, {"boundary", to_json(y.integral)["groups"]}, {"rank_form", rank}, {"pass", ok}});
  }
  c.detail = "dT*S^n: rank of the form is chi(S^n) != 0, so 1 for even n and 0 for odd n";
  return c;
}

CorpusCase scaling_case(const CorpusOptions& o) {
  CorpusCase c{"scaling", true, "", Json::object()};
  ProfileG g(ProfileParameters{}, o.scaling_grid);
  auto ratio = bound_ratio(g, o.scaling_grid);
  double integral = simpson_integral(g);
  auto conformal = conformal_bound(g);
  auto h = verify_h_family(g);
  c.pass = ratio.max_ratio <= 1.25 + 1e-6 && std::abs(integral) < 1e-8 && conformal.below_four &&
           conformal.below_exponential && h.max_fd_error < 1e-4 && !h.first_failure;
  c.result = Json{{"max_ratio", ratio.max_ratio}, {"integral", integral}, {"exp_5_4", conformal.exp_height},
                  {"fd_error", h.max_fd_error}};
  c.detail = "g/(tg+1) <= 5/4, int g = 0, e^{5/4} < 4, mixed derivative matches g";
  return c;
}

using CaseFn = std::function<CorpusCase(const CorpusOptions&)>;

const std::vector<std::pair<std::string, CaseFn>>& registry() {
  static const std::vector<std::pair<std::string, CaseFn>> cases{
      {"wedge-family", wedge_family},         {"boundary-sum-family", connected_sums},
      {"flexible-support", support_cases},    {"cem-bound", cem_cases},
      {"stabilization", stabilization_case},  {"words", words_case},
      {"adc-surgery", adc_case},              {"cotangent-boundaries", boundary_case},
      {"scaling", scaling_case},
  };
  return cases;
}

}  // namespace

std::vector<std::string> corpus_case_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

std::vector<CorpusCase> run_corpus(const CorpusOptions& options) {
  std::vector<CorpusCase> out;
  bool found = !options.only;
  for (const auto& [name, fn] : registry()) {
    if (options.only && *options.only != name) continue;
    found = true;
    out.push_back(fn(options));
  }
  require(found, "unknown example '" + options.only.value_or("") + "'");
  return out;
}

}  // namespace flexcontact
