// Acceptance criteria 1-9: one PASS/FAIL line each, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ffactor/ffactor.hpp"
#include "oracles.hpp"

using namespace ffactor;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string str(std::size_t x) { return std::to_string(x); }

DegreeSpec random_even_spec(int n, int top, std::mt19937_64& rng) {
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int& x : values) x = std::uniform_int_distribution<int>(0, top)(rng);
  long total = 0;
  for (int x : values) total += x;
  if (total % 2 != 0) values[0] = values[0] > 0 ? values[0] - 1 : 1;
  return DegreeSpec(values);
}

// Seeded corpus of connected graphs with n <= 10 and f in [a,b], f(X) even.
struct CorpusEntry {
  Graph graph;
  DegreeSpec f;
  int a = 0;
};

std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  for (std::uint64_t i = 0; i < 400; ++i) {
    std::mt19937_64 rng(derive_seed(2024, i));
    const int n = std::uniform_int_distribution<int>(3, 10)(rng);
    const double p = std::uniform_real_distribution<double>(0.3, 1.0)(rng);
    const int a = std::uniform_int_distribution<int>(1, 3)(rng);
    const int b = a + std::uniform_int_distribution<int>(0, 2)(rng);
    const Graph g = random_connected_graph(n, p, derive_seed(derive_seed(2024, i), 1));
    try {
      out.push_back({g, random_degree_spec(g, a, b, derive_seed(derive_seed(2024, i), 2)), a});
    } catch (const std::invalid_argument&) {
    }
  }
  for (int n = 3; n <= 6; ++n)
    for (const Graph& g : oracle::connected_graphs_up_to_iso(n))
      for (int a = 1; a <= 2; ++a)
        if (n * a % 2 == 0) out.push_back({g, DegreeSpec::uniform(n, a), a});
  return out;
}

Outcome tutte_equivalence() {
  std::size_t checked = 0;
  std::size_t disagreements = 0;
  AuditOptions exact;
  exact.mode = AuditMode::exact;
  auto check = [&](const Graph& g, const DegreeSpec& f) {
    const bool solver = find_f_factor(g, f).has_value();
    const bool brute = brute_force_f_factor(g, f).has_value();
    const bool tutte = !find_violating_pair(g, f, exact).violation.has_value();
    ++checked;
    if (solver != brute || solver != tutte) ++disagreements;
  };
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : oracle::connected_graphs_up_to_iso(n))
      for (const DegreeSpec& f : oracle::even_specs(n, 3)) check(g, f);
  std::size_t random_cases = 0;
  for (std::uint64_t i = 0; random_cases < 500; ++i) {
    std::mt19937_64 rng(derive_seed(1, i));
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    const Graph g = random_connected_graph(n, std::uniform_real_distribution<double>(0.3, 0.9)(rng), derive_seed(7, i));
    if (g.size() > 24) continue;
    check(g, random_even_spec(n, 3, rng));
    ++random_cases;
  }
  return {disagreements == 0, str(checked) + " instances, " + str(disagreements) + " disagreements"};
}

Outcome parity_lemma() {
  std::size_t checked = 0;
  std::size_t violations = 0;
  auto check = [&](const Graph& g, const DegreeSpec& f, const SubsetPair& pair) {
    const std::int64_t delta = deficiency(g, pair, f).delta;
    ++checked;
    if (((delta - f.total()) % 2 + 2) % 2 != 0) ++violations;
  };
  for (std::uint64_t i = 0; i < 10000; ++i) {
    std::mt19937_64 rng(derive_seed(2, i));
    const int n = std::uniform_int_distribution<int>(1, 14)(rng);
    const Graph g = random_graph(n, std::uniform_real_distribution<double>(0.0, 1.0)(rng), derive_seed(3, i));
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int& x : values) x = std::uniform_int_distribution<int>(0, 5)(rng);
    std::vector<int> s, t;
    for (int v = 0; v < n; ++v) {
      const int side = std::uniform_int_distribution<int>(0, 2)(rng);
      if (side == 1) s.push_back(v);
      if (side == 2) t.push_back(v);
    }
    check(g, DegreeSpec(values), {VertexSet(s), VertexSet(t)});
  }
  // δ mod 2 depends on f only through f mod 2, so f in {0,1}^n covers every
  // parity class of the exhaustive sweep.
  for (int n = 1; n <= 6; ++n) {
    const oracle::Mask all = oracle::full(n);
    for (const Graph& g : oracle::connected_graphs_up_to_iso(n))
      for (oracle::Mask fm = 0; fm <= all; ++fm) {
        std::vector<int> values(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) values[static_cast<std::size_t>(v)] = static_cast<int>(fm >> v & 1);
        const DegreeSpec f(values);
        for (oracle::Mask s = 0;; s = (s - all) & all) {
          const oracle::Mask rest = all & ~s;
          for (oracle::Mask t = 0;; t = (t - rest) & rest) {
            check(g, f, {VertexSet::from_mask(s), VertexSet::from_mask(t)});
            if (t == rest) break;
          }
          if (s == all) break;
        }
      }
  }
  return {violations == 0, str(checked) + " tuples, " + str(violations) + " violations"};
}

Outcome main_campaign() {
  CampaignParams params;
  params.n_min = 8;
  params.n_max = 12;
  params.ab = {{1, 2}, {1, 3}, {2, 2}, {2, 3}};
  const CampaignReport r = empirical_validate(TheoremId::main, params, 500, 42);
  const bool ok = r.trials == 500 && r.discrepancies.empty() && r.hypotheses_met > 0 &&
                  r.confirmed == r.hypotheses_met;
  return {ok, str(r.trials) + " trials, " + str(r.hypotheses_met) + " met hypotheses, " + str(r.confirmed) +
                  " confirmed, " + str(r.discrepancies.size()) + " discrepancies"};
}

Outcome nonempty_t_consequence(const std::vector<CorpusEntry>& entries) {
  std::size_t qualifying = 0;
  std::size_t violations = 0;
  for (const CorpusEntry& e : entries) {
    if (!is_t_odd_tough(e.graph, e.f, Rational(1, e.a))) continue;
    ++qualifying;
    const int n = e.graph.order();
    for (oracle::Mask s = 0; s <= oracle::full(n); ++s) {
      if (deficiency(e.graph, {VertexSet::from_mask(s), {}}, e.f).delta < 0) ++violations;
      if (oracle::deficiency(e.graph, e.f, s, 0).delta < 0) ++violations;
      if (s == oracle::full(n)) break;
    }
  }
  return {violations == 0 && qualifying > 0,
          str(qualifying) + " odd-tough corpus instances, " + str(violations) + " violations"};
}

Outcome odd_toughness_remark(const std::vector<CorpusEntry>& entries) {
  std::size_t graphs = 0;
  std::size_t cutsets = 0;
  std::size_t violations = 0;
  for (const CorpusEntry& e : entries) {
    const Graph& g = e.graph;
    const int n = g.order();
    if (g.size() == static_cast<std::size_t>(n) * (n - 1) / 2) continue;
    ++graphs;
    const oracle::Adj adj(g);
    for (oracle::Mask s = 1; s < oracle::full(n); ++s) {
      const auto comps = oracle::components(adj, oracle::full(n) & ~s);
      if (comps.size() < 2) continue;
      ++cutsets;
      const VertexSet set = VertexSet::from_mask(s);
      const int odd = odd_component_count(g, set, e.f);
      if (odd > static_cast<int>(comps.size())) ++violations;
    }
    if (odd_toughness(g, e.f).value < toughness(g).value) ++violations;
  }
  return {violations == 0 && graphs > 0,
          str(graphs) + " graphs, " + str(cutsets) + " cutsets, " + str(violations) + " violations"};
}

Outcome g1_instance() {
  const ConstructionReport r = build_g1(1, 3, 2, 5, 2);
  std::vector<std::string> bad;
  if (r.graph.order() != 8) bad.push_back("n");
  if (stability_number(r.graph).size != 2 || oracle::alpha(r.graph) != 2) bad.push_back("alpha");
  if (min_degree(r.graph) != 5) bad.push_back("min degree");
  if (r.f.total() != 16) bad.push_back("f(X)");
  if (!(*r.tightness_threshold == Rational(1) && Rational(1) < Rational(2))) bad.push_back("threshold");
  if (find_f_factor(r.graph, r.f)) bad.push_back("solver found a factor");
  if (r.graph.size() != 24 || brute_force_f_factor(r.graph, r.f)) bad.push_back("brute force");
  if (oracle::has_f_factor(r.graph, r.f)) bad.push_back("oracle");
  AuditOptions exact;
  exact.mode = AuditMode::exact;
  const auto v = find_violating_pair(r.graph, r.f, exact).violation;
  const SubsetPair ab{VertexSet::range(0, 4), VertexSet::range(4, 8)};
  if (!v || v->pair != ab || v->delta != -4) bad.push_back("audit pair");
  std::string detail = "n=8 alpha=2 delta=5 f(X)=16 threshold=1<2, no factor, (A,B) delta=-4";
  if (!bad.empty()) {
    detail = "failed:";
    for (const auto& s : bad) detail += " " + s;
  }
  return {bad.empty(), detail};
}

Outcome g0_instance() {
  std::vector<std::string> bad;
  std::ostringstream detail;
  Limits raised = Limits{.toughness_max_n = 2000};
  for (const ConstructionReport& r : {build_g0(1, 3, 1, 16, 3), g0_paper_preset(1, 3, 1)}) {
    const int a = r.param("a");
    const int k = r.param("k");
    const int p = r.param("p");
    const std::string tag = "(delta=" + std::to_string(r.param("delta")) + ",p=" + std::to_string(p) + ")";
    if (!(p > a * k) || !r.f_total_even() || r.f.total() % 2 != 0) bad.push_back(tag + " parameters");
    const int alpha = stability_number(r.graph).size;
    const Rational bound = main_bound(a, r.param("b"), min_degree(r.graph));
    if (alpha != p || !(Rational(alpha) <= bound)) bad.push_back(tag + " stability hypothesis");
    if (find_f_factor(r.graph, r.f)) bad.push_back(tag + " solver found a factor");
    const AuditResult audit = find_violating_pair(r.graph, r.f);
    const SubsetPair s_empty{VertexSet::range(0, k), {}};
    if (!audit.violation || audit.violation->pair != s_empty || audit.violation->delta != a * k - p) {
      bad.push_back(tag + " audit certificate");
    }
    if (deficiency(r.graph, s_empty, r.f).delta != a * k - p) bad.push_back(tag + " recomputed delta");
    const CutsetRatio odd = odd_toughness(r.graph, r.f, raised);
    if (!(odd.value < ExtRational(Rational(1, a)))) bad.push_back(tag + " odd-toughness");
    CheckOptions opt;
    opt.limits = raised;
    const HypothesisReport main = check_main_theorem(r.graph, r.f, a, r.param("b"), opt);
    for (const Hypothesis& h : main.hypotheses) {
      if (h.satisfied == (h.name.rfind("odd-toughness", 0) == 0)) bad.push_back(tag + " main-theorem " + h.name);
    }
    detail << tag << " n=" << r.graph.order() << " alpha=" << alpha << "<=" << bound << " delta(S,0)=" << a * k - p
           << " odd-toughness=" << odd.value << "<1/" << a << "; ";
  }
  if (!bad.empty()) {
    detail.str("failed:");
    for (const auto& s : bad) detail << " " << s << ";";
  }
  return {bad.empty(), detail.str()};
}

Outcome invariant_oracles() {
  std::size_t disagreements = 0;
  std::size_t alpha_cases = 0, kappa_cases = 0, matching_cases = 0;
  for (std::uint64_t i = 0; i < 400; ++i) {
    std::mt19937_64 rng(derive_seed(8, i));
    const int n = std::uniform_int_distribution<int>(0, 12)(rng);
    const Graph g = random_graph(n, std::uniform_real_distribution<double>(0.05, 0.95)(rng), derive_seed(9, i));
    ++alpha_cases;
    if (stability_number(g).size != oracle::alpha(g)) ++disagreements;
    if (n <= 10) {
      ++kappa_cases;
      if (vertex_connectivity(g) != oracle::kappa(g)) ++disagreements;
    }
    if (n <= 8) {
      ++matching_cases;
      if (static_cast<int>(maximum_matching(g).size()) != oracle::max_matching(g)) ++disagreements;
    }
  }
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : oracle::connected_graphs_up_to_iso(n)) {
      ++alpha_cases, ++kappa_cases, ++matching_cases;
      if (stability_number(g).size != oracle::alpha(g)) ++disagreements;
      if (vertex_connectivity(g) != oracle::kappa(g)) ++disagreements;
      if (static_cast<int>(maximum_matching(g).size()) != oracle::max_matching(g)) ++disagreements;
    }
  return {disagreements == 0, "alpha " + str(alpha_cases) + ", kappa " + str(kappa_cases) + ", matching " +
                                  str(matching_cases) + " cases, " + str(disagreements) + " disagreements"};
}

Outcome round_trip_and_reports() {
  std::size_t failures = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    std::mt19937_64 rng(derive_seed(10, i));
    const int n = std::uniform_int_distribution<int>(1, 25)(rng);
    const Graph g = random_graph(n, std::uniform_real_distribution<double>(0.0, 1.0)(rng), derive_seed(11, i));
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int& x : values) x = std::uniform_int_distribution<int>(0, 6)(rng);
    const std::string text = serialize_instance(g, DegreeSpec(values));
    if (serialize_instance(parse_instance(text)) != text) ++failures;
  }

  CheckOptions opt;
  opt.confirm = true;
  opt.limits = Limits{.toughness_max_n = 2000};
  const ConstructionReport g0 = build_g0(1, 3, 1, 16, 3);
  const ConstructionReport g1 = build_g1(1, 3, 2, 5, 2);
  CampaignParams cp;
  CampaignParams sweep;
  sweep.family = CampaignFamily::g0_sweep;
  sweep.ab = {{1, 3}};
  const std::vector<std::function<Json()>> makers = {
      [&] { return solve_report({g1.graph, g1.f}).json; },
      [&] { return solve_report({cycle(4), DegreeSpec::uniform(4, 2)}).json; },
      [&] { return solve_report({g0.graph, g0.f}).json; },
      [&] { return audit_report({g1.graph, g1.f}).json; },
      [&] { return invariants_report({g1.graph, g1.f}, {}).json; },
      [&] { return theorem_report(TheoremId::cai_conjecture, {g0.graph, g0.f}, {1, 3, 1, 3}, opt).json; },
      [&] { return theorem_report(TheoremId::main, {g0.graph, g0.f}, {1, 3, 1, 3}, opt).json; },
      [&] { return construction_report(g0).json; },
      [&] { return construction_report(g1).json; },
      [&] { return campaign_report(empirical_validate(TheoremId::main, cp, 100, 42)).json; },
      [&] { return campaign_report(empirical_validate(TheoremId::cai_conjecture, sweep, 0, 5)).json; },
  };
  std::size_t certificates = 0;
  for (const auto& make : makers) {
    const Json first = make();
    const RecheckResult r = recheck(first);
    certificates += r.checked;
    if (!r.ok()) ++failures;
    if (canonical_dump(first) != canonical_dump(make())) ++failures;
  }
  return {failures == 0, "100 round trips, " + str(makers.size()) + " reports, " + str(certificates) +
                             " certificates rechecked, " + str(failures) + " failures"};
}

}  // namespace

int main() {
  const std::vector<CorpusEntry> entries = corpus();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Tutte equivalence", tutte_equivalence},
      {"parity lemma", parity_lemma},
      {"main-theorem campaign", main_campaign},
      {"odd-tough graphs have delta(S,empty) >= 0", [&] { return nonempty_t_consequence(entries); }},
      {"odd-toughness >= toughness", [&] { return odd_toughness_remark(entries); }},
      {"G1 tightness instance", g1_instance},
      {"G0 refutation instance", g0_instance},
      {"invariant oracles", invariant_oracles},
      {"round trip and certificates", round_trip_and_reports},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", index, name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
    ++index;
  }
  return failed == 0 ? 0 : 1;
}
