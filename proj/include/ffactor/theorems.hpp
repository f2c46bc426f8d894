#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ffactor/bounds.hpp"
#include "ffactor/constructions.hpp"
#include "ffactor/factor.hpp"
#include "ffactor/graph.hpp"
#include "ffactor/instance_io.hpp"
#include "ffactor/invariants.hpp"
#include "ffactor/random.hpp"
#include "ffactor/rational.hpp"
#include "ffactor/tutte.hpp"

namespace ffactor {

enum class TheoremId { main, corollary_kappa, katerinis_tsikopoulos, nishimura, kl, cai, cai_conjecture };

inline constexpr TheoremId kAllTheorems[] = {TheoremId::main,       TheoremId::corollary_kappa,
                                             TheoremId::katerinis_tsikopoulos, TheoremId::nishimura,
                                             TheoremId::kl, TheoremId::cai,
                                             TheoremId::cai_conjecture};

inline std::string_view theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::main: return "main";
    case TheoremId::corollary_kappa: return "corollary-kappa";
    case TheoremId::katerinis_tsikopoulos: return "kt";
    case TheoremId::nishimura: return "nishimura";
    case TheoremId::kl: return "kl";
    case TheoremId::cai: return "cai";
    case TheoremId::cai_conjecture: return "cai-conjecture";
  }
  return "?";
}

inline TheoremId parse_theorem_id(std::string_view name) {
  for (TheoremId id : kAllTheorems)
    if (theorem_name(id) == name) return id;
  throw std::invalid_argument("unknown theorem '" + std::string(name) +
                              "' (expected main, corollary-kappa, kt, nishimura, kl, cai, cai-conjecture)");
}

enum class Relation { le, lt, ge, gt, eq };

inline std::string_view relation_symbol(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::lt: return "<";
    case Relation::ge: return ">=";
    case Relation::gt: return ">";
    case Relation::eq: return "==";
  }
  return "?";
}

inline Relation parse_relation(std::string_view s) {
  for (Relation r : {Relation::le, Relation::lt, Relation::ge, Relation::gt, Relation::eq})
    if (relation_symbol(r) == s) return r;
  throw std::invalid_argument("unknown relation '" + std::string(s) + "'");
}

inline bool holds(const ExtRational& lhs, Relation rel, const ExtRational& rhs) {
  switch (rel) {
    case Relation::le: return lhs <= rhs;
    case Relation::lt: return lhs < rhs;
    case Relation::ge: return lhs >= rhs;
    case Relation::gt: return lhs > rhs;
    case Relation::eq: return lhs == rhs;
  }
  return false;
}

/// One hypothesis recorded as an exact comparison, so it can be re-evaluated
/// from the report alone.
struct Hypothesis {
  std::string name;
  ExtRational lhs;
  Relation relation = Relation::le;
  ExtRational rhs;
  bool satisfied = false;
};

enum class Verdict {
  not_predicted,  // some hypothesis fails: the theorem says nothing
  predicted,      // hypotheses met, no solver run
  confirmed,      // hypotheses met and the conclusion was verified
  refuted,        // hypotheses met and the conclusion is false
};

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::not_predicted: return "not-predicted";
    case Verdict::predicted: return "predicted";
    case Verdict::confirmed: return "predicted-and-confirmed";
    case Verdict::refuted: return "predicted-and-REFUTED";
  }
  return "?";
}

struct HypothesisReport {
  TheoremId theorem = TheoremId::main;
  std::vector<std::pair<std::string, int>> parameters;
  std::vector<Hypothesis> hypotheses;
  bool hypotheses_met = false;
  std::string conclusion;
  Verdict verdict = Verdict::not_predicted;
  std::optional<FactorSubgraph> factor;           // confirmation witness
  std::optional<DeficiencyReport> counterexample; // certificate when refuted
  bool counterexample_exhaustive = false;
  bool confirmation_skipped = false;              // e.g. brute-force cap exceeded
};

/// Re-evaluates every flag from the recorded values.
inline bool reevaluate(const HypothesisReport& report) {
  bool all = true;
  for (const Hypothesis& h : report.hypotheses) {
    if (holds(h.lhs, h.relation, h.rhs) != h.satisfied) return false;
    all = all && h.satisfied;
  }
  return all == report.hypotheses_met;
}

struct CheckOptions {
  bool confirm = false;
  Limits limits{};
  std::uint64_t audit_seed = 1;
};

namespace detail {

class ReportBuilder {
 public:
  ReportBuilder(TheoremId id, std::vector<std::pair<std::string, int>> params, std::string conclusion) {
    report_.theorem = id;
    report_.parameters = std::move(params);
    report_.conclusion = std::move(conclusion);
  }

  void add(std::string name, ExtRational lhs, Relation rel, ExtRational rhs) {
    const bool ok = holds(lhs, rel, rhs);
    report_.hypotheses.push_back({std::move(name), lhs, rel, rhs, ok});
  }
  void add_flag(std::string name, bool value) { add(std::move(name), value ? 1 : 0, Relation::eq, 1); }

  void add_f_range(const DegreeSpec& f, int a, int b) {
    add("min f(x) >= a", f.min_value(), Relation::ge, a);
    add("max f(x) <= b", f.max_value(), Relation::le, b);
  }
  void add_f_parity(const DegreeSpec& f) { add("f(X) even", f.total() % 2, Relation::eq, 0); }

  HypothesisReport finish() {
    report_.hypotheses_met = std::all_of(report_.hypotheses.begin(), report_.hypotheses.end(),
                                         [](const Hypothesis& h) { return h.satisfied; });
    report_.verdict = report_.hypotheses_met ? Verdict::predicted : Verdict::not_predicted;
    return std::move(report_);
  }

 private:
  HypothesisReport report_;
};

// Odd-toughness with the convention that disconnected graphs score 0.
inline ExtRational odd_toughness_or_zero(const Graph& g, const DegreeSpec& f, const Limits& limits) {
  if (!is_connected(g)) return 0;
  return odd_toughness(g, f, limits).value;
}

inline ExtRational reciprocal(int a) { return a > 0 ? ExtRational(Rational(1, a)) : ExtRational::infinity(); }

inline void confirm_f_factor(HypothesisReport& report, const Graph& g, const DegreeSpec& f, const CheckOptions& opt) {
  if (!opt.confirm || !report.hypotheses_met) return;
  report.factor = find_f_factor(g, f);
  if (report.factor) {
    report.verdict = Verdict::confirmed;
    return;
  }
  report.verdict = Verdict::refuted;
  AuditOptions audit;
  audit.limits = opt.limits;
  audit.seed = opt.audit_seed;
  const AuditResult found = find_violating_pair(g, f, audit);
  report.counterexample = found.violation;
  report.counterexample_exhaustive = found.exhaustive;
}

}  // namespace detail

/// Main theorem: connected, δ >= b >= 2, a <= f <= b, f(X) even,
/// α <= 4a(δ-b)/(b+1)^2 and odd-toughness >= 1/a imply an f-factor.
inline HypothesisReport check_main_theorem(const Graph& g, const DegreeSpec& f, int a, int b, const CheckOptions& opt = {}) {
  f.check_against(g);
  const int delta = min_degree(g);
  detail::ReportBuilder rb(TheoremId::main, {{"a", a}, {"b", b}}, "f-factor exists");
  rb.add("b >= 2", b, Relation::ge, 2);
  rb.add_flag("connected", is_connected(g));
  rb.add("min degree >= b", delta, Relation::ge, b);
  rb.add_f_range(f, a, b);
  rb.add_f_parity(f);
  rb.add("alpha <= 4a(delta-b)/(b+1)^2", stability_number(g).size, Relation::le, detail::stability_bound(a, b, delta));
  rb.add("odd-toughness >= 1/a", detail::odd_toughness_or_zero(g, f, opt.limits), Relation::ge, detail::reciprocal(a));
  HypothesisReport r = rb.finish();
  detail::confirm_f_factor(r, g, f, opt);
  return r;
}

/// Corollary: as the main theorem with α <= min(4a(δ-b)/(b+1)^2, aκ) in place
/// of the odd-toughness condition.
inline HypothesisReport check_corollary_kappa(const Graph& g, const DegreeSpec& f, int a, int b,
                                              const CheckOptions& opt = {}) {
  f.check_against(g);
  const int delta = min_degree(g);
  const Rational bound = std::min(detail::stability_bound(a, b, delta),
                                  Rational(static_cast<std::int64_t>(a) * vertex_connectivity(g)));
  detail::ReportBuilder rb(TheoremId::corollary_kappa, {{"a", a}, {"b", b}}, "f-factor exists");
  rb.add("b >= 2", b, Relation::ge, 2);
  rb.add_flag("connected", is_connected(g));
  rb.add("min degree >= b", delta, Relation::ge, b);
  rb.add_f_range(f, a, b);
  rb.add_f_parity(f);
  rb.add("alpha <= min(4a(delta-b)/(b+1)^2, a*kappa)", stability_number(g).size, Relation::le, bound);
  HypothesisReport r = rb.finish();
  detail::confirm_f_factor(r, g, f, opt);
  return r;
}

/// Katerinis-Tsikopoulos: δ >= b|X|/(a+b) and |X| > (a+b)(a+b-3)/a.
inline HypothesisReport check_theorem_kt(const Graph& g, const DegreeSpec& f, int a, int b, const CheckOptions& opt = {}) {
  if (a < 1 || b < a) throw std::invalid_argument("kt: need b >= a >= 1");
  f.check_against(g);
  const int n = g.order();
  detail::ReportBuilder rb(TheoremId::katerinis_tsikopoulos, {{"a", a}, {"b", b}}, "f-factor exists");
  rb.add("min degree >= b|X|/(a+b)", min_degree(g), Relation::ge, Rational(static_cast<std::int64_t>(b) * n, a + b));
  rb.add("|X| > (a+b)(a+b-3)/a", n, Relation::gt, Rational(static_cast<std::int64_t>(a + b) * (a + b - 3), a));
  rb.add_f_range(f, a, b);
  rb.add_f_parity(f);
  HypothesisReport r = rb.finish();
  detail::confirm_f_factor(r, g, f, opt);
  return r;
}

/// Nishimura: r odd, |X| even, κ >= (r+1)^2/2 and α <= 4rκ/(r+1)^2 give an r-factor.
inline HypothesisReport check_theorem_nishimura(const Graph& g, int r, const CheckOptions& opt = {}) {
  if (r < 1 || r % 2 == 0) throw std::invalid_argument("nishimura: r must be an odd integer >= 1");
  const int kappa = vertex_connectivity(g);
  const std::int64_t sq = static_cast<std::int64_t>(r + 1) * (r + 1);
  detail::ReportBuilder rb(TheoremId::nishimura, {{"r", r}}, "r-factor exists");
  rb.add("|X| even", g.order() % 2, Relation::eq, 0);
  rb.add("kappa >= (r+1)^2/2", kappa, Relation::ge, Rational(sq, 2));
  rb.add("alpha <= 4r*kappa/(r+1)^2", stability_number(g).size, Relation::le, Rational(4LL * r * kappa, sq));
  HypothesisReport rep = rb.finish();
  detail::confirm_f_factor(rep, g, DegreeSpec::uniform(g.order(), r), opt);
  return rep;
}

/// [a,b]-factor theorem: b >= a+1 and α <= 4b(δ-a+1)/(a+1)^2 (a odd) or
/// 4b(δ-a+1)/(a(a+2)) (a even) give an [a,b]-factor. Confirmation uses the
/// brute-force oracle and is skipped above its edge cap.
inline HypothesisReport check_theorem_kl(const Graph& g, int a, int b, const CheckOptions& opt = {}) {
  if (a < 1) throw std::invalid_argument("kl: a must be at least 1");
  if (b < a + 1) throw std::invalid_argument("kl: need b >= a+1");
  const int delta = min_degree(g);
  const std::int64_t top = 4LL * b * (delta - a + 1);
  const std::int64_t bottom = a % 2 == 1 ? static_cast<std::int64_t>(a + 1) * (a + 1) : static_cast<std::int64_t>(a) * (a + 2);
  detail::ReportBuilder rb(TheoremId::kl, {{"a", a}, {"b", b}}, "[a,b]-factor exists");
  rb.add(a % 2 == 1 ? "alpha <= 4b(delta-a+1)/(a+1)^2" : "alpha <= 4b(delta-a+1)/(a(a+2))", stability_number(g).size,
         Relation::le, Rational(top, bottom));
  HypothesisReport rep = rb.finish();
  if (opt.confirm && rep.hypotheses_met) {
    if (static_cast<long>(g.size()) > opt.limits.brute_max_m) {
      rep.confirmation_skipped = true;
    } else {
      rep.factor = brute_force_ab_factor(g, a, b, opt.limits);
      rep.verdict = rep.factor ? Verdict::confirmed : Verdict::refuted;
    }
  }
  return rep;
}

/// Cai: connected K_{1,n}-free, 1 <= n-1 <= a <= f <= b, f(X) even,
/// δ >= b+n-1 and α <= 4a(δ-b-n+1)/((n-1)(b+1)^2).
inline HypothesisReport check_cai(const Graph& g, const DegreeSpec& f, int a, int b, int n,
                                  const CheckOptions& opt = {}) {
  if (n - 1 < 1 || n - 1 > a || a > b) throw std::invalid_argument("cai: need 1 <= n-1 <= a <= b");
  f.check_against(g);
  const int delta = min_degree(g);
  detail::ReportBuilder rb(TheoremId::cai, {{"a", a}, {"b", b}, {"n", n}}, "f-factor exists");
  rb.add_flag("connected", is_connected(g));
  rb.add_flag("K_{1,n}-free", is_star_free(g, n));
  rb.add_f_range(f, a, b);
  rb.add_f_parity(f);
  rb.add("min degree >= b+n-1", delta, Relation::ge, b + n - 1);
  rb.add("alpha <= 4a(delta-b-n+1)/((n-1)(b+1)^2)", stability_number(g).size, Relation::le,
         Rational(4LL * a * (delta - b - n + 1), static_cast<std::int64_t>(n - 1) * (b + 1) * (b + 1)));
  HypothesisReport r = rb.finish();
  detail::confirm_f_factor(r, g, f, opt);
  return r;
}

/// Cai's conjecture: connected, a <= f <= b, f(X) even and
/// α <= 4a(δ-b)/(b+1)^2 would suffice. Refuted by the G0 family.
inline HypothesisReport check_cai_conjecture(const Graph& g, const DegreeSpec& f, int a, int b,
                                             const CheckOptions& opt = {}) {
  f.check_against(g);
  detail::ReportBuilder rb(TheoremId::cai_conjecture, {{"a", a}, {"b", b}}, "f-factor exists");
  rb.add_flag("connected", is_connected(g));
  rb.add_f_range(f, a, b);
  rb.add_f_parity(f);
  rb.add("alpha <= 4a(delta-b)/(b+1)^2", stability_number(g).size, Relation::le,
         detail::stability_bound(a, b, min_degree(g)));
  HypothesisReport r = rb.finish();
  detail::confirm_f_factor(r, g, f, opt);
  return r;
}

// ---------------------------------------------------------------------------
// Empirical validation campaigns

enum class CampaignFamily { random, g0_sweep };

struct CampaignParams {
  CampaignFamily family = CampaignFamily::random;
  int n_min = 8;
  int n_max = 12;
  double p_min = 0.5;
  double p_max = 1.0;
  std::vector<std::pair<int, int>> ab = {{1, 2}, {1, 3}, {2, 2}, {2, 3}};
  int r = 1;          // nishimura
  int star_n = 2;     // cai: K_{1,n}
  int g0_delta_max = 16;
  int g0_p_max = 4;
  Limits limits{};
};

struct Discrepancy {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, int>> parameters;
  std::string instance;  // normalized instance text
  std::optional<DeficiencyReport> certificate;
  bool certificate_exhaustive = false;
};

struct CampaignReport {
  TheoremId theorem = TheoremId::main;
  std::uint64_t seed = 0;
  CampaignParams params;
  std::size_t trials = 0;
  std::size_t skipped = 0;          // parity repair impossible or (a,b) outside the theorem's domain
  std::size_t hypotheses_met = 0;
  std::size_t confirmed = 0;
  std::size_t unconfirmed = 0;      // hypotheses met but confirmation was skipped
  std::vector<Discrepancy> discrepancies;
};

namespace detail {

inline HypothesisReport run_checker(TheoremId id, const Graph& g, const DegreeSpec& f, int a, int b,
                                    const CampaignParams& params, const CheckOptions& opt) {
  switch (id) {
    case TheoremId::main: return check_main_theorem(g, f, a, b, opt);
    case TheoremId::corollary_kappa: return check_corollary_kappa(g, f, a, b, opt);
    case TheoremId::katerinis_tsikopoulos: return check_theorem_kt(g, f, a, b, opt);
    case TheoremId::nishimura: return check_theorem_nishimura(g, params.r, opt);
    case TheoremId::kl: return check_theorem_kl(g, a, b, opt);
    case TheoremId::cai: return check_cai(g, f, a, b, params.star_n, opt);
    case TheoremId::cai_conjecture: return check_cai_conjecture(g, f, a, b, opt);
  }
  throw std::logic_error("unhandled theorem");
}

// Parameter combinations outside a theorem's domain, or instances above a
// size cap, count as skipped trials.
inline std::optional<HypothesisReport> try_checker(TheoremId id, const Graph& g, const DegreeSpec& f, int a, int b,
                                                   const CampaignParams& params, const CheckOptions& opt) {
  try {
    return run_checker(id, g, f, a, b, params, opt);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  } catch (const SizeCapError&) {
    return std::nullopt;
  }
}

inline void tally(CampaignReport& out, const HypothesisReport& rep, std::size_t trial, std::uint64_t seed,
                  std::vector<std::pair<std::string, int>> params, const Graph& g, const DegreeSpec& f) {
  if (!rep.hypotheses_met) return;
  ++out.hypotheses_met;
  if (rep.verdict == Verdict::confirmed) ++out.confirmed;
  if (rep.confirmation_skipped || rep.verdict == Verdict::predicted) ++out.unconfirmed;
  if (rep.verdict == Verdict::refuted) {
    out.discrepancies.push_back({trial, seed, std::move(params), serialize_instance(g, f), rep.counterexample,
                                 rep.counterexample_exhaustive});
  }
}

}  // namespace detail

/// Samples instances, runs the checker and, whenever its hypotheses hold,
/// confirms the conclusion. Trial i uses derive_seed(seed, i), so reports do
/// not depend on evaluation order. The g0 sweep enumerates every admissible
/// (a, b, k, δ, p) with p > a·k inside the configured ranges instead of sampling.
inline CampaignReport empirical_validate(TheoremId id, const CampaignParams& params, std::size_t trials,
                                         std::uint64_t seed) {
  CampaignReport out;
  out.theorem = id;
  out.seed = seed;
  out.params = params;
  CheckOptions opt;
  opt.confirm = true;
  opt.limits = params.limits;

  if (params.family == CampaignFamily::g0_sweep) {
    std::size_t index = 0;
    for (auto [a, b] : params.ab) {
      if (b % 2 == 0 || a > b) continue;
      for (int k = 1; k < b; ++k)
        for (int delta = 2; delta <= params.g0_delta_max; delta += 2)
          for (int p = std::max(2, a * k + 1); p <= params.g0_p_max; ++p) {
            const ConstructionReport c = build_g0(a, b, k, delta, p);
            opt.audit_seed = derive_seed(seed, index);
            if (const auto rep = detail::try_checker(id, c.graph, c.f, a, b, params, opt)) {
              detail::tally(out, *rep, index, opt.audit_seed, c.parameters, c.graph, c.f);
            } else {
              ++out.skipped;
            }
            ++index;
          }
    }
    out.trials = index;
    return out;
  }

  if (params.n_min < 1 || params.n_max < params.n_min) throw std::invalid_argument("campaign: bad vertex range");
  if (params.ab.empty()) throw std::invalid_argument("campaign: no (a,b) pairs");
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, t);
    std::mt19937_64 rng(trial_seed);
    const int n = std::uniform_int_distribution<int>(params.n_min, params.n_max)(rng);
    const double p = std::uniform_real_distribution<double>(params.p_min, params.p_max)(rng);
    const auto [a, b] = params.ab[std::uniform_int_distribution<std::size_t>(0, params.ab.size() - 1)(rng)];
    const Graph g = random_connected_graph(n, p, derive_seed(trial_seed, 1));
    DegreeSpec f;
    if (id == TheoremId::nishimura) {
      f = DegreeSpec::uniform(n, params.r);
    } else {
      try {
        f = random_degree_spec(g, a, b, derive_seed(trial_seed, 2));
      } catch (const std::invalid_argument&) {
        ++out.skipped;
        continue;
      }
    }
    opt.audit_seed = trial_seed;
    if (const auto rep = detail::try_checker(id, g, f, a, b, params, opt)) {
      detail::tally(out, *rep, t, trial_seed, {{"n", n}, {"a", a}, {"b", b}}, g, f);
    } else {
      ++out.skipped;
    }
  }
  out.trials = trials;
  return out;
}

}  // namespace ffactor
