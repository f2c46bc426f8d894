#pragma once

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ffactor/constructions.hpp"
#include "ffactor/factor.hpp"
#include "ffactor/instance_io.hpp"
#include "ffactor/invariants.hpp"
#include "ffactor/theorems.hpp"
#include "ffactor/tutte.hpp"

// Machine-readable reports. Every report is an ordered JSON object whose
// "instances" map holds the normalized text of each instance it refers to,
// keyed by digest, and whose "certificates" array can be re-verified by
// recheck() without repeating any search. Only "timing_ms" varies between
// identical runs.

namespace ffactor {

using Json = nlohmann::ordered_json;

/// SHA-256 of the normalized serialization, hex encoded.
inline std::string instance_digest(const std::string& normalized) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(normalized.data(), normalized.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

/// Exit codes shared by the command-line tools.
enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitError = 2 };

struct ReportDocument {
  Json json;
  int exit_code = kExitOk;
};

namespace detail {

inline Json to_json(const VertexSet& s) { return Json(s.items()); }

inline Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

inline Json params_json(const std::vector<std::pair<std::string, int>>& params) {
  Json out = Json::object();
  for (const auto& [k, v] : params) out[k] = v;
  return out;
}

/// Registers an instance in the document and returns its digest.
inline std::string add_instance(Json& doc, const Graph& g, const DegreeSpec& f) {
  const std::string text = serialize_instance(g, f);
  const std::string digest = instance_digest(text);
  doc["instances"][digest] = text;
  return digest;
}

inline Json deficiency_json(const DeficiencyReport& r, const std::string& digest, bool exhaustive) {
  Json j;
  j["kind"] = "deficiency";
  j["instance"] = digest;
  j["S"] = to_json(r.pair.s);
  j["T"] = to_json(r.pair.t);
  j["f_S"] = r.f_s;
  j["f_T"] = r.f_t;
  j["degree_term"] = r.degree_term;
  j["h"] = r.h;
  j["delta"] = r.delta;
  j["components"] = r.components;
  j["h2"] = r.h2;
  j["h2_vacuous"] = r.h2_vacuous;
  if (r.prop_flag) j["prop_flag"] = *r.prop_flag;
  j["search"] = exhaustive ? "exact" : "structured";
  return j;
}

inline Json factor_json(const FactorSubgraph& h, const std::string& digest) {
  Json j;
  j["kind"] = "f-factor";
  j["instance"] = digest;
  j["edges"] = edges_json(h.edges);
  return j;
}

inline Json hypotheses_json(const HypothesisReport& r) {
  Json j;
  j["kind"] = "hypotheses";
  j["theorem"] = std::string(theorem_name(r.theorem));
  j["parameters"] = params_json(r.parameters);
  j["hypotheses"] = Json::array();
  for (const Hypothesis& h : r.hypotheses) {
    j["hypotheses"].push_back({{"name", h.name},
                               {"lhs", h.lhs.str()},
                               {"relation", std::string(relation_symbol(h.relation))},
                               {"rhs", h.rhs.str()},
                               {"satisfied", h.satisfied}});
  }
  j["hypotheses_met"] = r.hypotheses_met;
  j["conclusion"] = r.conclusion;
  j["verdict"] = std::string(to_string(r.verdict));
  if (r.confirmation_skipped) j["confirmation"] = "skipped (brute-force cap)";
  return j;
}

inline std::vector<Edge> edges_from_json(const Json& arr) {
  std::vector<Edge> out;
  for (const auto& e : arr) out.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return out;
}

inline VertexSet set_from_json(const Json& arr) { return VertexSet(arr.get<std::vector<int>>()); }

}  // namespace detail

/// Starts a report with the fields every command shares.
inline Json report_header(const std::string& command, Json parameters, std::optional<std::uint64_t> seed = std::nullopt) {
  Json doc;
  doc["command"] = command;
  doc["parameters"] = std::move(parameters);
  doc["seed"] = seed ? Json(*seed) : Json(nullptr);
  doc["instances"] = Json::object();
  doc["verdict"] = nullptr;
  doc["certificates"] = Json::array();
  return doc;
}

inline ReportDocument solve_report(const Instance& inst, const AuditOptions& audit = {}) {
  ReportDocument out;
  out.json = report_header("solve", Json::object(), audit.seed);
  const std::string digest = detail::add_instance(out.json, inst.graph, inst.f);
  out.json["instance"] = digest;
  if (const auto h = find_f_factor(inst.graph, inst.f)) {
    out.json["verdict"] = "f-factor found";
    out.json["certificates"].push_back(detail::factor_json(*h, digest));
    out.exit_code = kExitOk;
    return out;
  }
  out.exit_code = kExitNegative;
  if (inst.f.total() % 2 != 0) {
    out.json["verdict"] = "no f-factor (f(X) odd)";
  } else {
    out.json["verdict"] = "no f-factor";
  }
  const AuditResult found = find_violating_pair(inst.graph, inst.f, audit);
  if (found.violation) {
    out.json["certificates"].push_back(detail::deficiency_json(*found.violation, digest, found.exhaustive));
  }
  return out;
}

inline ReportDocument audit_report(const Instance& inst, const AuditOptions& audit = {}) {
  ReportDocument out;
  Json params;
  params["exact_max_n"] = audit.limits.exact_audit_max_n;
  out.json = report_header("audit", params, audit.seed);
  const std::string digest = detail::add_instance(out.json, inst.graph, inst.f);
  out.json["instance"] = digest;
  const AuditResult found = find_violating_pair(inst.graph, inst.f, audit);
  if (found.violation) {
    out.json["verdict"] = "violating pair found";
    out.json["certificates"].push_back(detail::deficiency_json(*found.violation, digest, found.exhaustive));
    out.exit_code = kExitNegative;
  } else {
    out.json["verdict"] = found.exhaustive ? "none found (exact)" : "none found (heuristic)";
    out.exit_code = kExitOk;
  }
  return out;
}

struct InvariantSelection {
  bool alpha = false;
  bool kappa = false;
  bool toughness = false;
  bool odd_toughness = false;

  bool any() const { return alpha || kappa || toughness || odd_toughness; }
};

inline ReportDocument invariants_report(const Instance& inst, InvariantSelection which, const Limits& limits = {}) {
  if (!which.any()) which = {true, true, true, true};
  ReportDocument out;
  out.json = report_header("invariants", Json::object());
  const std::string digest = detail::add_instance(out.json, inst.graph, inst.f);
  out.json["instance"] = digest;
  Json values;
  values["n"] = inst.graph.order();
  values["m"] = inst.graph.size();
  values["min_degree"] = min_degree(inst.graph);
  values["connected"] = is_connected(inst.graph);
  if (which.alpha) {
    const IndependentSet is = stability_number(inst.graph);
    values["alpha"] = is.size;
    values["alpha_witness"] = detail::to_json(is.witness);
  }
  if (which.kappa) values["kappa"] = vertex_connectivity(inst.graph);
  if (which.toughness) {
    const CutsetRatio t = toughness(inst.graph, limits);
    values["toughness"] = t.value.str();
    values["toughness_witness"] = detail::to_json(t.witness);
  }
  if (which.odd_toughness) {
    const CutsetRatio t = odd_toughness(inst.graph, inst.f, limits);
    values["odd_toughness"] = t.value.str();
    values["odd_toughness_witness"] = detail::to_json(t.witness);
    if (!t.value.is_infinite()) {
      out.json["certificates"].push_back({{"kind", "odd-cutset"},
                                          {"instance", digest},
                                          {"S", detail::to_json(t.witness)},
                                          {"h_prime", t.counted}});
    }
  }
  out.json["verdict"] = values;
  return out;
}

/// Parameters of verify-theorem; unused ones are ignored.
struct TheoremParams {
  int a = 1;
  int b = 2;
  int r = 1;
  int star_n = 3;
};

inline HypothesisReport run_theorem(TheoremId id, const Instance& inst, const TheoremParams& p, const CheckOptions& opt) {
  switch (id) {
    case TheoremId::main: return check_main_theorem(inst.graph, inst.f, p.a, p.b, opt);
    case TheoremId::corollary_kappa: return check_corollary_kappa(inst.graph, inst.f, p.a, p.b, opt);
    case TheoremId::katerinis_tsikopoulos: return check_theorem_kt(inst.graph, inst.f, p.a, p.b, opt);
    case TheoremId::nishimura: return check_theorem_nishimura(inst.graph, p.r, opt);
    case TheoremId::kl: return check_theorem_kl(inst.graph, p.a, p.b, opt);
    case TheoremId::cai: return check_cai(inst.graph, inst.f, p.a, p.b, p.star_n, opt);
    case TheoremId::cai_conjecture: return check_cai_conjecture(inst.graph, inst.f, p.a, p.b, opt);
  }
  throw std::logic_error("unhandled theorem");
}

namespace detail {

// Adds the hypotheses and any confirmation or refutation certificates.
inline void append_hypothesis_report(Json& doc, const HypothesisReport& rep, const Graph& g, const DegreeSpec& f,
                                     const std::string& digest) {
  doc["certificates"].push_back(hypotheses_json(rep));
  if (rep.factor) {
    if (rep.theorem == TheoremId::kl) {
      doc["certificates"].push_back({{"kind", "ab-factor"},
                                     {"instance", digest},
                                     {"a", rep.parameters.at(0).second},
                                     {"b", rep.parameters.at(1).second},
                                     {"edges", edges_json(rep.factor->edges)}});
    } else if (rep.theorem == TheoremId::nishimura) {
      const std::string rdigest = add_instance(doc, g, DegreeSpec::uniform(g.order(), rep.parameters.at(0).second));
      doc["certificates"].push_back(factor_json(*rep.factor, rdigest));
    } else {
      doc["certificates"].push_back(factor_json(*rep.factor, digest));
    }
  }
  if (rep.counterexample) {
    std::string cdigest = digest;
    if (rep.theorem == TheoremId::nishimura) {
      cdigest = add_instance(doc, g, DegreeSpec::uniform(g.order(), rep.parameters.at(0).second));
    }
    doc["certificates"].push_back(deficiency_json(*rep.counterexample, cdigest, rep.counterexample_exhaustive));
  }
  (void)f;
}

}  // namespace detail

inline ReportDocument theorem_report(TheoremId id, const Instance& inst, const TheoremParams& p, const CheckOptions& opt) {
  ReportDocument out;
  Json params{{"theorem", std::string(theorem_name(id))}, {"a", p.a}, {"b", p.b}, {"r", p.r}, {"n", p.star_n},
              {"confirm", opt.confirm}};
  out.json = report_header("verify-theorem", params, opt.audit_seed);
  const std::string digest = detail::add_instance(out.json, inst.graph, inst.f);
  out.json["instance"] = digest;
  const HypothesisReport rep = run_theorem(id, inst, p, opt);
  out.json["verdict"] = std::string(to_string(rep.verdict));
  detail::append_hypothesis_report(out.json, rep, inst.graph, inst.f, digest);
  out.exit_code = rep.verdict == Verdict::refuted ? kExitNegative : kExitOk;
  return out;
}

inline ReportDocument construction_report(const ConstructionReport& c) {
  ReportDocument out;
  out.json = report_header("gen", detail::params_json(c.parameters));
  const std::string digest = detail::add_instance(out.json, c.graph, c.f);
  out.json["instance"] = digest;
  Json body;
  body["family"] = c.family;
  body["n"] = c.graph.order();
  body["m"] = c.graph.size();
  body["expected_alpha"] = c.expected_alpha;
  body["expected_min_degree"] = c.expected_min_degree;
  body["f_total"] = c.f_total;
  body["f_total_even"] = c.f_total_even();
  body["expected_existence"] = to_string(c.expected);
  if (c.stability_bound) body["stability_bound"] = c.stability_bound->str();
  if (c.stability_hypothesis_met) body["stability_hypothesis_met"] = *c.stability_hypothesis_met;
  if (c.tightness_threshold) body["tightness_threshold"] = c.tightness_threshold->str();
  body["paper_regime"] = c.paper_regime;
  out.json["verdict"] = body;
  if (c.witness) {
    out.json["certificates"].push_back(
        detail::deficiency_json(deficiency(c.graph, *c.witness, c.f), digest, false));
    out.json["certificates"].back()["search"] = "construction";
  }
  return out;
}

inline ReportDocument random_instance_report(const Instance& inst, Json params, std::uint64_t seed) {
  ReportDocument out;
  out.json = report_header("gen", std::move(params), seed);
  out.json["instance"] = detail::add_instance(out.json, inst.graph, inst.f);
  out.json["verdict"] = {{"family", "random"}, {"n", inst.graph.order()}, {"m", inst.graph.size()}};
  return out;
}

inline ReportDocument campaign_report(const CampaignReport& c) {
  ReportDocument out;
  Json params;
  params["theorem"] = std::string(theorem_name(c.theorem));
  params["family"] = c.params.family == CampaignFamily::random ? "random" : "g0";
  params["trials"] = c.trials;
  if (c.params.family == CampaignFamily::random) {
    params["n_min"] = c.params.n_min;
    params["n_max"] = c.params.n_max;
    params["p_min"] = c.params.p_min;
    params["p_max"] = c.params.p_max;
  } else {
    params["delta_max"] = c.params.g0_delta_max;
    params["p_max"] = c.params.g0_p_max;
  }
  params["ab"] = Json::array();
  for (auto [a, b] : c.params.ab) params["ab"].push_back({a, b});
  params["r"] = c.params.r;
  params["star_n"] = c.params.star_n;
  out.json = report_header("fuzz", params, c.seed);
  out.json["verdict"] = {{"trials", c.trials},
                         {"skipped", c.skipped},
                         {"hypotheses_met", c.hypotheses_met},
                         {"confirmed", c.confirmed},
                         {"unconfirmed", c.unconfirmed},
                         {"discrepancies", c.discrepancies.size()}};
  for (const Discrepancy& d : c.discrepancies) {
    const std::string digest = instance_digest(d.instance);
    out.json["instances"][digest] = d.instance;
    Json entry{{"kind", "discrepancy"},
               {"instance", digest},
               {"trial", d.trial},
               {"seed", d.seed},
               {"parameters", detail::params_json(d.parameters)}};
    out.json["certificates"].push_back(entry);
    if (d.certificate) {
      out.json["certificates"].push_back(detail::deficiency_json(*d.certificate, digest, d.certificate_exhaustive));
    }
  }
  out.exit_code = c.discrepancies.empty() ? kExitOk : kExitNegative;
  return out;
}

/// Report with the timing field removed, for byte comparisons.
inline std::string canonical_dump(Json doc) {
  doc.erase("timing_ms");
  return doc.dump(2);
}

// ---------------------------------------------------------------------------
// Re-verification

struct RecheckResult {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

inline RecheckResult recheck(const Json& doc) {
  RecheckResult out;
  std::map<std::string, Instance> instances;
  if (doc.contains("instances")) {
    for (const auto& [digest, text] : doc.at("instances").items()) {
      const std::string body = text.get<std::string>();
      if (instance_digest(body) != digest) {
        out.failures.push_back("instance " + digest + ": digest does not match its text");
        continue;
      }
      try {
        Instance inst = parse_instance(body);
        if (serialize_instance(inst) != body) {
          out.failures.push_back("instance " + digest + ": text is not in normal form");
        }
        instances.emplace(digest, std::move(inst));
      } catch (const std::exception& e) {
        out.failures.push_back("instance " + digest + ": " + e.what());
      }
    }
  }
  auto lookup = [&](const Json& cert) -> const Instance* {
    const auto it = instances.find(cert.at("instance").get<std::string>());
    return it == instances.end() ? nullptr : &it->second;
  };

  if (!doc.contains("certificates")) return out;
  std::size_t index = 0;
  for (const Json& cert : doc.at("certificates")) {
    const std::string where = "certificate " + std::to_string(index++);
    const std::string kind = cert.value("kind", "");
    try {
      if (kind == "f-factor") {
        const Instance* inst = lookup(cert);
        if (inst == nullptr) throw std::runtime_error("unknown instance");
        if (!verify_f_factor(inst->graph, inst->f, {detail::edges_from_json(cert.at("edges"))})) {
          out.failures.push_back(where + ": f-factor does not verify");
        }
      } else if (kind == "ab-factor") {
        const Instance* inst = lookup(cert);
        if (inst == nullptr) throw std::runtime_error("unknown instance");
        const int a = cert.at("a").get<int>();
        const int b = cert.at("b").get<int>();
        const auto edges = detail::edges_from_json(cert.at("edges"));
        std::vector<int> deg(static_cast<std::size_t>(inst->graph.order()), 0);
        bool ok = true;
        for (const Edge& e : edges) {
          ok = ok && e.u >= 0 && e.v < inst->graph.order() && e.u < e.v && inst->graph.adjacent(e.u, e.v);
          if (!ok) break;
          ++deg[static_cast<std::size_t>(e.u)];
          ++deg[static_cast<std::size_t>(e.v)];
        }
        std::vector<Edge> sorted = edges;
        std::sort(sorted.begin(), sorted.end());
        ok = ok && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        for (int d : deg) ok = ok && d >= a && d <= b;
        if (!ok) out.failures.push_back(where + ": [a,b]-factor does not verify");
      } else if (kind == "deficiency") {
        const Instance* inst = lookup(cert);
        if (inst == nullptr) throw std::runtime_error("unknown instance");
        const SubsetPair pair{detail::set_from_json(cert.at("S")), detail::set_from_json(cert.at("T"))};
        const DeficiencyReport r = deficiency(inst->graph, pair, inst->f);
        const bool same = r.f_s == cert.at("f_S").get<std::int64_t>() && r.f_t == cert.at("f_T").get<std::int64_t>() &&
                          r.degree_term == cert.at("degree_term").get<std::int64_t>() && r.h == cert.at("h").get<int>() &&
                          r.delta == cert.at("delta").get<std::int64_t>() &&
                          r.components == cert.at("components").get<int>() && r.h2 == cert.at("h2").get<int>();
        if (!same) out.failures.push_back(where + ": deficiency terms do not match recomputation");
        if (r.delta >= 0) out.failures.push_back(where + ": recorded pair does not violate the condition");
      } else if (kind == "odd-cutset") {
        const Instance* inst = lookup(cert);
        if (inst == nullptr) throw std::runtime_error("unknown instance");
        const VertexSet s = detail::set_from_json(cert.at("S"));
        const int h = odd_component_count(inst->graph, s, inst->f);
        const auto parts = components(remove_vertices(inst->graph, s).graph).size();
        if (h != cert.at("h_prime").get<int>() || parts < 2) out.failures.push_back(where + ": odd cutset does not verify");
      } else if (kind == "hypotheses") {
        HypothesisReport rep;
        rep.hypotheses_met = cert.at("hypotheses_met").get<bool>();
        for (const Json& h : cert.at("hypotheses")) {
          rep.hypotheses.push_back({h.at("name").get<std::string>(), ExtRational::parse(h.at("lhs").get<std::string>()),
                                    parse_relation(h.at("relation").get<std::string>()),
                                    ExtRational::parse(h.at("rhs").get<std::string>()), h.at("satisfied").get<bool>()});
        }
        if (!reevaluate(rep)) out.failures.push_back(where + ": hypothesis flags do not re-evaluate");
      } else if (kind == "discrepancy") {
        if (lookup(cert) == nullptr) throw std::runtime_error("unknown instance");
      } else {
        out.failures.push_back(where + ": unknown certificate kind '" + kind + "'");
        continue;
      }
      ++out.checked;
    } catch (const std::exception& e) {
      out.failures.push_back(where + ": " + e.what());
    }
  }
  return out;
}

}  // namespace ffactor
