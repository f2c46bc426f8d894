#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ffactor/ffactor.hpp"

namespace {

using namespace ffactor;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Instance load_instance(const std::string& path) {
  try {
    return parse_instance(read_file(path));
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct Output {
  std::string report_path;

  int emit(ReportDocument doc, std::chrono::steady_clock::time_point start) const {
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    doc.json["timing_ms"] = static_cast<std::int64_t>(elapsed.count());
    const std::string text = doc.json.dump(2) + "\n";
    if (report_path.empty()) {
      std::cout << text;
    } else {
      write_file(report_path, text);
    }
    return doc.exit_code;
  }
};

std::pair<int, int> parse_ab(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--ab expects a,b");
  return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"f-factor solver, Tutte-condition auditor and theorem checker"};
  app.require_subcommand(1);
  app.footer(
      "Size caps: exact audit n <= 15 (FFACTOR_EXACT_MAX_N), toughness n <= 20 (FFACTOR_TOUGHNESS_MAX_N),\n"
      "brute-force oracles m <= 24 (FFACTOR_BRUTE_MAX_M). Flags override the environment; --force lifts them.\n"
      "Exit status: 0 = positive answer, 1 = negative answer, 2 = error.");

  Output output;
  app.add_option("--report", output.report_path, "Write the report to a file instead of stdout");

  Limits limits;
  std::uint64_t seed = 1;
  bool force = false;

  // solve
  std::string solve_path;
  auto* solve = app.add_subcommand("solve", "Find an f-factor or certify that none exists");
  solve->add_option("instance", solve_path, "Instance file")->required();
  solve->add_option("--seed", seed, "Seed for the heuristic audit above the exact cap");

  // audit
  std::string audit_path;
  std::optional<int> exact_max_n;
  bool audit_exact = false;
  auto* audit = app.add_subcommand("audit", "Search for a pair (S,T) with negative deficiency");
  audit->add_option("instance", audit_path, "Instance file")->required();
  audit->add_option("--exact-max-n", exact_max_n, "Largest n searched exhaustively (default 15)");
  audit->add_flag("--exact", audit_exact, "Refuse to fall back to the heuristic search");
  audit->add_flag("--force", force, "Search exhaustively regardless of n");
  audit->add_option("--seed", seed, "Seed for the heuristic search");

  // invariants
  std::string inv_path;
  InvariantSelection which;
  auto* inv = app.add_subcommand("invariants", "Compute alpha, kappa, toughness and odd-toughness exactly");
  inv->add_option("instance", inv_path, "Instance file")->required();
  inv->add_flag("--alpha", which.alpha, "Stability number");
  inv->add_flag("--kappa", which.kappa, "Vertex connectivity");
  inv->add_flag("--toughness", which.toughness, "Toughness (n <= 20 unless --force)");
  inv->add_flag("--odd-toughness", which.odd_toughness, "Odd-toughness (n <= 20 unless --force)");
  inv->add_flag("--force", force, "Lift the toughness and brute-force caps");

  // verify-theorem
  std::string theorem_name_arg;
  std::string theorem_path;
  TheoremParams tparams;
  bool confirm = false;
  auto* verify = app.add_subcommand("verify-theorem", "Check the hypotheses of a theorem on an instance");
  verify->add_option("name", theorem_name_arg, "main | corollary-kappa | kt | nishimura | kl | cai | cai-conjecture")
      ->required();
  verify->add_option("instance", theorem_path, "Instance file")->required();
  verify->add_option("--a", tparams.a, "Lower bound a");
  verify->add_option("--b", tparams.b, "Upper bound b");
  verify->add_option("--r", tparams.r, "Regularity r (nishimura)");
  verify->add_option("--n", tparams.star_n, "Forbidden star K_{1,n} (cai)");
  verify->add_flag("--confirm", confirm, "Run the solver when the hypotheses are met");
  verify->add_flag("--force", force, "Lift the toughness and brute-force caps");
  verify->add_option("--seed", seed, "Seed for the audit run on refutation");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  std::string instance_out;
  int ga = 1, gb = 3, gk = 1, gdelta = 12, gp = 2, gr = 2, galpha = 2;
  bool preset = false;
  auto* g0 = gen->add_subcommand("g0", "Cai-conjecture counterexample family");
  g0->add_option("--a", ga);
  g0->add_option("--b", gb);
  g0->add_option("--k", gk);
  g0->add_option("--delta", gdelta);
  g0->add_option("--p", gp);
  g0->add_flag("--preset", preset, "Choose delta and p in the asymptotic regime");
  auto* g1 = gen->add_subcommand("g1", "Tightness family");
  g1->add_option("--a", ga);
  g1->add_option("--b", gb);
  g1->add_option("--r", gr);
  g1->add_option("--delta", gdelta);
  g1->add_option("--alpha", galpha);
  int rn = 10;
  double rp = 0.5;
  int ra = 1, rb = 2;
  bool rconnected = false;
  auto* grandom = gen->add_subcommand("random", "Seeded random instance");
  grandom->add_option("--n", rn);
  grandom->add_option("--p", rp);
  grandom->add_option("--a", ra);
  grandom->add_option("--b", rb);
  grandom->add_option("--seed", seed);
  grandom->add_flag("--connected", rconnected);
  for (CLI::App* sub : {g0, g1, grandom}) {
    sub->add_option("-o,--instance-out", instance_out, "Also write the instance file here");
  }

  // fuzz
  std::string fuzz_theorem;
  std::size_t trials = 100;
  std::string family = "random";
  CampaignParams cparams;
  std::vector<std::string> ab_args;
  auto* fuzz = app.add_subcommand("fuzz", "Run a seeded validation campaign");
  fuzz->add_option("theorem", fuzz_theorem)->required();
  fuzz->add_option("--trials", trials);
  fuzz->add_option("--seed", seed);
  fuzz->add_option("--family", family, "random | g0")->check(CLI::IsMember({"random", "g0"}));
  fuzz->add_option("--n-min", cparams.n_min);
  fuzz->add_option("--n-max", cparams.n_max);
  fuzz->add_option("--p-min", cparams.p_min);
  fuzz->add_option("--p-max", cparams.p_max);
  fuzz->add_option("--ab", ab_args, "Pair a,b (repeatable)");
  fuzz->add_option("--r", cparams.r);
  fuzz->add_option("--star-n", cparams.star_n);
  fuzz->add_option("--delta-max", cparams.g0_delta_max);
  fuzz->add_option("--g0-p-max", cparams.g0_p_max);

  // recheck
  std::string recheck_path;
  auto* rc = app.add_subcommand("recheck", "Re-verify every certificate in a report");
  rc->add_option("report", recheck_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    limits = Limits::from_environment();
    if (force && *audit) {
      limits.exact_audit_max_n = Limits::unlimited().exact_audit_max_n;
    } else if (force) {
      // The 3^n audit stays capped: a refutation falls back to the structured search.
      limits.toughness_max_n = Limits::unlimited().toughness_max_n;
      limits.brute_max_m = Limits::unlimited().brute_max_m;
    }

    if (*solve) {
      AuditOptions opt;
      opt.limits = limits;
      opt.seed = seed;
      return output.emit(solve_report(load_instance(solve_path), opt), start);
    }
    if (*audit) {
      AuditOptions opt;
      opt.limits = limits;
      if (exact_max_n) opt.limits.exact_audit_max_n = *exact_max_n;
      opt.mode = audit_exact || force ? AuditMode::exact : AuditMode::automatic;
      opt.seed = seed;
      return output.emit(audit_report(load_instance(audit_path), opt), start);
    }
    if (*inv) return output.emit(invariants_report(load_instance(inv_path), which, limits), start);
    if (*verify) {
      CheckOptions opt;
      opt.confirm = confirm;
      opt.limits = limits;
      opt.audit_seed = seed;
      return output.emit(theorem_report(parse_theorem_id(theorem_name_arg), load_instance(theorem_path), tparams, opt),
                         start);
    }
    if (*gen) {
      ReportDocument doc;
      if (*g0) {
        doc = construction_report(preset ? g0_paper_preset(ga, gb, gk) : build_g0(ga, gb, gk, gdelta, gp));
      } else if (*g1) {
        doc = construction_report(build_g1(ga, gb, gr, gdelta, galpha));
      } else {
        const Graph g = rconnected ? random_connected_graph(rn, rp, derive_seed(seed, 1)) : random_graph(rn, rp, derive_seed(seed, 1));
        const DegreeSpec f = random_degree_spec(g, ra, rb, derive_seed(seed, 2));
        Json params{{"n", rn}, {"p", rp}, {"a", ra}, {"b", rb}, {"connected", rconnected}};
        doc = random_instance_report({g, f}, params, seed);
      }
      if (!instance_out.empty()) {
        write_file(instance_out, doc.json.at("instances").at(doc.json.at("instance").get<std::string>()).get<std::string>());
      }
      return output.emit(std::move(doc), start);
    }
    if (*fuzz) {
      cparams.family = family == "g0" ? CampaignFamily::g0_sweep : CampaignFamily::random;
      if (!ab_args.empty()) {
        cparams.ab.clear();
        for (const std::string& s : ab_args) cparams.ab.push_back(parse_ab(s));
      }
      cparams.limits = limits;
      return output.emit(campaign_report(empirical_validate(parse_theorem_id(fuzz_theorem), cparams, trials, seed)),
                         start);
    }
    if (*rc) {
      const RecheckResult r = recheck(Json::parse(read_file(recheck_path)));
      for (const std::string& failure : r.failures) std::cout << "FAIL " << failure << "\n";
      std::cout << r.checked << " certificate(s) verified, " << r.failures.size() << " failure(s)\n";
      return r.ok() ? kExitOk : kExitNegative;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
