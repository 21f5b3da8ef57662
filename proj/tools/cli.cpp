#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "tilebench/constructions.hpp"
#include "tilebench/extremal.hpp"
#include "tilebench/graph.hpp"
#include "tilebench/patterns.hpp"
#include "tilebench/serialize.hpp"
#include "tilebench/simplex.hpp"
#include "tilebench/tiling.hpp"

namespace tilebench::cli {

namespace {

using nlohmann::json;

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

SmallGraph load_graph(const std::string& path, std::istream& in) {
  if (path == "-") return read_edge_list(in);
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open graph file '" + path + "'");
  return read_edge_list(file);
}

// Writes to `path` atomically, or to stdout when no path is given.
void emit(Io& io, const std::string& path, const std::string& text) {
  if (path.empty())
    io.out << text;
  else
    write_file_atomic(path, text);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string pad(const std::string& s, std::size_t width) { return s.size() >= width ? s : s + std::string(width - s.size(), ' '); }

struct ConstructionFlags {
  std::string kind = "gnib";
  int i = 1;
  std::vector<int> sizes{3, 3};
  long n = 0;
  std::string beta;

  ConstructionSpec spec() const {
    ConstructionSpec s;
    if (kind == "bipartite")
      s.kind = ConstructionKind::BipartiteLower;
    else if (kind == "gnib")
      s.kind = ConstructionKind::GNIB;
    else
      throw std::invalid_argument("--kind must be 'bipartite' or 'gnib'");
    s.i = i;
    s.sizes = sizes;
    s.n = n;
    s.beta = parse_rational(beta);
    validate(s);
    return s;
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--kind", kind, "bipartite | gnib")->capture_default_str();
    cmd->add_option("--i", i, "Planted intersection size (gnib)")->capture_default_str();
    cmd->add_option("--sizes", sizes, "Part sizes s1,...,sr (gnib)")->delimiter(',')->capture_default_str();
    cmd->add_option("--n", n, "Number of vertices")->required();
    cmd->add_option("--beta", beta, "beta as p/q")->required();
  }
};

const char* status_name(BoundStatus s) {
  return s == BoundStatus::Holds ? "holds" : s == BoundStatus::Fails ? "fails" : "inconclusive";
}

int cmd_xi(Io& io, const std::string& beta_text, bool as_json) {
  const Rational beta = parse_rational(beta_text);
  const Rational v = xi(beta);
  if (as_json)
    io.out << json{{"schema_version", kSchemaVersion}, {"beta", to_string(beta)}, {"xi", to_string(v)}}.dump() << "\n";
  else
    io.out << "xi(" << to_string(beta) << ") = " << to_string(v) << " = " << to_decimal(v) << "\n";
  return kOk;
}

int cmd_xi_blowup(Io& io, int t, const std::string& beta_text, bool as_json) {
  const Rational beta = parse_rational(beta_text);
  const Rational v = xi_blowup(t, beta);
  if (as_json)
    io.out << json{{"schema_version", kSchemaVersion}, {"t", t}, {"beta", to_string(beta)}, {"xi", to_string(v)}}.dump()
           << "\n";
  else
    io.out << "xi_" << t << "(" << to_string(beta) << ") = " << to_string(v) << " = " << to_decimal(v) << "\n";
  return kOk;
}

int cmd_psi_star(Io& io, const std::string& alpha_text, bool as_json) {
  const Rational alpha = parse_rational(alpha_text);
  const auto r = psi_star(alpha);
  json y = json::array();
  for (const auto& c : r.argmax.y) y.push_back(to_string(c));
  if (as_json) {
    io.out << json{{"schema_version", kSchemaVersion},
                   {"alpha", to_string(alpha)},
                   {"psi_star", to_string(r.value)},
                   {"decimal", to_decimal(r.value)},
                   {"argmax", y}}
                  .dump()
           << "\n";
  } else {
    io.out << "psi*(" << to_string(alpha) << ") = " << to_string(r.value) << " = " << to_decimal(r.value) << "\n"
           << "argmax y = (" << to_string(r.argmax.y[0]) << ", " << to_string(r.argmax.y[1]) << ", "
           << to_string(r.argmax.y[2]) << ", " << to_string(r.argmax.y[3]) << ")\n";
  }
  return kOk;
}

int cmd_check_prop_opt(Io& io, int grid, bool as_json) {
  if (grid < 1) throw std::invalid_argument("--grid must be positive");
  json rows = json::array();
  bool all = true;
  if (!as_json) io.out << pad("alpha", 10) << pad("psi*", 16) << pad("xi", 16) << "match\n";
  for (int j = 0; j <= grid; ++j) {
    const Rational alpha = ratio(j, 6L * grid);
    const Rational p = psi_star(alpha).value;
    const Rational x = xi(alpha);
    const bool ok = p == x;
    all = all && ok;
    if (as_json)
      rows.push_back({{"alpha", to_string(alpha)}, {"psi_star", to_string(p)}, {"xi", to_string(x)}, {"match", ok}});
    else
      io.out << pad(to_string(alpha), 10) << pad(to_string(p), 16) << pad(to_string(x), 16) << (ok ? "PASS" : "FAIL") << "\n";
  }
  if (as_json)
    io.out << dump({{"schema_version", kSchemaVersion}, {"grid", grid}, {"rows", rows}, {"verdict", all ? "pass" : "fail"}});
  else
    io.out << (all ? "all " : "NOT all ") << grid + 1 << " grid points agree\n";
  return all ? kOk : kVerificationFailed;
}

Pattern pattern_from_flags(Io& io, const std::string& name, const std::string& file) {
  if (!file.empty()) return Pattern::custom(load_graph(file, io.in), file);
  return parse_pattern(name);
}

int cmd_nu(Io& io, const std::string& graph, const std::string& pattern, const std::string& pattern_file,
           std::uint64_t budget, const std::string& witness, bool as_json) {
  const SmallGraph g = load_graph(graph, io.in);
  const Pattern f = pattern_from_flags(io, pattern, pattern_file);
  const auto r = max_tiling(f, g, budget);
  if (!witness.empty()) write_file_atomic(witness, dump(to_json(r.witness)));
  if (as_json)
    io.out << dump({{"schema_version", kSchemaVersion},
                    {"pattern", f.name()},
                    {"n", g.order()},
                    {"nu", r.nu},
                    {"exact", r.exact},
                    {"nodes", r.nodes},
                    {"witness", to_json(r.witness)}});
  else
    io.out << "nu(" << f.name() << ", G) " << (r.exact ? "= " : ">= ") << r.nu << (r.exact ? " (exact)" : " (budget exhausted)")
           << "\n";
  return r.exact ? kOk : kInconclusive;
}

int cmd_mixed_cover(Io& io, const std::string& graph, const std::vector<std::string>& family_names,
                    std::optional<int> target, std::uint64_t budget, bool as_json) {
  const SmallGraph g = load_graph(graph, io.in);
  std::vector<Pattern> families;
  for (const auto& name : family_names) families.push_back(parse_pattern(name));
  const auto r = max_mixed_cover(families, g, target, budget);
  if (as_json) {
    json j = {{"schema_version", kSchemaVersion}, {"n", g.order()}, {"coverage", r.coverage},
              {"exact", r.exact},                 {"nodes", r.nodes},  {"witness", to_json(r.witness)}};
    if (target) {
      j["target"] = *target;
      j["reached_target"] = r.reached_target;
    }
    io.out << dump(j);
  } else {
    io.out << "coverage " << r.coverage << " of " << g.order() << (r.exact ? "" : " (budget exhausted)");
    if (target) io.out << (r.reached_target ? ", target reached" : ", target not reached");
    io.out << "\n";
    for (const auto& m : r.witness.members) {
      io.out << "  " << m.pattern.name();
      for (Vertex v : m.map) io.out << ' ' << v;
      io.out << "\n";
    }
  }
  return r.exact ? kOk : kInconclusive;
}

int cmd_construct(Io& io, const ConstructionFlags& flags, const std::string& out_path) {
  const auto spec = flags.spec();
  const SmallGraph g = build_construction(spec);
  std::ostringstream text;
  text << "# " << describe(spec) << "\n";
  write_edge_list(text, g);
  emit(io, out_path, text.str());
  return kOk;
}

int cmd_verify_construction(Io& io, const ConstructionFlags& flags, std::uint64_t budget, bool as_json) {
  const auto spec = flags.spec();
  const auto v = verify_construction_matching(spec, budget);
  if (as_json)
    io.out << dump(to_json(spec, v));
  else
    io.out << describe(spec) << ": nu = " << v.nu << (v.solve.exact ? "" : " (lower bound)") << ", beta n = " << to_string(v.beta_n)
           << ", nu < beta n " << status_name(v.status) << "\n";
  if (v.status == BoundStatus::Inconclusive) return kInconclusive;
  return v.status == BoundStatus::Holds ? kOk : kVerificationFailed;
}

int cmd_refutation_demo(Io& io, std::uint64_t budget, const std::string& out_path, bool as_json) {
  json scenarios = json::array();
  bool all = true, inconclusive = false;
  std::ostringstream table;
  for (const auto& s : refutation_scenarios()) {
    const auto v = verify_construction_matching(s.spec, budget);
    const bool as_expected = v.status == (s.expect_holds ? BoundStatus::Holds : BoundStatus::Fails);
    inconclusive = inconclusive || v.status == BoundStatus::Inconclusive;
    all = all && as_expected;
    auto j = to_json(s.spec, v);
    j.erase("schema_version");
    j["name"] = s.name;
    j["expected"] = s.expect_holds ? "holds" : "fails";
    j["as_expected"] = as_expected;
    scenarios.push_back(j);
    table << pad(s.name, 18) << pad(describe(s.spec), 44) << "nu=" << pad(std::to_string(v.nu), 4)
          << "beta_n=" << pad(to_string(v.beta_n), 6) << pad(status_name(v.status), 14) << (as_expected ? "PASS" : "FAIL")
          << "\n";
  }
  const json report = {{"schema_version", kSchemaVersion}, {"scenarios", scenarios}, {"verdict", all ? "pass" : "fail"}};
  if (!out_path.empty()) write_file_atomic(out_path, dump(report));
  if (as_json)
    io.out << dump(report);
  else
    io.out << table.str();
  if (inconclusive) return kInconclusive;
  return all ? kOk : kVerificationFailed;
}

int cmd_verify_lemma(Io& io, const std::string& id_text, const std::string& mode, std::uint64_t count, std::uint64_t seed,
                     unsigned jobs, const std::string& out_path, bool as_json, bool quiet) {
  const LemmaId id = parse_lemma_id(id_text);
  VerifyOptions options;
  if (mode == "exhaustive")
    options.mode = VerifyMode::Exhaustive;
  else if (mode == "sampled")
    options.mode = VerifyMode::Sampled;
  else
    throw std::invalid_argument("--mode must be 'exhaustive' or 'sampled'");
  if (options.mode == VerifyMode::Exhaustive && id != LemmaId::L51)
    throw std::invalid_argument("exhaustive mode is only available for L51");
  if (jobs < 1) throw std::invalid_argument("--jobs must be positive");
  options.count = count;
  options.seed = seed;
  options.jobs = jobs;
  auto last = std::chrono::steady_clock::now();
  if (!quiet)
    options.progress = [&](std::uint64_t done, std::uint64_t total) {
      const auto now = std::chrono::steady_clock::now();
      if (done == total || now - last > std::chrono::seconds(2)) {
        last = now;
        io.err << "\r" << id_text << ": " << done << " / " << total << std::flush;
        if (done == total) io.err << "\n";
      }
    };
  const auto report = verify_lemma(id, options);
  const auto j = to_json(report);
  if (!out_path.empty()) write_file_atomic(out_path, dump(j));
  if (as_json) {
    io.out << dump(j);
  } else {
    io.out << report.lemma << " " << (report.mode == VerifyMode::Exhaustive ? "exhaustive" : "sampled") << ": "
           << report.checked << " configurations with " << report.boundary_edges << " cross edges over "
           << report.l_configs.size() << " L-configurations, " << report.failure_count << " counterexamples, "
           << report.elapsed_ms << " ms\n";
    for (const auto& f : report.failures)
      io.out << "  counterexample bip=" << bip_hex(f.bip) << " L_i=" << format_label_mask(f.L_i)
             << " L_j=" << format_label_mask(f.L_j) << "\n";
  }
  return report.passed() ? kOk : kVerificationFailed;
}

int cmd_verify_embeddings(Io& io, int t_max, std::uint64_t budget, bool as_json) {
  json rows = json::array();
  bool all = true, inconclusive = false;
  auto row = [&](const std::string& what, const std::string& expected, const std::string& got, bool ok) {
    all = all && ok;
    if (as_json)
      rows.push_back({{"check", what}, {"expected", expected}, {"got", got}, {"ok", ok}});
    else
      io.out << pad(what, 40) << pad("expected " + expected, 16) << pad("got " + got, 12) << (ok ? "PASS" : "FAIL") << "\n";
  };
  const SmallGraph k2_6 = blowup(Pattern::K2().graph(), 6);
  const SmallGraph hhat_6 = blowup(Pattern::Hhat().graph(), 6);
  const Tiling k2_tiling = k2_blowup_tiling();
  row("K2[6] stored tiling", "2", std::to_string(k2_tiling.size()), k2_tiling.size() == 2 && is_valid_tiling(k2_tiling, k2_6));
  const Tiling hhat_tiling = hhat_blowup_tiling(6);
  row("Hhat[6] schedule tiling", "7", std::to_string(hhat_tiling.size()),
      hhat_tiling.size() == 7 && is_valid_tiling(hhat_tiling, hhat_6));
  for (const auto& [name, g, expected] : {std::tuple{"nu(H, K2[6]) solver", &k2_6, 2}, std::tuple{"nu(H, Hhat[6]) solver", &hhat_6, 7}}) {
    const auto r = max_tiling(Pattern::H(), *g, budget);
    inconclusive = inconclusive || !r.exact;
    row(name, std::to_string(expected), std::to_string(r.nu) + (r.exact ? "" : "?"),
        r.exact && r.nu == expected && is_valid_tiling(r.witness, *g));
  }
  for (int t = 1; t <= 9; ++t) {
    const auto g = blowup(Pattern::K2().graph(), t);
    const auto r = max_tiling(Pattern::H(), g, budget);
    inconclusive = inconclusive || !r.exact;
    row("nu(H, K2[" + std::to_string(t) + "])", std::to_string(t / 3), std::to_string(r.nu) + (r.exact ? "" : "?"),
        r.exact && r.nu == t / 3);
  }
  for (int t = 1; t <= t_max; ++t) {
    const auto tiling = hhat_blowup_tiling(t);
    const int expected = t / 2 + 4 * (t / 6);
    row("Hhat[" + std::to_string(t) + "] schedule", std::to_string(expected), std::to_string(tiling.size()),
        static_cast<int>(tiling.size()) == expected && is_valid_tiling(tiling, blowup(Pattern::Hhat().graph(), t)));
  }
  if (as_json) io.out << dump({{"schema_version", kSchemaVersion}, {"checks", rows}, {"verdict", all ? "pass" : "fail"}});
  if (inconclusive) return kInconclusive;
  return all ? kOk : kVerificationFailed;
}

int cmd_fixtures(Io& io, bool as_json) {
  const auto report = verify_figure_fixtures();
  if (as_json) {
    io.out << dump(to_json(report));
  } else {
    for (const auto& f : report.fixtures)
      io.out << pad(f.key, 30) << "cover " << pad(std::to_string(f.coverage), 4) << (f.valid ? "valid " : "INVALID ")
             << (f.extendable ? "extendable" : "NOT extendable") << (f.error.empty() ? "" : "  " + f.error) << "\n";
    io.out << pad(report.control.key, 30) << (report.control.valid ? "control unexpectedly valid" : "control rejected: " + report.control.error)
           << "\n";
  }
  return report.passed() ? kOk : kVerificationFailed;
}

int cmd_curve(Io& io, const std::string& from_text, const std::string& to_text, int steps, const std::string& out_path) {
  const Rational from = parse_rational(from_text), to = parse_rational(to_text);
  if (from < 0 || to > ratio(1, 6) || from >= to) throw std::invalid_argument("curve needs 0 <= from < to <= 1/6");
  if (steps < 1) throw std::invalid_argument("--steps must be positive");
  std::ostringstream csv;
  csv << "beta,xi,xi_exact,beta_exact\n";
  for (int k = 0; k <= steps; ++k) {
    Rational beta = from + (to - from) * k / steps;
    beta.canonicalize();
    const Rational v = xi(beta);
    csv << to_decimal(beta) << ',' << to_decimal(v) << ',' << to_string(v) << ',' << to_string(beta) << "\n";
  }
  emit(io, out_path, csv.str());
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Exact tiling solvers, extremal constructions and lemma verification for H-tilings", "tilebench"};
  app.require_subcommand(1);
  bool as_json = false;
  std::function<int()> action;

  std::string beta, alpha;
  auto* xi_cmd = app.add_subcommand("xi", "Evaluate Xi(beta)");
  xi_cmd->add_option("--beta", beta, "beta as p/q in [0, 1/6]")->required();
  xi_cmd->add_flag("--json", as_json);
  xi_cmd->callback([&] { action = [&] { return cmd_xi(io, beta, as_json); }; });

  int t = 1;
  auto* xib_cmd = app.add_subcommand("xi-blowup", "Evaluate max{3tb(1-3tb), 18t^2b^2}");
  xib_cmd->add_option("--t", t, "Blowup factor")->required();
  xib_cmd->add_option("--beta", beta, "beta as p/q in [0, 1/(6t)]")->required();
  xib_cmd->add_flag("--json", as_json);
  xib_cmd->callback([&] { action = [&] { return cmd_xi_blowup(io, t, beta, as_json); }; });

  auto* psi_cmd = app.add_subcommand("psi-star", "Exact maximum of Psi_alpha over the simplex");
  psi_cmd->add_option("--alpha", alpha, "alpha as p/q in [0, 1/6]")->required();
  psi_cmd->add_flag("--json", as_json);
  psi_cmd->callback([&] { action = [&] { return cmd_psi_star(io, alpha, as_json); }; });

  int grid = 30;
  auto* prop_cmd = app.add_subcommand("check-prop-opt", "Check psi*(alpha) = Xi(alpha) for alpha = j/(6k), j = 0..k");
  prop_cmd->add_option("--grid", grid, "k")->capture_default_str();
  prop_cmd->add_flag("--json", as_json);
  prop_cmd->callback([&] { action = [&] { return cmd_check_prop_opt(io, grid, as_json); }; });

  std::string graph, pattern = "H", pattern_file, witness;
  std::uint64_t budget = kDefaultNodeBudget;
  auto* nu_cmd = app.add_subcommand("nu", "Maximum F-tiling of a graph");
  nu_cmd->add_option("--graph", graph, "Edge-list file, or - for stdin")->required();
  nu_cmd->add_option("--pattern", pattern, "H, Hhat, K2 or K{s,t}")->capture_default_str();
  nu_cmd->add_option("--pattern-file", pattern_file, "Custom pattern as an edge list");
  nu_cmd->add_option("--budget", budget, "Search node budget")->capture_default_str();
  nu_cmd->add_option("--witness", witness, "Write the witness tiling as JSON");
  nu_cmd->add_flag("--json", as_json);
  nu_cmd->callback([&] { action = [&] { return cmd_nu(io, graph, pattern, pattern_file, budget, witness, as_json); }; });

  std::vector<std::string> families{"K2", "H", "Hhat"};
  std::optional<int> target;
  auto* mixed_cmd = app.add_subcommand("mixed-cover", "Maximum vertex cover by disjoint copies from several families");
  mixed_cmd->add_option("--graph", graph, "Edge-list file, or - for stdin")->required();
  mixed_cmd->add_option("--families", families, "Comma-separated patterns")->delimiter(',')->capture_default_str();
  mixed_cmd->add_option("--target", target, "Stop at the first cover of at least this many vertices");
  mixed_cmd->add_option("--budget", budget, "Search node budget")->capture_default_str();
  mixed_cmd->add_flag("--json", as_json);
  mixed_cmd->callback([&] { action = [&] { return cmd_mixed_cover(io, graph, families, target, budget, as_json); }; });

  ConstructionFlags cflags;
  std::string out_path;
  auto* construct_cmd = app.add_subcommand("construct", "Emit an extremal construction as an edge list");
  cflags.attach(construct_cmd);
  construct_cmd->add_option("--out", out_path, "Output file (default stdout)");
  construct_cmd->callback([&] { action = [&] { return cmd_construct(io, cflags, out_path); }; });

  auto* vc_cmd = app.add_subcommand("verify-construction", "Compare nu(H, G) with beta n for a construction");
  cflags.attach(vc_cmd);
  vc_cmd->add_option("--budget", budget, "Search node budget")->capture_default_str();
  vc_cmd->add_flag("--json", as_json);
  vc_cmd->callback([&] { action = [&] { return cmd_verify_construction(io, cflags, budget, as_json); }; });

  auto* demo_cmd = app.add_subcommand("refutation-demo", "The three fixed constructions and their matching bounds");
  demo_cmd->add_option("--budget", budget, "Search node budget")->capture_default_str();
  demo_cmd->add_option("--out", out_path, "Write the JSON verdict to this file");
  demo_cmd->add_flag("--json", as_json);
  demo_cmd->callback([&] { action = [&] { return cmd_refutation_demo(io, budget, out_path, as_json); }; });

  std::string lemma, mode = "sampled";
  std::uint64_t count = 100'000, seed = 42;
  unsigned jobs = 1;
  bool quiet = false;
  auto* lemma_cmd = app.add_subcommand("verify-lemma", "Check extendability of all boundary configurations of a lemma");
  lemma_cmd->add_option("--id", lemma, "L51, L52, L53, L54 or L55")->required();
  lemma_cmd->add_option("--mode", mode, "exhaustive | sampled")->capture_default_str();
  lemma_cmd->add_option("--count", count, "Samples per L-configuration")->capture_default_str();
  lemma_cmd->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  lemma_cmd->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  lemma_cmd->add_option("--out", out_path, "Write the JSON report to this file");
  lemma_cmd->add_flag("--quiet", quiet, "No progress on stderr");
  lemma_cmd->add_flag("--json", as_json);
  lemma_cmd->callback([&] {
    action = [&] { return cmd_verify_lemma(io, lemma, mode, count, seed, jobs, out_path, as_json, quiet); };
  });

  int t_max = 12;
  auto* emb_cmd = app.add_subcommand("verify-embeddings", "Check the explicit perfect H-tilings of blowups");
  emb_cmd->add_option("--t-max", t_max, "Largest Hhat blowup factor to check")->capture_default_str();
  emb_cmd->add_option("--budget", budget, "Search node budget")->capture_default_str();
  emb_cmd->add_flag("--json", as_json);
  emb_cmd->callback([&] { action = [&] { return cmd_verify_embeddings(io, t_max, budget, as_json); }; });

  auto* fix_cmd = app.add_subcommand("fixtures", "Validate the curated decomposition fixtures");
  fix_cmd->add_flag("--json", as_json);
  fix_cmd->callback([&] { action = [&] { return cmd_fixtures(io, as_json); }; });

  std::string from = "0", to = "1/6";
  int steps = 30;
  auto* curve_cmd = app.add_subcommand("curve", "Tabulate Xi(beta) as CSV");
  curve_cmd->add_option("--from", from, "Start of the beta range")->capture_default_str();
  curve_cmd->add_option("--to", to, "End of the beta range")->capture_default_str();
  curve_cmd->add_option("--steps", steps, "Number of intervals")->capture_default_str();
  curve_cmd->add_option("--out", out_path, "Output file (default stdout)");
  curve_cmd->callback([&] { action = [&] { return cmd_curve(io, from, to, steps, out_path); }; });

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

}  // namespace tilebench::cli
