#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "tilebench/graph.hpp"
#include "tilebench/serialize.hpp"

using namespace tilebench;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("tilebench_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("serialization round trips") {
  const Tiling t{{{Pattern::H(), {0, 1, 2, 3, 4, 5}}, {Pattern::K2(), {7, 9}}, {Pattern::complete_bipartite(2, 2), {10, 11, 12, 13}}}};
  const Tiling back = tiling_from_json(to_json(t));
  REQUIRE(back.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(back.members[i].pattern == t.members[i].pattern);
    CHECK(back.members[i].map == t.members[i].map);
  }
  CHECK_THROWS(tiling_from_json(json::parse(R"({"members":[{"pattern":"Q","vertices":[0,1]}]})")));
  const auto p = temp_path("atomic.txt");
  write_file_atomic(p, "hello\n");
  CHECK(slurp(p) == "hello\n");
  write_file_atomic(p, "again\n");
  CHECK(slurp(p) == "again\n");
  std::filesystem::remove(p);
}

TEST_CASE("cli xi and curve") {
  const auto xi = run({"xi", "--beta", "1/9", "--json"});
  CHECK(xi.code == cli::kOk);
  const auto j = json::parse(xi.out);
  CHECK(j["beta"] == "1/9");
  CHECK(j["xi"] == "2/9");
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(run({"xi", "--beta", "1/5"}).code == cli::kUsage);
  CHECK(run({"xi"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
  CHECK(json::parse(run({"xi-blowup", "--t", "2", "--beta", "1/12", "--json"}).out)["xi"] == "1/2");

  const auto csv_path = temp_path("xi.csv");
  CHECK(run({"curve", "--from", "0", "--to", "1/6", "--steps", "30", "--out", csv_path.string()}).code == cli::kOk);
  const std::string csv = slurp(csv_path);
  std::filesystem::remove(csv_path);
  CHECK(csv.rfind("beta,xi,xi_exact,beta_exact\n", 0) == 0);
  CHECK(csv.find("0.32,8/25,2/15\n") != std::string::npos);
  CHECK(csv.find(",2/9,1/9\n") != std::string::npos);
  CHECK(csv.find("0.166666666667,0.5,1/2,1/6\n") != std::string::npos);
  CHECK(run({"curve", "--from", "1/6", "--to", "0"}).code == cli::kUsage);
}

TEST_CASE("cli nu reads stdin and files") {
  const std::string k2_6 = format_edge_list(blowup(complete_graph(2), 6));
  const auto r = run({"nu", "--graph", "-", "--pattern", "H", "--json"}, k2_6);
  CHECK(r.code == cli::kOk);
  const auto j = json::parse(r.out);
  CHECK(j["nu"] == 2);
  CHECK(j["exact"] == true);
  CHECK(run({"nu", "--graph", "/nonexistent/file"}).code == cli::kUsage);
  CHECK(run({"nu", "--graph", "-"}, "3 1\n0 0\n").code == cli::kUsage);
  CHECK(run({"nu", "--graph", "-", "--pattern", "Q"}, k2_6).code == cli::kUsage);
  const auto starved = run({"nu", "--graph", "-", "--budget", "3"}, format_edge_list(blowup(complete_graph(3), 4)));
  CHECK(starved.code == cli::kInconclusive);

  const auto witness = temp_path("witness.json");
  CHECK(run({"nu", "--graph", "-", "--witness", witness.string()}, k2_6).code == cli::kOk);
  const Tiling t = tiling_from_json(json::parse(slurp(witness)));
  std::filesystem::remove(witness);
  CHECK(is_valid_tiling(t, blowup(complete_graph(2), 6)));
  CHECK(t.size() == 2);

  const auto mixed = run({"mixed-cover", "--graph", "-", "--target", "13", "--json"}, format_edge_list(complete_graph(13)));
  CHECK(mixed.code == cli::kOk);
  CHECK(json::parse(mixed.out)["reached_target"] == true);
}

TEST_CASE("cli construct round trip") {
  const std::vector<std::string> spec{"--kind", "gnib", "--i", "1", "--sizes", "3,3", "--n", "20", "--beta", "1/10"};
  std::vector<std::string> construct{"construct"};
  construct.insert(construct.end(), spec.begin(), spec.end());
  const auto g = run(construct);
  REQUIRE(g.code == cli::kOk);
  CHECK(parse_edge_list(g.out).size() == 85);
  const auto nu = json::parse(run({"nu", "--graph", "-", "--json"}, g.out).out);
  std::vector<std::string> verify{"verify-construction"};
  verify.insert(verify.end(), spec.begin(), spec.end());
  verify.push_back("--json");
  const auto v = run(verify);
  CHECK(v.code == cli::kVerificationFailed);
  CHECK(json::parse(v.out)["nu"] == nu["nu"]);
  CHECK(run({"verify-construction", "--kind", "gnib", "--i", "2", "--n", "24", "--beta", "1/8"}).code == cli::kOk);
  CHECK(run({"construct", "--kind", "tripartite", "--n", "20", "--beta", "1/10"}).code == cli::kUsage);
  CHECK(run({"construct", "--n", "20", "--beta", "1/4"}).code == cli::kUsage);
}

TEST_CASE("cli verification commands") {
  CHECK(run({"refutation-demo"}).code == cli::kOk);
  CHECK(run({"fixtures"}).code == cli::kOk);
  CHECK(run({"check-prop-opt", "--grid", "6"}).code == cli::kOk);
  CHECK(run({"verify-embeddings", "--t-max", "6"}).code == cli::kOk);

  const std::vector<std::string> lemma{"verify-lemma", "--id", "L55", "--count", "200", "--seed", "42", "--json", "--quiet"};
  const auto a = run(lemma), b = run(lemma);
  CHECK(a.code == cli::kOk);
  auto ja = json::parse(a.out), jb = json::parse(b.out);
  CHECK(ja["checked"] == 200);
  CHECK(ja["seed"] == 42);
  CHECK(ja["verdict"] == "pass");
  ja.erase("elapsed_ms");
  jb.erase("elapsed_ms");
  CHECK(ja.dump() == jb.dump());
  CHECK(run({"verify-lemma", "--id", "L55", "--mode", "exhaustive"}).code == cli::kUsage);
  CHECK(run({"verify-lemma", "--id", "L57"}).code == cli::kUsage);
  CHECK(run({"verify-lemma", "--id", "L55", "--jobs", "0"}).code == cli::kUsage);
}
