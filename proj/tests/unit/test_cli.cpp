#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "broomrec/broom.hpp"
#include "broomrec/canonical.hpp"
#include "broomrec/cli.hpp"
#include "broomrec/deck.hpp"
#include "broomrec/graph_io.hpp"

using namespace broomrec;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("deck json output") {
  const CliResult r = cli({"deck", "--spec", "B(1,1,2P4)", "--format", "json"});
  REQUIRE(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["total"] == 8);
  CHECK(j["classes"].size() == 3);
  CHECK(j["spec"] == "B(1,1,2P4)");
  // the emitted deck re-imports to the in-memory one
  CHECK(deck_from_json(j) == da_edeck(build(parse_spec("B(1,1,2P4)"))));
}

TEST_CASE("deck output is byte-stable") {
  const CliResult a = cli({"deck", "--spec", "B(1,1,2P4)"});
  const CliResult b = cli({"deck", "--spec", "B(1,1,2P4)"});
  CHECK(a.out == b.out);
}

TEST_CASE("deck rejects an invalid spec with exit 2") {
  const CliResult r = cli({"deck", "--spec", "B(1,1,2P2)"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("deck csv has one row per class") {
  const CliResult r = cli({"deck", "--spec", "B(3,3,2P3)", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(count_lines(r.out) == 3);  // header + 2 classes
  CHECK(r.out.substr(0, r.out.find('\n')) == "label,d,mult,card_graph6");
}

TEST_CASE("deck dot and graph6 formats") {
  const CliResult dot = cli({"deck", "--spec", "B(1,1,2P4)", "--format", "dot"});
  REQUIRE(dot.code == 0);
  CHECK(dot.out.find("graph card0 {") != std::string::npos);
  CHECK(dot.out.find("mult=") != std::string::npos);

  const CliResult g6 = cli({"deck", "--spec", "B(1,1,2P4)", "--format", "graph6"});
  REQUIRE(g6.code == 0);
  CHECK(count_lines(g6.out) == 3);
  const std::string first = g6.out.substr(0, g6.out.find('\n'));
  CHECK(graph_from_graph6(first).vertex_count() == 8);
}

TEST_CASE("compute adern with both methods agrees on B(1,1,2P4)") {
  const CliResult r = cli({"compute", "adern", "--spec", "B(1,1,2P4)", "--method", "both"});
  REQUIRE(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["adern"] == 5);
  CHECK(j["brute"] == 5);
  CHECK(j["formula"]["value"] == 5);
  CHECK(j["agree"] == true);
  CHECK(j["bad_max"]["total"] == 4);  // adern = |bad_max| + 1
}

TEST_CASE("compute dern by formula only") {
  const CliResult r = cli({"compute", "dern", "--spec", "B(3,3,3P4)", "--method", "formula"});
  REQUIRE(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["formula"]["value"] == 1);
  CHECK_FALSE(j.contains("brute"));
}

TEST_CASE("compute adern by formula outside the family exits 2") {
  const CliResult r = cli({"compute", "adern", "--spec", "B(1,2,2P4)", "--method", "formula"});
  CHECK(r.code == 2);
  CHECK(r.err.find("unsupported") != std::string::npos);
}

TEST_CASE("compute with a hopeless budget exits 3") {
  const CliResult r = cli({"compute", "adern", "--spec", "B(2,2,2P5)", "--method", "brute",
                           "--budget", "0.0000001"});
  CHECK(r.code == 3);
  CHECK(r.err.find("inconclusive") != std::string::npos);
}

TEST_CASE("compute --no-timing zeroes the elapsed field") {
  const CliResult r = cli({"compute", "dern", "--spec", "B(1,1,2P4)", "--no-timing"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["elapsed_ms"] == 0);
}

TEST_CASE("witness emits the four-card counterexample") {
  const CliResult r = cli({"witness", "--spec", "B(1,1,2P4)", "--collection", "L:2,K:2"});
  REQUIRE(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j["determines"] == false);
  const Graph h = graph_from_json(j["witness"]);
  CHECK(h.vertex_count() == 8);
  CHECK(h.edge_count() == 8);
  CHECK_FALSE(is_isomorphic(h, build(parse_spec("B(1,1,2P4)"))));
  CHECK(j["shared"].size() == 2);
}

TEST_CASE("witness reports determines for the full deck") {
  const CliResult r = cli({"witness", "--spec", "B(1,1,2P4)", "--collection", "L:2,K:4,M2:2"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["determines"] == true);
}

TEST_CASE("witness for two leaf cards of B(2,2,2P5)") {
  const CliResult r = cli({"witness", "--spec", "B(2,2,2P5)", "--collection", "L:2"});
  REQUIRE(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["determines"] == false);
  CHECK(j.contains("witness"));
}

TEST_CASE("witness rejects collections outside the deck") {
  CHECK(cli({"witness", "--spec", "B(1,1,2P4)", "--collection", "L:3"}).code == 2);
  CHECK(cli({"witness", "--spec", "B(1,1,2P4)", "--collection", "Q:1"}).code == 2);
}

TEST_CASE("witness output is byte-stable") {
  const std::vector<std::string> args = {"witness", "--spec", "B(2,2,2P5)", "--collection",
                                         "L:2"};
  CHECK(cli(args).out == cli(args).out);
}

TEST_CASE("witness dot output") {
  const CliResult r =
      cli({"witness", "--spec", "B(1,1,2P4)", "--collection", "L:2,K:2", "--format", "dot"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("graph witness {") != std::string::npos);
}

TEST_CASE("verify on a small equal-leaf grid exits 0") {
  std::ostringstream out, err;
  SweepConfig config;
  config.family = SweepConfig::Family::MPk;
  config.n1 = {1, 2};
  config.m = {2, 3};
  config.k = {3, 4};
  config.timing = false;
  const int code = verify_sweep(config, "csv", out, err);
  CHECK(code == 0);
  const std::string csv = out.str();
  CHECK(count_lines(csv) == 9);  // header + 8 rows
  CHECK(csv.find(",no,") == std::string::npos);
  CHECK(csv.substr(0, csv.find('\n')) ==
        "spec,dern_brute,dern_formula,adern_brute,adern_formula,agree,elapsed_ms");
}

TEST_CASE("verify flags a corrupted formula with exit 1") {
  std::ostringstream out, err;
  SweepConfig config;
  config.family = SweepConfig::Family::MPk;
  config.n1 = {1, 1};
  config.m = {2, 2};
  config.k = {4, 4};
  config.timing = false;
  VerifyDeps deps = VerifyDeps::real();
  deps.dern = [](const BroomSpec& s) {
    Prediction p = dern_formula(s);
    p.value = 3 - p.value;  // deliberately wrong
    return p;
  };
  CHECK(verify_sweep(config, "csv", out, err, deps) == 1);
  CHECK(out.str().find(",no,") != std::string::npos);
}

TEST_CASE("verify sweep row for B(1,1,2P4) shows adern 5/5") {
  std::ostringstream out, err;
  SweepConfig config;
  config.family = SweepConfig::Family::TwoPk;
  config.n1 = {1, 1};
  config.k = {4, 4};
  config.timing = false;
  CHECK(verify_sweep(config, "csv", out, err) == 0);
  CHECK(out.str().find("\"B(1,1,2P4)\",2,2,5,5,yes,0") != std::string::npos);
}

TEST_CASE("verify defaults to csv output") {
  const CliResult r =
      cli({"verify", "--family", "2pk", "--n1", "1..1", "--k", "3..3", "--no-timing"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("spec,dern_brute,", 0) == 0);
}

TEST_CASE("verify via the command line in json") {
  const CliResult r = cli({"verify", "--family", "2pk", "--n1", "2..3", "--k", "3..3",
                           "--format", "json", "--no-timing"});
  REQUIRE(r.code == 0);
  const nlohmann::json rows = nlohmann::json::parse(r.out);
  CHECK(rows.size() == 2);
  for (const auto& row : rows) CHECK(row["agree"] == "yes");
}

TEST_CASE("verify skips invalid grid points with a note") {
  const CliResult r = cli({"verify", "--family", "mpk", "--n1", "2..2", "--m", "2..2", "--k",
                           "2..3", "--no-timing"});
  REQUIRE(r.code == 0);
  CHECK(r.err.find("skip") != std::string::npos);  // B(2,2,2P2) is not simple
  CHECK(r.out.find("B(2,2,2P3)") != std::string::npos);
}

TEST_CASE("verify the two-length family including hub-to-hub edges") {
  const CliResult r = cli({"verify", "--family", "multi", "--n1", "1..2", "--n2", "1..2", "--k",
                           "2..4", "--no-timing"});
  REQUIRE(r.code == 0);  // every Exact prediction matches brute force
}

TEST_CASE("verify rejects bad configs with exit 2") {
  CHECK(cli({"verify", "--family", "nope", "--n1", "1..2", "--k", "3..4"}).code == 2);
  CHECK(cli({"verify", "--family", "2pk"}).code == 2);
  CHECK(cli({"verify", "--family", "2pk", "--n1", "2..1", "--k", "3..4"}).code == 2);
}

TEST_CASE("unknown flags and missing subcommands exit 2") {
  CHECK(cli({"deck"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"deck", "--spec", "B(1,1,2P4)", "--format", "yaml"}).code == 2);
}

TEST_CASE("fuzz command runs clean") {
  const CliResult r = cli({"fuzz", "--seed", "42", "--trials", "200", "--max-n", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("selfcheck passed") != std::string::npos);
}
