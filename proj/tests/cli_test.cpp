#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + std::string(LOGTEV_CLI_PATH) + " " + args +
                    " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    res.output.append(buf, got);
  }
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("cli_test_") + name + ".json";
  std::ofstream out(path);
  out << content;
  return path;
}

const char* kX111 =
    R"({"target": "xrsa", "r": 1, "s": 1, "a": 1, "b": 1, "c": 2,
        "mu": [[1], [1], [1], [2]]})";

const char* kExcess =
    R"({"target": "blp2", "d": 6,
        "mu": [[1], [1], [1, 1, 1, 1], [5], [5]]})";

}  // namespace

TEST_CASE("xrsa subcommand emits a full JSON report") {
  std::string path = write_temp("x111", kX111);
  RunResult res = run("--format json xrsa " + path);
  REQUIRE(res.exit_code == 0);
  json doc = json::parse(res.output);
  CHECK(doc["status"] == "CERTIFIED");
  CHECK(doc["integral"] == "2");
  CHECK(doc["closed_value"] == "2");
  CHECK(doc["logtev"] == "2");
  CHECK(doc["n"] == 3);
  CHECK(doc["k0"] == 1);
  CHECK(doc["gamma"]["target"] == "xrsa");
  CHECK(doc["gamma"]["c"] == 2);
  CHECK(doc["inequalities"].size() == 3);
  std::remove(path.c_str());
}

TEST_CASE("blp2 subcommand with and without the excess correction") {
  std::string path = write_temp("excess", kExcess);

  RunResult plain = run("--format json blp2 " + path);
  REQUIRE(plain.exit_code == 0);
  json doc = json::parse(plain.output);
  CHECK(doc["status"] == "UNCERTIFIED");
  CHECK(doc["integral"] == "5400");
  CHECK(!doc.contains("logtev"));
  CHECK(doc.contains("warning"));

  RunResult corrected = run("--format json blp2 --excess " + path);
  REQUIRE(corrected.exit_code == 0);
  json cdoc = json::parse(corrected.output);
  CHECK(cdoc["status"] == "EXCESS_CORRECTED");
  CHECK(cdoc["integral"] == "5400");
  CHECK(cdoc["component_count"] == "120");
  CHECK(cdoc["per_component"] == "25");
  CHECK(cdoc["logtev"] == "2400");
  std::remove(path.c_str());
}

TEST_CASE("symmetrized flag divides by the repetition factor") {
  // mu_3 has four equal parts: repetition factor 4! = 24.
  std::string path = write_temp("sym", kExcess);
  RunResult res = run("--format json --symmetrized blp2 --excess " + path);
  REQUIRE(res.exit_code == 0);
  json doc = json::parse(res.output);
  CHECK(doc["logtev"] == "2400");
  CHECK(doc["symmetrized"] == "100");
  std::remove(path.c_str());
}

TEST_CASE("malformed input exits with code 2") {
  std::string bad = write_temp("bad", R"({"target": "xrsa", "r": 0})");
  CHECK(run("xrsa " + bad).exit_code == 2);
  std::remove(bad.c_str());

  std::string notjson = write_temp("notjson", "nope");
  CHECK(run("xrsa " + notjson).exit_code == 2);
  std::remove(notjson.c_str());

  CHECK(run("xrsa /no/such/file").exit_code == 2);

  // Valid document, wrong target for the subcommand.
  std::string x = write_temp("wrongtarget", kX111);
  CHECK(run("blp2 " + x).exit_code == 2);
  std::remove(x.c_str());

  // Excess correction outside the supported pattern.
  std::string plain = write_temp("plainblp2",
      R"({"target": "blp2", "d": 4,
          "mu": [[1], [1], [1, 1], [1, 1, 1], [1, 1, 1]]})");
  CHECK(run("blp2 --excess " + plain).exit_code == 2);
  std::remove(plain.c_str());
}

TEST_CASE("certified mode rejects degenerate data") {
  std::string degen = write_temp("degen",
      R"({"target": "xrsa", "r": 1, "s": 1, "a": 0, "b": 0, "c": 1,
          "mu": [[1], [], [], [1]]})");
  CHECK(run("xrsa " + degen).exit_code == 2);
  RunResult diag = run("--format json --mode diagnostic xrsa " + degen);
  CHECK(diag.exit_code == 0);
  CHECK(json::parse(diag.output)["status"] == "DEGENERATE");
  std::remove(degen.c_str());
}

TEST_CASE("injected engine fault surfaces as exit code 3") {
  std::string path = write_temp("fault", kX111);
  RunResult res = run("xrsa " + path, "LOGTEV_FAULT_INJECT=1");
  CHECK(res.exit_code == 3);
  std::remove(path.c_str());
}

TEST_CASE("sweep cross-checks and reports counts") {
  RunResult res = run(
      "--format json sweep --r 1 --s 1 --a 1 --max-m 4 --max-part 2");
  REQUIRE(res.exit_code == 0);
  json doc = json::parse(res.output);
  CHECK(doc["violations"] == 0);
  CHECK(doc["xrsa_count"].get<long>() > 0);
  CHECK(doc["blp2_count"].get<long>() > 0);
}

TEST_CASE("tables") {
  RunResult hz = run(
      "--format json table --family hirzebruch --max-a 1 --max-m 4 "
      "--max-part 2");
  REQUIRE(hz.exit_code == 0);
  CHECK(json::parse(hz.output).is_array());

  RunResult bl = run("--format json table --family bl-linear --max-r 2 "
                     "--max-s 2 --max-d 3");
  REQUIRE(bl.exit_code == 0);
  json rows = json::parse(bl.output);
  REQUIRE(rows.is_array());
  CHECK(!rows.empty());

  // Symmetrized projective rows are identically 1.
  RunResult pr = run(
      "--format json --symmetrized table --family projective --max-d 4");
  REQUIRE(pr.exit_code == 0);
  json prows = json::parse(pr.output);
  REQUIRE(prows.is_array());
  REQUIRE(!prows.empty());
  for (const auto& row : prows) {
    CHECK(row["symmetrized"] == "1");
  }

  CHECK(run("table --family nope").exit_code != 0);
}

TEST_CASE("tsv and human formats flatten the report") {
  std::string path = write_temp("fmt", kX111);
  RunResult tsv = run("--format tsv xrsa " + path);
  REQUIRE(tsv.exit_code == 0);
  CHECK(tsv.output.find("logtev\t2") != std::string::npos);
  RunResult human = run("xrsa " + path);
  REQUIRE(human.exit_code == 0);
  CHECK(human.output.find("logtev: 2") != std::string::npos);
  std::remove(path.c_str());
}
