// Exercises the installed binary end to end.  The test runner passes the
// binary's location in DOWNEST_BIN; when the variable is missing (running
// the test executable by hand) these cases quietly pass.
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

const char* cli_path() { return std::getenv("DOWNEST_BIN"); }

struct CliResult {
  int code = -1;
  std::string output;  // stdout and stderr interleaved

  bool contains(const std::string& needle) const {
    return output.find(needle) != std::string::npos;
  }
};

CliResult run_cli(const std::string& args) {
  std::string command = std::string(cli_path()) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[1024];
  std::size_t got;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, got);
  int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

#define NEEDS_CLI()        \
  if (cli_path() == nullptr) \
  return

TEST_CASE("cli analyze prints the full report") {
  NEEDS_CLI();
  CliResult r = run_cli("analyze 1234554231");
  CHECK(r.code == 0);
  CHECK(r.contains("word: 1234554231"));
  CHECK(r.contains("size: 5"));
  CHECK(r.contains("length: 10"));
  CHECK(r.contains("maximal subwords: 4554@3 (return)"));
  // reducible by repeated op1 alone, yet a mixed route is shorter
  CHECK(r.contains("one-reducible: yes"));
  CHECK(r.contains("nesting index: 2"));
  CHECK(r.contains("witness:"));

  CliResult reducible = run_cli("analyze 1123234554");
  CHECK(reducible.code == 0);
  CHECK(reducible.contains("one-reducible: yes"));
  CHECK(reducible.contains("c12 witness: none"));
  CHECK(reducible.contains("nesting index: 1"));
  CHECK(reducible.contains(
      "maximal subwords: 11@0 (both), 2323@2 (repeat), 4554@6 (return)"));

  CliResult stuck = run_cli("analyze 121323");
  CHECK(stuck.code == 0);
  CHECK(stuck.contains("maximal subwords: none"));
  CHECK(stuck.contains("one-reducible: no"));
  CHECK(stuck.contains("c12 witness: {1, 2, 3} (center 2)"));
  CHECK(stuck.contains("nesting index: 2"));
}

TEST_CASE("cli analyze handles token input and the empty word") {
  NEEDS_CLI();
  CliResult tokens = run_cli("analyze '10 20 20 10' --format tokens");
  CHECK(tokens.code == 0);
  CHECK(tokens.contains("word: 10 20 20 10"));
  CHECK(tokens.contains("ascending: 1221"));

  CliResult empty = run_cli("analyze ''");
  CHECK(empty.code == 0);
  CHECK(empty.contains("word: ε"));
  CHECK(empty.contains("nesting index: 0"));
}

TEST_CASE("cli analyze --json emits a machine-readable report") {
  NEEDS_CLI();
  CliResult r = run_cli("analyze 121323 --json");
  REQUIRE(r.code == 0);
  nlohmann::json report = nlohmann::json::parse(r.output);
  CHECK(report["word"] == "121323");
  CHECK(report["size"] == 3);
  CHECK(report["one_reducible"] == false);
  CHECK(report["nesting_index"] == 2);
  CHECK(report["maximal_subwords"].empty());
  CHECK(report["c12_witness"]["x"] == "1");
  CHECK(report["c12_witness"]["y"] == "2");
  CHECK(report["c12_witness"]["z"] == "3");
  CHECK(report["witness"]["steps"].size() == 2);

  CliResult plain = run_cli("analyze 12341234 --json");
  REQUIRE(plain.code == 0);
  nlohmann::json k4 = nlohmann::json::parse(plain.output);
  CHECK(k4["c12_witness"].is_null());
  CHECK(k4["one_reducible"] == true);
}

TEST_CASE("cli reduce applies the chosen operation") {
  NEEDS_CLI();
  CliResult op1 = run_cli("reduce 123324564561 --op 1");
  CHECK(op1.code == 0);
  CHECK(op1.output == "11\n");

  CliResult op2 = run_cli("reduce 1234554231 --op 2:3");
  CHECK(op2.code == 0);
  CHECK(op2.output == "12455421\n");

  CliResult stuck = run_cli("reduce 121323 --op 1");
  CHECK(stuck.code == 3);
  CHECK(stuck.contains("inapplicable"));

  CliResult vanish = run_cli("reduce 1123234554 --op 1");
  CHECK(vanish.code == 0);
  CHECK(vanish.output == "ε\n");
}

TEST_CASE("cli reduce --remove deletes chosen subwords") {
  NEEDS_CLI();
  CliResult by_text = run_cli("reduce 1123234554 --remove 4554");
  CHECK(by_text.code == 0);
  CHECK(by_text.output == "112323\n");

  CliResult by_span = run_cli("reduce 1123234554 --remove 6:4");
  CHECK(by_span.code == 0);
  CHECK(by_span.output == "112323\n");

  CliResult pair = run_cli("reduce 1123234554 --remove 11,4554");
  CHECK(pair.code == 0);
  CHECK(pair.output == "2323\n");

  CliResult missing = run_cli("reduce 1123234554 --remove 1212");
  CHECK(missing.code == 2);
  CHECK(missing.contains("not found"));

  CliResult several = run_cli("reduce 112233 --remove 11 --op 1");
  CHECK(several.code == 2);
  CHECK(several.contains("exactly one"));
}

TEST_CASE("cli reduce --all walks operation 1 to a fixpoint") {
  NEEDS_CLI();
  CliResult r = run_cli("reduce 1234554231 --all");
  CHECK(r.code == 0);
  CHECK(r.output == "1234554231\n123231\n11\nε\n");

  CliResult stuck = run_cli("reduce 121323 --all");
  CHECK(stuck.code == 0);
  CHECK(stuck.output == "121323\n");
}

TEST_CASE("cli rejects malformed words") {
  NEEDS_CLI();
  CliResult odd = run_cli("analyze 12132");
  CHECK(odd.code == 2);
  CHECK(odd.contains("error"));

  CliResult triple = run_cli("analyze 111221");
  CHECK(triple.code == 2);
  CHECK(triple.contains("expected exactly 2"));

  CliResult unknown = run_cli("reduce 1212 --op 2:9");
  CHECK(unknown.code == 2);
  CHECK(unknown.contains("unknown letter"));
}

TEST_CASE("cli tally prints the distribution as CSV") {
  NEEDS_CLI();
  CliResult r = run_cli("tally --size 4");
  CHECK(r.code == 0);
  CHECK(r.output ==
        "size,ni,count\n"
        "4,1,17\n"
        "4,2,78\n"
        "4,3,10\n");

  CliResult json = run_cli("tally --size 3 --json");
  REQUIRE(json.code == 0);
  nlohmann::json row = nlohmann::json::parse(json.output);
  CHECK(row["size"] == 3);
  CHECK(row["tallies"]["1"] == 7);
  CHECK(row["tallies"]["2"] == 8);

  CliResult guarded = run_cli("tally --size 8");
  CHECK(guarded.code == 2);
  CHECK(guarded.contains("--allow-long"));

  CliResult file = run_cli("tally --size 2 --csv /tmp/downest_tally_test.csv");
  CHECK(file.code == 0);
  std::ifstream in("/tmp/downest_tally_test.csv");
  std::string written((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  CHECK(written == "size,ni,count\n2,1,3\n");
  std::remove("/tmp/downest_tally_test.csv");
}

TEST_CASE("cli generate emits family members as tokens") {
  NEEDS_CLI();
  CliResult repeat = run_cli("generate --family repeat --n 4");
  CHECK(repeat.code == 0);
  CHECK(repeat.output == "1 2 3 4 1 2 3 4\n");

  CliResult grid = run_cli("generate --family grid --n 2");
  CHECK(grid.code == 0);
  CHECK(grid.output == "1 2 3 4 2 1 4 3\n");

  CliResult w1 = run_cli("generate --family w1 --n 3");
  CHECK(w1.code == 0);
  CHECK(w1.output == "1 2 3 4 5 6 5 6 3 4 1 2\n");

  CliResult bad = run_cli("generate --family spiral --n 2");
  CHECK(bad.code == 2);
  CHECK(bad.contains("unknown family"));
}

TEST_CASE("cli export renders diagrams") {
  NEEDS_CLI();
  CliResult dot = run_cli("export 1212 --what circle --dot");
  CHECK(dot.code == 0);
  CHECK(dot.contains("graph circle_graph {"));
  CHECK(dot.contains("\"1\" -- \"2\";"));

  CliResult chords = run_cli("export 1212 --what chords --json");
  REQUIRE(chords.code == 0);
  nlohmann::json diagram = nlohmann::json::parse(chords.output);
  CHECK(diagram["length"] == 4);
  REQUIRE(diagram["chords"].size() == 2);
  CHECK(diagram["chords"][0]["letter"] == "1");
  CHECK(diagram["chords"][0]["positions"][0] == 0);
  CHECK(diagram["chords"][0]["positions"][1] == 2);

  CliResult both = run_cli("export 1212 --what circle --dot --json");
  CHECK(both.code == 2);

  CliResult to_file =
      run_cli("export 1212 --what circle --dot --out /tmp/downest_dot_test.gv");
  CHECK(to_file.code == 0);
  std::ifstream in("/tmp/downest_dot_test.gv");
  std::string written((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  CHECK(written.find("circle_graph") != std::string::npos);
  std::remove("/tmp/downest_dot_test.gv");
}

TEST_CASE("cli verify suites run and pass") {
  NEEDS_CLI();
  CliResult families = run_cli("verify --suite families --n 3");
  CHECK(families.code == 0);
  CHECK(families.contains("pass"));

  CliResult c12 = run_cli("verify --suite theorem-c12 --max-size 4");
  CHECK(c12.code == 0);
  CHECK(c12.contains("pass"));

  CliResult conjecture =
      run_cli("verify --suite conjecture --max-ni 3 --size-cap 5");
  CHECK(conjecture.code == 0);
  CHECK(conjecture.contains("nothing is asserted"));

  CliResult unknown = run_cli("verify --suite nonsense");
  CHECK(unknown.code == 2);
}

TEST_CASE("cli persists the nesting-index cache when asked") {
  NEEDS_CLI();
  const char* path = "/tmp/downest_cache_test.txt";
  std::remove(path);

  // the env assignment must prefix the binary, so build the command directly
  std::string command = std::string("DOWNEST_CACHE=") + path + " " +
                        cli_path() + " analyze 12341234 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[512];
  while (std::fread(buffer, 1, sizeof buffer, pipe) > 0) {
  }
  int status = pclose(pipe);
  CHECK(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 0);

  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "downest-ni-cache 1");
  in.close();

  // a corrupt cache is ignored with a warning, not a failure
  std::ofstream(path) << "not a cache\n";
  std::string again = std::string("DOWNEST_CACHE=") + path + " " +
                      cli_path() + " analyze 1212 2>&1";
  FILE* pipe2 = popen(again.c_str(), "r");
  REQUIRE(pipe2 != nullptr);
  std::string output;
  std::size_t got;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe2)) > 0)
    output.append(buffer, got);
  int status2 = pclose(pipe2);
  CHECK(WIFEXITED(status2));
  CHECK(WEXITSTATUS(status2) == 0);
  CHECK(output.find("warning: ignoring cache") != std::string::npos);
  std::remove(path);
}
