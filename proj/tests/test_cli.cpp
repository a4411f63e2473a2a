// End-to-end tests for the command-line interface, run against the built
// binary named by the SPRINGERCHI_BIN environment variable.  Covers the
// documented spot values and exit codes of every subcommand, byte-level
// determinism of table generation (including under worker threads), both
// output formats, and the error paths for inadmissible parameters and
// unwritable output locations.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("SPRINGERCHI_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "SPRINGERCHI_BIN must point at the CLI binary");
  const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = out;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("euler subcommand: spot values and exit codes") {
  const RunResult full = run_cli("euler sl 3 2 0,1,2");
  CHECK(full.exit_code == 0);
  CHECK(contains(full.out, "family,n,s,type,chi_formula,chi_oracle,match"));
  CHECK(contains(full.out, "sl,3,2,\"0,1,2\",4,,"));

  const RunResult sp = run_cli("euler sp 2 3 0");
  CHECK(sp.exit_code == 0);
  CHECK(contains(sp.out, "sp,2,3,\"0\",3,,"));

  const RunResult oracle = run_cli("euler sl 3 2 full --oracle");
  CHECK(oracle.exit_code == 0);
  CHECK(contains(oracle.out, "sl,3,2,\"0,1,2\",4,4,true"));

  const RunResult single = run_cli("euler sp 2 3 max:2");
  CHECK(single.exit_code == 0);
  CHECK(contains(single.out, "sp,2,3,\"2\",3,,"));

  CHECK(run_cli("euler sl 4 2 0").exit_code == 2);
  CHECK(run_cli("euler sp 2 4 0").exit_code == 2);
  CHECK(run_cli("euler sp 3 3 0").exit_code == 2);
  CHECK(run_cli("euler sl 3 2 0,3").exit_code == 2);
  CHECK(run_cli("euler sl 3 2 zero").exit_code == 2);
  CHECK(run_cli("euler su 3 2 0").exit_code == 2);
  CHECK(run_cli("bogus").exit_code == 2);
}

TEST_CASE("springer subcommand: spot values and exit codes") {
  const RunResult hook = run_cli("springer sl 2,1 full");
  CHECK(hook.exit_code == 0);
  CHECK(contains(hook.out, "sl,3,4,\"1,2\",3,3,true"));

  const RunResult sp = run_cli("springer sp 1:1 full");
  CHECK(sp.exit_code == 0);
  CHECK(contains(sp.out, "sp,2,3,\"1,2\",4,4,true"));

  const RunResult regular = run_cli("springer sl 3 full");
  CHECK(regular.exit_code == 0);
  CHECK(contains(regular.out, "sl,3,2,\"1,2\",1,1,true"));

  const RunResult zero = run_cli("springer sp 0:1,1 full");
  CHECK(zero.exit_code == 0);
  CHECK(contains(zero.out, ",8,8,true"));

  const RunResult partial = run_cli("springer sp 1:1 1 --oracle");
  CHECK(partial.exit_code == 0);
  CHECK(contains(partial.out, "sp,2,3,\"1\",3,3,true"));

  CHECK(run_cli("springer sl 2,3 full").exit_code == 2);
  CHECK(run_cli("springer sl 0 full").exit_code == 2);
  CHECK(run_cli("springer sp 1,1 full").exit_code == 2);
  CHECK(run_cli("springer sp 1:1 0,1").exit_code == 2);
  CHECK(run_cli("springer sp 1:1 full --s 2").exit_code == 2);
}

TEST_CASE("verify subcommand: suites pass on the shipped ranges") {
  const RunResult all = run_cli("verify all --n-max 3 --s-max 3");
  CHECK(all.exit_code == 0);
  int ok_lines = 0;
  std::istringstream lines(all.out);
  std::string line;
  while (std::getline(lines, line)) {
    CHECK(line.rfind("ok: ", 0) == 0);
    ++ok_lines;
  }
  CHECK(ok_lines == 9);

  CHECK(run_cli("verify bijections --n-max 3 --s-max 3").exit_code == 0);
  CHECK(run_cli("verify oracles --n-max 3 --s-max 3").exit_code == 0);
  CHECK(run_cli("verify matrix --n-max 3 --s-max 3").exit_code == 0);
  CHECK(run_cli("verify everything").exit_code == 2);
}

TEST_CASE("table subcommand: determinism, formats, ranges, I/O errors") {
  const std::filesystem::path a = temp_file("springerchi_cli_a.csv");
  const std::filesystem::path b = temp_file("springerchi_cli_b.csv");
  const std::filesystem::path c = temp_file("springerchi_cli_c.csv");
  const std::filesystem::path j = temp_file("springerchi_cli.json");

  const std::string config = "table --n-max 3 --s-max 5 --oracle";
  CHECK(run_cli(config + " --out " + a.string()).exit_code == 0);
  CHECK(run_cli(config + " --out " + b.string()).exit_code == 0);
  CHECK(run_cli(config + " --jobs 3 --out " + c.string()).exit_code == 0);
  const std::string text = slurp(a);
  CHECK(text == slurp(b));
  CHECK(text == slurp(c));

  // Header first, every oracle row matches, deterministic lexicographic
  // type order within each (family, n, s) cell.
  std::istringstream lines(text);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "family,n,s,type,chi_formula,chi_oracle,match");
  int rows = 0;
  while (std::getline(lines, line)) {
    CHECK(contains(line, ",true"));
    ++rows;
  }
  CHECK(rows > 0);
  CHECK(contains(text, "sp,2,3,\"0,1,2\",9,9,true"));
  CHECK(contains(text, "sp,2,3,\"1\",4,4,true"));
  CHECK(contains(text, "sl,3,2,\"0,1,2\",4,4,true"));

  CHECK(run_cli("table --n-max 3 --s-max 5 --format json --out " + j.string())
            .exit_code == 0);
  const nlohmann::json parsed = nlohmann::json::parse(slurp(j));
  REQUIRE(parsed.is_array());
  CHECK(static_cast<int>(parsed.size()) == rows);
  CHECK(parsed[0]["family"].is_string());
  CHECK(parsed[0]["type"].is_array());
  CHECK(parsed[0]["chi_formula"].is_string());
  CHECK(parsed[0]["chi_oracle"].is_null());

  const RunResult empty = run_cli("table --family sl --n-max 1 --out " + a.string());
  CHECK(empty.exit_code == 0);
  CHECK(slurp(a) == "family,n,s,type,chi_formula,chi_oracle,match\n");

  CHECK(run_cli("table --out /nonexistent/dir/x.csv").exit_code == 3);
  CHECK(run_cli("table --jobs 0").exit_code == 2);

  std::filesystem::remove(a);
  std::filesystem::remove(b);
  std::filesystem::remove(c);
  std::filesystem::remove(j);
}
