#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string env_or_fail(const char* name) {
  const char* v = std::getenv(name);
  REQUIRE_MESSAGE(v != nullptr, name << " must point at the binary / golden directory");
  return v;
}

struct RunResult {
  std::string output;
  int exit_code = -1;
};

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd = env_prefix + env_or_fail("FULLGROUP_BIN") + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  RunResult r;
  r.output = out;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string golden(const std::string& name) {
  std::string path = env_or_fail("GOLDEN_DIR") + "/" + name;
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.is_open(), "missing golden file " << path);
  std::ostringstream content;
  content << in.rdbuf();
  return content.str();
}

void check_golden(const std::string& name, const std::string& args, int expected_exit = 0,
                  const std::string& env_prefix = "") {
  CAPTURE(name);
  CAPTURE(args);
  RunResult r = run(args, env_prefix);
  CHECK(r.exit_code == expected_exit);
  CHECK(r.output == golden(name));
}

}  // namespace

TEST_CASE("analyze output is byte-stable") {
  check_golden("analyze_pair2.json", "analyze pair:2 --json");
  check_golden("analyze_loops_witness.txt",
               "analyze 'union(group:cyclic:2,group:cyclic:2)' --witness");
  check_golden("analyze_pair3.txt", "analyze pair:3");
}

TEST_CASE("witness output is byte-stable") {
  check_golden("witness_loops.json", "witness 'union(group:cyclic:2,group:cyclic:2)' --json");
  check_golden("witness_pair3.txt", "witness pair:3");
}

TEST_CASE("full-group enumeration and multiplication table") {
  check_golden("full_group_pair3.txt", "full-group pair:3");
  check_golden("full_group_loops_cayley.json",
               "full-group 'union(group:cyclic:2,group:cyclic:2)' --json --cayley");
}

TEST_CASE("fiber-sum matrices print exactly") {
  check_golden("tmatrix_pair2.txt", "tmatrix pair:2 'ind[a0_1] - 3/2*unit'");
  check_golden("tmatrix_pair2.json", "tmatrix pair:2 'ind[a0_1] - 3/2*unit' --json");
  check_golden("tmatrix_product.txt",
               "tmatrix 'product(pair:2,group:cyclic:2)' 'i*point[(a0_1,g)] + delta[(u0,g),(u1,e)]'");
}

TEST_CASE("free-group bound tables") {
  check_golden("f2_bounds_12.csv", "f2-bounds --n-max 12 --csv");
  check_golden("f2_bounds_5.txt", "f2-bounds --n-max 5 --radius 6");
  check_golden("f2_chain_5.json", "f2-bounds --chain 5 --json");
}

TEST_CASE("validation reports verdicts and exit codes") {
  check_golden("validate_pair3.txt", "validate pair:3");
  RunResult broken = run("validate 'file:" + env_or_fail("GOLDEN_DIR") +
                         "/broken_groupoid.json'");
  CHECK(broken.exit_code == 1);
  CHECK(broken.output == golden("validate_broken.txt"));
}

TEST_CASE("the verify subcommand emits a stable JSON summary") {
  check_golden("verify_small.json", "verify --seed 1 --count 12 --size-cap 16 --pairs 3 --json");
}

TEST_CASE("exit codes separate usage, domain, and verdict errors") {
  CHECK(run("").exit_code == 2);                           // missing subcommand
  CHECK(run("frobnicate").exit_code == 2);                 // unknown subcommand
  CHECK(run("analyze").exit_code == 2);                    // missing argument
  CHECK(run("analyze 'pear:3'").exit_code == 2);           // unparseable description
  CHECK(run("analyze pair:0").exit_code == 1);             // parses, fails to construct
  CHECK(run("witness pair:2").exit_code == 1);             // injective: no witness exists
  CHECK(run("tmatrix pair:2 'point[zzz]'").exit_code == 1);  // unknown arrow label
  CHECK(run("--help").exit_code == 0);

  RunResult capped = run("full-group pair:4", "FULLGROUP_CAP=10 ");
  CHECK(capped.exit_code == 1);
  CHECK(capped.output.find("cap") != std::string::npos);
  CHECK(run("full-group pair:4", "FULLGROUP_CAP=30 ").exit_code == 0);
}
