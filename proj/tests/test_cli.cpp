#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

std::string g_cli;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = g_cli + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 512> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

}  // namespace

TEST_CASE("kostka text fixtures are byte exact") {
  RunResult r =
      run("kostka --n 3 --lambda 3,2,1 --rects 1x2,1x1,1x1,1x1,1x1 --ell 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "q^2 + q^3 + q^4\n");

  RunResult u = run("kostka --n 3 --lambda 3,2,1 --rects 1x2,1x1,1x1,1x1,1x1");
  CHECK(u.exit_code == 0);
  CHECK(u.out == "q^2 + 2*q^3 + 2*q^4 + 2*q^5 + q^6\n");

  RunResult t = run("kostka --rects 2x3 --lambda 3,3 --n 2");
  CHECK(t.exit_code == 0);
  CHECK(t.out == "1\n");
}

TEST_CASE("kostka json output") {
  RunResult r = run(
      "kostka --n 3 --lambda 3,2,1 --rects 1x2,1x1,1x1,1x1,1x1 --ell 2 "
      "--format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"ell\":2,\"method\":\"rc\",\"poly\":{\"2\":1,\"3\":1,\"4\":1},"
        "\"schema\":\"kostka/1\"}\n");
}

TEST_CASE("kostka method selection and verify-all") {
  for (const std::string m : {"paths", "rc", "fermionic", "mn", "weyl"}) {
    RunResult r = run("kostka --n 3 --lambda 3,2,1 --rects "
                      "1x2,1x1,1x1,1x1,1x1 --ell 2 --method " + m);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "q^2 + q^3 + q^4\n");
  }
  RunResult v = run(
      "kostka --n 3 --lambda 3,2,1 --rects 1x2,1x1,1x1,1x1,1x1 --ell 2 "
      "--verify-all");
  CHECK(v.exit_code == 0);
  RunResult vu = run(
      "kostka --n 3 --lambda 2,2,1 --rects 2x2,1x1 --verify-all --threads 2");
  CHECK(vu.exit_code == 0);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("kostka --lambda 1").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("kostka --n 2 --lambda 2,1 --rects 1x2").exit_code == 2);
}

TEST_CASE("verify-bijection on the worked single-row data") {
  RunResult r =
      run("verify-bijection --n 4 --lambda 3,3,2,1 --rects "
          "1x2,1x2,1x2,1x2,1x1 --ell 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("pass") != std::string::npos);
}

TEST_CASE("branching with truncation zero") {
  RunResult r = run(
      "branching --n 2 --level-split 1,1 --weight 1,1 --rs 1,1 --trunc 0 "
      "--method fermionic");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[1 + O(q^1)]") != std::string::npos);
}

TEST_CASE("conjecture-skew exits zero and reports") {
  RunResult r = run("conjecture-skew --n 2 --max-size 3 --ell-max 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("EXPERIMENTAL") != std::string::npos);
  CHECK(r.out.find("0 discrepancies") != std::string::npos);
}

int main(int argc, char** argv) {
  doctest::Context ctx;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (!arg.empty() && arg[0] != '-') g_cli = arg;
  }
  if (g_cli.empty()) {
    std::fprintf(stderr, "usage: test_cli <path-to-kostka-cli>\n");
    return 1;
  }
  ctx.applyCommandLine(1, argv);
  return ctx.run();
}
