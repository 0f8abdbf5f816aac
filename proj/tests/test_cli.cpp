#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

/** Runs the installed CLI with the given arguments, capturing stdout. */
RunResult run(const std::string& args) {
  std::string cmd = std::string(TAPES_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  RunResult r;
  if (!p) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

const char* kSig = "/tmp/tapes_cli_test.sig";
const char* kTwoSortSig = "/tmp/tapes_cli_two.sig";
const char* kModel = "/tmp/tapes_cli_model.json";
const char* kBadModel = "/tmp/tapes_cli_bad_model.json";
const char* kDot = "/tmp/tapes_cli_out.dot";

void write_fixtures() {
  static bool done = false;
  if (done) return;
  done = true;
  std::ofstream(kSig) << "sort X ;\n"
                         "gen R : X -> X ;\n"
                         "gen S : X -> X ;\n"
                         "gen T : X -> X ;\n";
  std::ofstream(kTwoSortSig) << "sort A B ;\n"
                                "gen f : A -> B ;\n";
  std::ofstream(kModel)
      << R"({"carrier": {"X": 2},)"
         R"( "relations": {"R": [[[0],[1]],[[1],[1]]],)"
         R"( "S": [[[1],[1]]], "T": []}})";
  std::ofstream(kBadModel) << "{ not json";
}

std::string sig_arg() {
  write_fixtures();
  return std::string("--sig ") + kSig;
}
}  // namespace

TEST_CASE("decide confirms distribution of composition over union") {
  RunResult r = run("decide " + sig_arg() + " \"R;(S|T)\" == \"R;S | R;T\"");
  CHECK(r.code == 0);
  CHECK(r.out == "holds\n");
}

TEST_CASE("decide rejects the strict intersection law with a witness") {
  RunResult r = run("decide " + sig_arg() +
                    " \"(R;S) & (R;T)\" \"<=\" \"R ; (S & T)\"");
  CHECK(r.code == 1);
  REQUIRE(r.out.rfind("fails\n", 0) == 0);
  auto j = nlohmann::json::parse(r.out.substr(6));
  CHECK(j["carrier"]["X"].get<int>() <= 3);
  // The lax direction holds.
  RunResult lax = run("decide " + sig_arg() +
                      " \"R ; (S & T)\" \"<=\" \"(R;S) & (R;T)\"");
  CHECK(lax.code == 0);
}

TEST_CASE("decide is reproducible for a fixed seed") {
  std::string cmd = "decide " + sig_arg() + " --seed 11 \"R\" \"<=\" \"S\"";
  RunResult a = run(cmd);
  RunResult b = run(cmd);
  CHECK(a.code == 1);
  CHECK(a.out == b.out);
}

TEST_CASE("normalize prints the single-entry matrix of an expression") {
  RunResult r = run("normalize " + sig_arg() + " \"R | (S & T)\"");
  CHECK(r.code == 0);
  CHECK(r.out.find("1x1") != std::string::npos);
  CHECK(r.out.find("R") != std::string::npos);
  CHECK(r.out.find("cp(X)") != std::string::npos);
}

TEST_CASE("normalize reduces the copy, branch, merge pipeline") {
  RunResult r = run("normalize " + sig_arg() +
                    " --tape \"diag(X) ; ([R] (+) [S]) ; codiag(X)\"");
  CHECK(r.code == 0);
  CHECK(r.out.find("{R, S}") != std::string::npos);
}

TEST_CASE("normalize emits machine-readable JSON on request") {
  RunResult r = run("normalize " + sig_arg() + " --json --tape \"diag(X)\"");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["mode"] == "multiset");
  CHECK(j["entries"].size() == 2);
}

TEST_CASE("parse echoes a typed expression") {
  RunResult r = run("parse " + sig_arg() + " \"R ; S | T\"");
  CHECK(r.code == 0);
  CHECK(r.out == "R ; S | T : X -> X\n");
  RunResult t = run("parse " + sig_arg() + " --tape \"diag(X)\"");
  CHECK(t.code == 0);
  CHECK(t.out == "diag(X) : X -> X + X\n");
  RunResult c = run("parse " + sig_arg() + " --circuit \"R ; S\"");
  CHECK(c.code == 0);
  CHECK(c.out == "R ; S : X -> X\n");
}

TEST_CASE("eval computes the intersection relation") {
  RunResult r =
      run("eval " + sig_arg() + " --model " + kModel + " \"R & S\"");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["pairs"].size() == 1);
  CHECK(j["pairs"][0] == nlohmann::json::parse("[[1],[1]]"));
}

TEST_CASE("eval accepts raw tapes") {
  RunResult r =
      run("eval " + sig_arg() + " --model " + kModel + " --tape \"[R]\"");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pairs"].size() == 2);
}

TEST_CASE("render emits DOT to stdout or a file") {
  RunResult r = run("render " + sig_arg() + " --circuit \"R ; S\"");
  CHECK(r.code == 0);
  CHECK(r.out.find("digraph") != std::string::npos);
  CHECK(r.out.find("R") != std::string::npos);
  CHECK(r.out.find("S") != std::string::npos);
  std::remove(kDot);
  RunResult f = run("render " + sig_arg() + " --circuit \"R\" --dot " + kDot);
  CHECK(f.code == 0);
  std::ifstream in(kDot);
  std::string all((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
  CHECK(all.find("digraph") != std::string::npos);
}

TEST_CASE("tape decisions honor the mode flag") {
  RunResult holds = run("decide " + sig_arg() +
                        " --tape --mode set \"[R]\" \"<=\" \"[R] + [S]\"");
  CHECK(holds.code == 0);
  RunResult fails = run("decide " + sig_arg() +
                        " --tape --mode set \"[R] + [S]\" \"<=\" \"[R]\"");
  CHECK(fails.code == 1);
  // Equality of multisets is fine without an order; inclusion is not.
  RunResult eq = run("decide " + sig_arg() +
                     " --tape \"[R] + [S]\" == \"[S] + [R]\"");
  CHECK(eq.code == 0);
  RunResult le = run("decide " + sig_arg() + " --tape \"[R]\" \"<=\" \"[R]\"");
  CHECK(le.code == 2);
}

TEST_CASE("relation expressions insist on cb mode") {
  RunResult r =
      run("decide " + sig_arg() + " --mode multiset \"R\" == \"R\"");
  CHECK(r.code == 2);
  RunResult ok = run("decide " + sig_arg() + " --mode cb \"R\" == \"R\"");
  CHECK(ok.code == 0);
}

TEST_CASE("problems exit with status two") {
  write_fixtures();
  CHECK(run("decide " + sig_arg() + " \"R ; (\" == \"R\"").code == 2);
  CHECK(run("decide " + sig_arg() + " \"Q\" == \"R\"").code == 2);
  CHECK(run("decide " + sig_arg() + " \"R\" \"<\" \"R\"").code == 2);
  CHECK(run("normalize " + sig_arg() + " --tape \"[R] ; diag(X) ;\"").code ==
        2);
  CHECK(run(std::string("eval ") + sig_arg() + " --model " + kBadModel +
            " \"R\"")
            .code == 2);
  CHECK(run("normalize --sig /nonexistent.sig \"R\"").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("parse " + sig_arg()).code == 2);
  // Relation syntax over a signature that is not single-sorted.
  CHECK(run(std::string("parse --sig ") + kTwoSortSig + " \"f\"").code == 2);
}

TEST_CASE("selftest is deterministic per seed and reports its checks") {
  RunResult a = run("selftest --seed 7");
  RunResult b = run("selftest --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("all checks passed") != std::string::npos);
  CHECK(a.out.find("ok") != std::string::npos);
}
