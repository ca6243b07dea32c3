// Acceptance suite: runs every acceptance criterion at its stated
// tolerance and prints one pass/fail line per criterion. Exits nonzero
// if any criterion fails. The CLI binary under test is passed with
// --cli <path>.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "diffalg/parse.hpp"
#include "hierarchy/hierarchy.hpp"
#include "verify/verify.hpp"

namespace {

using pnf::verify::CheckResult;
using pnf::verify::VerifyOptions;

int g_failures = 0;

void report(int criterion, const std::string& label, bool pass,
            const std::string& details) {
  std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion,
              label.c_str(), details.empty() ? "" : " -- ", details.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

void report_checks(int criterion, const std::string& label,
                   const std::vector<CheckResult>& checks) {
  bool pass = true;
  std::string details;
  for (const auto& c : checks) {
    pass = pass && c.pass;
    if (!details.empty()) details += "; ";
    details += c.name + ": " + (c.pass ? c.details : "FAILED " + c.details);
  }
  report(criterion, label, pass, details);
}

CheckResult find_check(const std::vector<CheckResult>& checks,
                       const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return c;
  return CheckResult{name, "", false, "", "check missing from verify report"};
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
  CliResult result;
  std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.out.append(buf.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s)
    out += (c == '\'') ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

void criterion_12(const std::string& cli) {
  const char* label = "CLI determinism and golden fixtures";
  if (cli.empty()) {
    report(12, label, false, "no --cli path given");
    return;
  }

  std::string details;
  bool pass = true;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details += (details.empty() ? "" : "; ") + what;
    }
  };

  // verify exits 0 on a clean build and its JSON is byte-stable.
  CliResult v1 = run_cli(cli, "verify --format json");
  CliResult v2 = run_cli(cli, "verify --format json");
  need(v1.exit_code == 0, "verify exited " + std::to_string(v1.exit_code));
  need(v1.out == v2.out && !v1.out.empty(), "verify output not byte-identical");

  // hierarchy --check agrees with the embedded transcription and the
  // printed JSON matches it byte for byte.
  CliResult h = run_cli(cli, "hierarchy --levels 5 --check --format json");
  need(h.exit_code == 0, "hierarchy --check exited " + std::to_string(h.exit_code));
  std::string expected =
      pnf::hierarchy::hierarchy_json(pnf::hierarchy::reference_hierarchy()) + "\n";
  need(h.out == expected, "hierarchy JSON deviates from the transcription");

  // parse/format round-trips the whole corpus across the CLI boundary.
  const auto& corpus = pnf::verify::expression_corpus();
  std::string args1 = "parse";
  for (const auto& e : corpus) args1 += " " + shell_quote(e);
  CliResult p1 = run_cli(cli, args1);
  need(p1.exit_code == 0, "parse pass 1 exited " + std::to_string(p1.exit_code));
  std::vector<std::string> canon;
  {
    std::string line;
    for (char c : p1.out) {
      if (c == '\n') {
        canon.push_back(line);
        line.clear();
      } else {
        line += c;
      }
    }
  }
  need(canon.size() == corpus.size(), "parse pass 1 line count mismatch");
  if (canon.size() == corpus.size()) {
    std::string args2 = "parse";
    for (const auto& e : canon) args2 += " " + shell_quote(e);
    CliResult p2 = run_cli(cli, args2);
    need(p2.exit_code == 0, "parse pass 2 exited " + std::to_string(p2.exit_code));
    need(p2.out == p1.out, "canonical forms are not a fixed point");
  }

  // Usage and parse errors exit with code 2.
  need(run_cli(cli, "parse 't1 -'").exit_code == 2, "parse error should exit 2");
  need(run_cli(cli, "hierarchy --levels 0").exit_code == 2,
       "levels 0 should exit 2");
  // A failed symmetry verdict exits with code 1.
  need(run_cli(cli, "symmetry --flow 't2 + 2*t*t1' --candidate 't^2'").exit_code ==
           1,
       "failed symmetry should exit 1");

  report(12, label, pass,
         pass ? "verify, golden hierarchy, corpus round-trip, exit codes"
              : details);
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
  if (cli.empty() && std::getenv("PNF_CLI")) cli = std::getenv("PNF_CLI");

  VerifyOptions opts;  // full suite
  auto rep = pnf::verify::run_verify(opts);
  const auto& checks = rep.checks;

  auto one = [&](int criterion, const std::string& label, const char* check) {
    CheckResult c = find_check(checks, check);
    report(criterion, label, c.pass, c.details);
  };

  one(1, "hierarchy reproduction (exact)", "hierarchy_reproduction");
  report_checks(2, "commutation (exact)",
                {find_check(checks, "hierarchy_commutation"),
                 find_check(checks, "geometric_bracket_vanishing")});
  one(3, "torsion variation equals (R^2 + G)(g') (exact)", "eq37_agreement");
  one(4, "bracket suite: closure, homomorphism, Jacobi, curvature identity",
      "theorem10_suite");
  one(5, "recursion chain at G = 0 (exact)", "rchain_g0");
  one(6, "antiderivative oracle (100 round trips, 100 rejections)",
      "antiderivative_oracle");
  one(7, "Hopf-Cole consistency (heat vs Burgers)", "hopf_cole_consistency");
  one(8, "reconstruction convergence (4th order)", "reconstruction_convergence");
  one(9, "filament-flow consistency (velocity = N)", "filament_consistency");
  one(10, "lightlike cylinder invariants", "cylinder_invariants");
  report_checks(11, "gauge checks",
                {find_check(checks, "gauge_residual_convergence"),
                 find_check(checks, "heat_gauge_equivalence")});
  criterion_12(cli);

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
