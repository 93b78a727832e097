#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "dba/suites/suites.hpp"

using dba::suites::CheckResult;

namespace {

constexpr double kRootTol = 1e-9;

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<CheckResult()> run;
};

std::vector<Criterion> criteria() {
  using namespace dba::suites;
  return {
      {1, "site anisotropy R_0..R_3 and denominators n<=12", 10, [] { return check_site(12); }},
      {2, "brute force m+n<=10 vs listed H_0..H_4 and transfer", 300, [] { return check_enumeration(10); }},
      {3, "Pade fits reproduce H_0..H_4", 1800, [] { return check_fits(6, 4); }},
      {4, "denominator formula gives printed D_5..D_8", 1, [] { return check_conjecture(); }},
      {5, "recurrence vs Hadamard and degenerate forms n<=8", 600, [] { return check_temperley(8); }},
      {6, "simple Psi_{n+1} pole of f_n for n<=10", 1200, [] { return check_certificates(10); }},
      {7, "f_n vs primitive 2-directed counts", 600, [] { return check_oracle(3, 10, 2, 8); }},
      {8, "k-section bound over directed animals <=10 bonds", 600, [] { return check_ksection(10); }},
      {9, "confluence under 20 random orders <=9 bonds", 600, [] { return check_haruspicy(9, 20); }},
      {10, "c_5 cofactor zeros off the unit circle n<=30", 30, [] { return check_c5(30, kRootTol); }},
      {11, "diagonal of F equals z/(1-z)^2 through z^30", 10, [] { return check_counterexample(30); }},
  };
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failed = 0;
  for (const Criterion& c : criteria()) {
    if (!only.empty() && !only.count(c.id)) continue;
    CheckResult r = c.run();
    bool in_time = r.seconds < c.budget_seconds;
    bool ok = r.pass && in_time;
    failed += !ok;
    std::printf("criterion %2d: %s  %s (%.2fs)\n", c.id, ok ? "PASS" : "FAIL", c.title, r.seconds);
    if (!in_time) std::printf("    over budget of %.0fs\n", c.budget_seconds);
    for (std::size_t i = 0; i < r.failures.size() && i < 10; ++i) std::printf("    %s\n", r.failures[i].c_str());
    std::fflush(stdout);
  }
  if (only.empty()) {
    CheckResult s = dba::suites::check_solvability();
    failed += !s.pass;
    std::printf("accumulation: %s  bond \"%s\", site \"%s\" (%.2fs)\n", s.pass ? "PASS" : "FAIL",
                s.detail["bond"]["verdict"].get<std::string>().c_str(),
                s.detail["site"]["verdict"].get<std::string>().c_str(), s.seconds);
  }
  return failed == 0 ? 0 : 1;
}
