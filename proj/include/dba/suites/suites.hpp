#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dba/algebra/serialize.hpp"

namespace dba::suites {

struct CheckResult {
  explicit CheckResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  bool pass = false;
  Json detail = Json::object();
  std::vector<std::string> failures;
  double seconds = 0;

  Json to_json() const;
};

CheckResult check_site(int n_max = 12);
// Brute-force table against the listed H_0..H_4 and against the transfer sweep.
CheckResult check_enumeration(int max_bonds = 10, int workers = 1);
// H_0..H_mandatory must reproduce the listings; H_n for n <= n_max are fitted and
// their denominators compared with the conjecture (reported only above `mandatory`).
CheckResult check_fits(int n_max = 4, int mandatory = 3, int terms = 60);
CheckResult check_conjecture();
// Both routes, degenerate recurrences, structure, for n <= n_routes.
CheckResult check_temperley(int n_routes = 8);
CheckResult check_certificates(int n_max = 10);
CheckResult check_oracle(int n_primitive = 3, int m_primitive = 10, int n_all = 2, int m_all = 8);
CheckResult check_ksection(int max_bonds = 10, int workers = 1);
CheckResult check_haruspicy(int max_bonds = 9, int orders = 20, std::uint64_t seed = 2024);
CheckResult check_c5(int n_max = 30, double tol = 1e-9);
CheckResult check_counterexample(int order = 30);
// Accumulation verdicts on the bond and site denominators.
CheckResult check_solvability(int fit_n = 4);

}  // namespace dba::suites
