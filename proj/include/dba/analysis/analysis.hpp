#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dba/algebra/cyclotomic.hpp"
#include "dba/algebra/rational_function.hpp"
#include "dba/algebra/serialize.hpp"
#include "dba/algebra/series.hpp"

namespace dba::analysis {

// Directed site animals by number of sites: (sqrt((1+q)/(1-3q)) - 1)/2.
Series<Rat> site_isotropic_series(int order);

// R_0..R_3 as listed.
std::vector<RationalFunction> listed_site_R();

struct AnisoSiteExpansion {
  std::vector<RationalFunction> R;  // S(q,s) = sum R_n(q) s^n
  bool listed_ok = true;            // R_0..R_3
  bool denominators_ok = true;      // (1-q)^(2n+1) (1+q)^(n-1), n >= 2
  bool palindromic_ok = true;
  bool positive_ok = true;
  std::vector<int> not_unimodal;  // reported only
  std::vector<std::string> violations;

  bool pass() const { return listed_ok && denominators_ok && palindromic_ok && positive_ok; }
  Json to_json() const;
};

AnisoSiteExpansion site_aniso_expand(int n_max);

enum class FitStatus { Verified, Unstable };

struct FitResult {
  int n = -1;
  RationalFunction fitted;
  int deg_num = 0;
  int deg_den = 0;
  int terms_used = 0;
  int terms_verified = 0;
  FitStatus status = FitStatus::Unstable;
  bool den_cyclotomic = false;
  bool num_deg_le_den = false;

  bool verified() const { return status == FitStatus::Verified; }
  Json to_json() const;
};

// Exact Pade fit with deg num <= dN, deg den <= dD and den(0) = 1. Every supplied
// term beyond the dN + dD + 1 used ones must be reproduced, and there must be at
// least `margin` of them. On failure the degrees are raised, up to `max_raise` in total.
FitResult pade_fit(const std::vector<Rat>& series, int dN, int dD, int margin = 10, int max_raise = 6);

// H_0..H_4 as listed.
std::vector<RationalFunction> listed_H();

// (1-x)^n prod_{k=1}^{floor(n/2)+1} Psi_k^(n-2k+3)
CycloFactorization conjectured_denominator(int n);

// D_5..D_8 as printed, keyed by n.
const std::map<int, std::string>& printed_D();

struct DenominatorReport {
  int n = 0;
  std::string conjectured;
  std::string fitted;
  bool match = false;
  Json to_json() const;
};

DenominatorReport denominator_conjecture(int n, const Poly& fitted_den);

// Fit H_n from transfer-matrix series with `terms` coefficients.
FitResult fit_H(int n, int terms, int margin = 10);

struct DFinitenessReport {
  std::vector<std::pair<int, std::set<int>>> indices;  // n -> cyclotomic indices
  std::set<int> all_indices;
  std::vector<int> running_max;
  bool fails = false;  // new indices keep appearing
  std::string verdict() const {
    return fails ? "fails D-finite necessary condition" : "consistent with D-finite";
  }
  Json to_json() const;
};

// Fails iff the largest index seen in the later half of the entries exceeds the
// largest seen in the earlier half. Throws std::invalid_argument for fewer than 3 entries.
DFinitenessReport dfiniteness_report(const std::vector<std::pair<int, CycloFactorization>>& dens);

struct CounterexampleReport {
  int order = 0;
  std::vector<Rat> diagonal;
  bool diagonal_ok = false;  // equals z/(1-z)^2
  std::vector<std::pair<int, std::set<int>>> y_indices;
  bool new_indices_each_n = false;
  DFinitenessReport accumulation;

  bool pass() const { return diagonal_ok && new_indices_each_n && accumulation.fails; }
  Json to_json() const;
};

// F(x,y) = sum_{n>=1} y^n / ((1-x^n)(1-x^{n+1})), diagonal y = x = z.
CounterexampleReport counterexample_check(int order);

}  // namespace dba::analysis
