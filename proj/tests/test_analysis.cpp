#include "doctest.h"
#include "dba/analysis/analysis.hpp"

using namespace dba;
using namespace dba::analysis;

namespace {

std::vector<Rat> rats(std::initializer_list<long> v) {
  std::vector<Rat> r;
  for (long c : v) r.emplace_back(c);
  return r;
}

std::vector<Rat> head(const Series<Rat>& s, int n) { return {s.coeffs.begin(), s.coeffs.begin() + n}; }

}  // namespace

TEST_CASE("isotropic site series") {
  Series<Rat> s = site_isotropic_series(100);
  CHECK(head(s, 6) == rats({0, 1, 2, 5, 13, 35}));
  double ratio = Rat(s[100] / s[99]).get_d();
  CHECK(ratio == doctest::Approx(3.0).epsilon(0.01));
}

TEST_CASE("anisotropic site expansion") {
  AnisoSiteExpansion e = site_aniso_expand(12);
  CHECK(e.pass());
  CHECK(e.violations.empty());
  REQUIRE(e.R.size() == 13);
  CHECK(e.R[0].to_string("q") == "(q)/(1-q)");
  CHECK(e.R[3] == listed_site_R()[3]);
  CHECK(e.R[12].den_cyclo() == std::map<int, int>{{1, 25}, {2, 11}});
  CHECK(e.not_unimodal.empty());
  // R_n(q) summed over n at s = 1 is the isotropic series
  Series<Rat> iso = site_isotropic_series(10);
  std::vector<Rat> total(11, 0);
  for (const RationalFunction& r : e.R) {
    Series<Rat> t = series_of(r, 10, "q");
    for (int i = 0; i <= 10; ++i) total[i] += t[i];
  }
  CHECK(total == iso.coeffs);
}

TEST_CASE("pade on known functions") {
  RationalFunction h1 = listed_H()[1];
  FitResult f = pade_fit(series_of(h1, 19).coeffs, 0, 3);
  REQUIRE(f.verified());
  CHECK(f.fitted == h1);
  CHECK(f.terms_verified == 16);

  // a hint too small is raised until the fit verifies
  RationalFunction g(Poly{1, -1, 2}, Poly{1, 0, 0, -3, 1});
  FitResult fg = pade_fit(series_of(g, 40).coeffs, 1, 2);
  REQUIRE(fg.verified());
  CHECK(fg.fitted == g);

  // too few terms for the verification margin
  FitResult short_fit = pade_fit(series_of(g, 12).coeffs, 2, 4, 10, 0);
  CHECK_FALSE(short_fit.verified());

  // exp-like data has no low degree fit
  std::vector<Rat> e{1};
  for (int k = 1; k < 30; ++k) e.push_back(e.back() / k);
  CHECK_FALSE(pade_fit(e, 2, 2, 10, 3).verified());
}

TEST_CASE("fits of H_n from the transfer series") {
  auto listed = listed_H();
  for (int n = 0; n <= 4; ++n) {
    FitResult f = fit_H(n, 60);
    REQUIRE(f.verified());
    CHECK(f.fitted == listed[n]);
    CHECK(f.den_cyclotomic);
    CHECK(f.num_deg_le_den);
    CHECK(denominator_conjecture(n, f.fitted.den()).match);
  }
  CHECK(fit_H(4, 60).fitted.den_cyclo().count(3) == 1);
}

TEST_CASE("denominator conjecture") {
  CHECK(conjectured_denominator(0).to_string() == "(1-x)");
  CHECK(conjectured_denominator(2).to_string() == "(1-x)^5(1+x)");
  for (const auto& [n, text] : printed_D()) CHECK(conjectured_denominator(n).to_string() == text);
  DenominatorReport bad = denominator_conjecture(2, Poly{1, -1});
  CHECK_FALSE(bad.match);
  CHECK(bad.fitted == "(1-x)");
}

TEST_CASE("accumulation report") {
  std::vector<std::pair<int, CycloFactorization>> bond, site, flat;
  for (int n = 0; n <= 8; ++n) bond.emplace_back(n, conjectured_denominator(n));
  AnisoSiteExpansion e = site_aniso_expand(12);
  for (int n = 0; n <= 12; ++n) site.emplace_back(n, e.R[n].den_factorization());
  for (int n = 0; n < 5; ++n) flat.emplace_back(n, cyclo_factorize(Poly{1, -1}));

  DFinitenessReport b = dfiniteness_report(bond);
  CHECK(b.fails);
  CHECK(b.verdict() == "fails D-finite necessary condition");
  CHECK(b.all_indices == std::set<int>{1, 2, 3, 4, 5});
  CHECK_FALSE(dfiniteness_report(site).fails);
  CHECK(dfiniteness_report(site).all_indices == std::set<int>{1, 2});
  CHECK(dfiniteness_report(flat).verdict() == "consistent with D-finite");
  CHECK_THROWS_AS(dfiniteness_report({bond[0], bond[1]}), std::invalid_argument);

  auto more = site;
  more.emplace_back(13, conjectured_denominator(8));
  CHECK(dfiniteness_report(more).fails);
}

TEST_CASE("counterexample diagonal") {
  CounterexampleReport r = counterexample_check(30);
  CHECK(r.pass());
  CHECK(r.diagonal[5] == 5);
  CHECK(r.diagonal[0] == 0);
  CHECK(r.y_indices[2].second == std::set<int>{1, 2, 3, 4});
}
