#include "dba/suites/suites.hpp"

#include <chrono>
#include <sstream>

#include "dba/analysis/analysis.hpp"
#include "dba/animals/enumerate.hpp"
#include "dba/animals/two_directed.hpp"
#include "dba/haruspicy/haruspicy.hpp"
#include "dba/temperley/temperley.hpp"

namespace dba::suites {

namespace {

class Timer {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

CheckResult finish(CheckResult r, const Timer& t) {
  r.pass = r.failures.empty();
  r.seconds = t.seconds();
  return r;
}

std::string str(const Int& v) { return v.get_str(); }

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

const temperley::BlockGFs& blocks() {
  static const temperley::BlockGFs b = temperley::build_block_gfs();
  return b;
}

}  // namespace

Json CheckResult::to_json() const {
  return {{"name", name}, {"pass", pass}, {"failures", failures}, {"detail", detail}};
}

CheckResult check_site(int n_max) {
  Timer t;
  CheckResult r{"site"};
  auto e = analysis::site_aniso_expand(n_max);
  r.failures = e.violations;
  Series<Rat> iso = analysis::site_isotropic_series(5);
  if (iso.coeffs != std::vector<Rat>{0, 1, 2, 5, 13, 35}) r.failures.push_back("isotropic series q^0..q^5");
  r.detail = e.to_json();
  Json rows = Json::array();
  for (int n = 0; n <= n_max; ++n)
    rows.push_back({{"n", n}, {"R", e.R[n].to_string("q")}, {"den", e.R[n].den_factorization().to_string("q")}});
  r.detail["table"] = rows;
  r.detail.erase("R");
  return finish(std::move(r), t);
}

CheckResult check_enumeration(int max_bonds, int workers) {
  Timer t;
  CheckResult r{"enumeration"};
  animals::Budgets budgets;
  budgets.max_bonds = std::max(budgets.max_bonds, max_bonds);
  budgets.transfer_n = std::max(budgets.transfer_n, max_bonds);
  auto brute = animals::enumerate_directed(max_bonds, workers, false, budgets).table;
  auto listed = analysis::listed_H();
  std::size_t listed_checked = 0, transfer_checked = 0;
  for (int n = 0; n < static_cast<int>(listed.size()) && n <= max_bonds; ++n) {
    Series<Rat> s = series_of(listed[n], max_bonds - n);
    for (int m = 0; m + n <= max_bonds; ++m) {
      ++listed_checked;
      if (Rat(brute.at(m, n)) != s[m])
        r.failures.push_back("b_{" + std::to_string(m) + "," + std::to_string(n) + "} = " + str(brute.at(m, n)) +
                             ", listed H gives " + s[m].get_str());
    }
  }
  for (int n = 0; n <= std::min(max_bonds, budgets.transfer_n); ++n) {
    auto tr = animals::transfer_series(n, max_bonds - n, budgets);
    for (int m = 0; m + n <= max_bonds; ++m) {
      ++transfer_checked;
      if (tr.at(m, n) != brute.at(m, n))
        r.failures.push_back("transfer b_{" + std::to_string(m) + "," + std::to_string(n) + "} = " +
                             str(tr.at(m, n)) + ", brute force " + str(brute.at(m, n)));
    }
  }
  r.detail = {{"max_bonds", max_bonds},
              {"listed_coefficients", listed_checked},
              {"transfer_coefficients", transfer_checked},
              {"b_1_1", str(brute.at(1, 1))}};
  return finish(std::move(r), t);
}

CheckResult check_fits(int n_max, int mandatory, int terms) {
  Timer t;
  CheckResult r{"fits"};
  auto listed = analysis::listed_H();
  Json fits = Json::array();
  for (int n = 0; n <= n_max; ++n) {
    int need = std::max(terms, 2 * static_cast<int>(analysis::conjectured_denominator(n).expand().degree()) + 12);
    analysis::FitResult f = analysis::fit_H(n, need);
    Json j = f.to_json();
    std::string tag = "H_" + std::to_string(n);
    bool gate = n <= mandatory;
    if (!f.verified()) {
      if (gate) r.failures.push_back(tag + " fit unstable");
    } else {
      if (!f.den_cyclotomic) r.failures.push_back(tag + " denominator is not a cyclotomic product");
      if (!f.num_deg_le_den) r.failures.push_back(tag + " numerator degree exceeds denominator degree");
      auto d = analysis::denominator_conjecture(n, f.fitted.den());
      j["conjecture"] = d.to_json();
      if (n < static_cast<int>(listed.size())) {
        bool same = f.fitted == listed[n];
        j["matches_listing"] = same;
        if (gate && !same) r.failures.push_back(tag + " differs from the listing: " + f.fitted.to_string());
      }
      if (gate && !d.match) r.failures.push_back(tag + " denominator " + d.fitted + " vs " + d.conjectured);
    }
    j["gating"] = gate;
    fits.push_back(j);
  }
  r.detail = {{"fits", fits}};
  return finish(std::move(r), t);
}

CheckResult check_conjecture() {
  Timer t;
  CheckResult r{"conjecture"};
  Json rows = Json::array();
  for (const auto& [n, text] : analysis::printed_D()) {
    std::string got = analysis::conjectured_denominator(n).to_string();
    rows.push_back({{"n", n}, {"formula", got}, {"printed", text}});
    if (got != text) r.failures.push_back("D_" + std::to_string(n) + ": " + got + " vs " + text);
  }
  r.detail = {{"D", rows}};
  return finish(std::move(r), t);
}

CheckResult check_temperley(int n_routes) {
  Timer t;
  CheckResult r{"temperley"};
  const auto& b = blocks();
  Json steps = Json::array();
  temperley::UncappedGF u = temperley::seed_gf(b);
  for (int n = 1; n < n_routes; ++n) {
    std::string tag = "n=" + std::to_string(n + 1);
    temperley::UncappedGF next;
    try {
      next = temperley::step(b, u, true);
    } catch (const std::exception& e) {
      r.failures.push_back(tag + ": " + e.what());
      break;
    }
    auto sp = temperley::specialize_and_check(u, next);
    auto st = temperley::verify_structure(n + 1, next.value);
    if (!sp.at_one_ok) r.failures.push_back(tag + ": s=1 recurrence disagrees");
    if (!sp.at_x_ok) r.failures.push_back(tag + ": s=x recurrence disagrees");
    if (!st.pass()) r.failures.push_back(tag + ": structure " + join(st.violations));
    steps.push_back({{"n", n + 1},
                     {"routes_agree", true},
                     {"at_one_ok", sp.at_one_ok},
                     {"at_x_ok", sp.at_x_ok},
                     {"printed_at_one_ok", sp.printed_at_one_ok},
                     {"printed_at_x_ok", sp.printed_at_x_ok},
                     {"structure_relaxed", st.relaxed_ok},
                     {"structure_strict", st.strict_ok},
                     {"denominator", st.denominator}});
    u = std::move(next);
  }
  r.detail = {{"steps", steps}};
  return finish(std::move(r), t);
}

CheckResult check_certificates(int n_max) {
  Timer t;
  CheckResult r{"certificates"};
  const auto& b = blocks();
  Json certs = Json::array();
  temperley::UncappedGF u = temperley::seed_gf(b);
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) u = temperley::step(b, u, false);
    RationalFunction f = temperley::cap_off(u);
    auto c = temperley::psi_pole_certificate(u, f);
    certs.push_back({{"n", n},
                     {"psi", n + 1},
                     {"multiplicity", c.psi_multiplicity},
                     {"numerator_coprime", c.numerator_coprime},
                     {"at_one_regular", c.at_one_regular},
                     {"denominator", c.den.to_string()}});
    if (!c.pass())
      r.failures.push_back("f_" + std::to_string(n) + ": Psi_" + std::to_string(n + 1) + " multiplicity " +
                           std::to_string(c.psi_multiplicity));
  }
  r.detail = {{"certificates", certs}};
  return finish(std::move(r), t);
}

CheckResult check_oracle(int n_primitive, int m_primitive, int n_all, int m_all) {
  Timer t;
  CheckResult r{"oracle"};
  const auto& b = blocks();
  temperley::UncappedGF u = temperley::seed_gf(b);
  Json rows = Json::array();
  int n_top = std::max(n_primitive, n_all);
  for (int n = 1; n <= n_top; ++n) {
    if (n > 1) u = temperley::step(b, u, false);
    RationalFunction f = temperley::cap_off(u);
    std::string tag = "n=" + std::to_string(n);
    Json row{{"n", n}};
    if (n <= n_primitive) {
      Series<Rat> s = series_of(f, m_primitive);
      auto counts = animals::count_2directed(n, m_primitive, true);
      std::vector<std::string> got;
      for (int m = 0; m <= m_primitive; ++m) {
        got.push_back(str(counts[m]));
        if (Rat(counts[m]) != s[m]) r.failures.push_back(tag + " primitive m=" + std::to_string(m));
      }
      row["primitive"] = got;
    }
    if (n <= n_all) {
      RationalFunction all = f * RationalFunction(Poly::one(), cyclotomic(1).pow(n + 2));
      Series<Rat> s = series_of(all, m_all);
      auto counts = animals::count_2directed(n, m_all, false);
      std::vector<std::string> got;
      for (int m = 0; m <= m_all; ++m) {
        got.push_back(str(counts[m]));
        if (Rat(counts[m]) != s[m]) r.failures.push_back(tag + " all 2-directed m=" + std::to_string(m));
      }
      row["all"] = got;
    }
    rows.push_back(row);
  }
  r.detail = {{"counts", rows}};
  return finish(std::move(r), t);
}

CheckResult check_ksection(int max_bonds, int workers) {
  Timer t;
  CheckResult r{"ksection"};
  auto rep = haruspicy::verify_ksection_lemma(max_bonds, workers);
  r.failures = rep.violations;
  r.detail = {{"max_bonds", max_bonds},
              {"animals", rep.animals},
              {"sections", rep.sections},
              {"equality_cases", rep.equality_cases}};
  return finish(std::move(r), t);
}

CheckResult check_haruspicy(int max_bonds, int orders, std::uint64_t seed) {
  Timer t;
  CheckResult r{"haruspicy"};
  animals::Budgets budgets;
  budgets.max_bonds = std::max(budgets.max_bonds, max_bonds);
  auto all = animals::enumerate_directed(max_bonds, 1, true, budgets).animals;
  auto conf = haruspicy::confluence_check(all, orders, seed);
  using haruspicy::BondAnimal;
  auto directed = haruspicy::closure_check([](const BondAnimal& a) { return animals::is_directed(a); }, all,
                                           "directed");
  auto two = haruspicy::closure_check(
      [](const BondAnimal& a) { return animals::classify_2directed(a) != animals::TwoDirected::No; }, all,
      "2-directed");
  for (auto* v : {&conf.violations, &directed.violations, &two.violations})
    r.failures.insert(r.failures.end(), v->begin(), v->end());
  Json census = Json::array();
  for (int n = 0; n <= 2; ++n) {
    auto c = haruspicy::minimal_census(n, std::min(max_bonds, 9));
    census.push_back({{"n_vertical", n},
                      {"budgets", c.budgets},
                      {"sizes", c.sizes},
                      {"non_decreasing", c.non_decreasing},
                      {"stabilized", c.stabilized}});
    if (!c.non_decreasing) r.failures.push_back("census for n=" + std::to_string(n) + " shrinks");
  }
  r.detail = {{"max_bonds", max_bonds},
              {"animals", conf.animals},
              {"orders", conf.orders},
              {"deletions", directed.deletions},
              {"duplications", directed.duplications},
              {"census", census}};
  return finish(std::move(r), t);
}

CheckResult check_c5(int n_max, double tol) {
  Timer t;
  CheckResult r{"c5"};
  double closest = 1e300;
  for (const auto& e : temperley::c5_unit_circle(n_max, tol)) {
    closest = std::min(closest, e.min_distance);
    if (!e.pass)
      r.failures.push_back("n=" + std::to_string(e.n) + " min distance " + std::to_string(e.min_distance));
  }
  r.detail = {{"n_max", n_max}, {"tol", tol}, {"min_distance", closest}};
  return finish(std::move(r), t);
}

CheckResult check_counterexample(int order) {
  Timer t;
  CheckResult r{"counterexample"};
  auto c = analysis::counterexample_check(order);
  if (!c.diagonal_ok) r.failures.push_back("diagonal differs from z/(1-z)^2");
  if (!c.new_indices_each_n) r.failures.push_back("some y-coefficient adds no new cyclotomic index");
  if (!c.accumulation.fails) r.failures.push_back("accumulation verdict on F is not failing");
  r.detail = c.to_json();
  return finish(std::move(r), t);
}

CheckResult check_solvability(int fit_n) {
  Timer t;
  CheckResult r{"solvability"};
  std::vector<std::pair<int, CycloFactorization>> bond, site;
  Json sources = Json::array();
  for (int n = 0; n <= 8; ++n) {
    if (n <= fit_n) {
      auto f = analysis::fit_H(n, 60);
      if (f.verified()) {
        bond.emplace_back(n, f.fitted.den_factorization());
        sources.push_back({{"n", n}, {"source", "fit"}});
        continue;
      }
    }
    bond.emplace_back(n, analysis::conjectured_denominator(n));
    sources.push_back({{"n", n}, {"source", "formula"}});
  }
  auto e = analysis::site_aniso_expand(12);
  for (int n = 0; n <= 12; ++n) site.emplace_back(n, e.R[n].den_factorization());
  auto rb = analysis::dfiniteness_report(bond);
  auto rs = analysis::dfiniteness_report(site);
  if (!rb.fails) r.failures.push_back("bond denominators: " + rb.verdict());
  if (rs.fails) r.failures.push_back("site denominators: " + rs.verdict());
  r.detail = {{"bond", rb.to_json()}, {"bond_sources", sources}, {"site", rs.to_json()}};
  return finish(std::move(r), t);
}

}  // namespace dba::suites
