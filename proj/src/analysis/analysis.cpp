#include "dba/analysis/analysis.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "dba/animals/enumerate.hpp"

namespace dba::analysis {

namespace {

RationalFunction factored(std::initializer_list<long> num, std::map<int, int> den) {
  return RationalFunction::from_factored(Poly(num), std::move(den), Poly::one());
}

std::set<int> index_set(const CycloFactorization& f) {
  std::set<int> out;
  for (auto [k, m] : f.factors) out.insert(k);
  return out;
}

bool pure_cyclotomic(const CycloFactorization& f) {
  return f.remainder.degree() == 0;
}

// Solves M y = rhs exactly; free unknowns are set to zero. nullopt if inconsistent.
std::optional<std::vector<Rat>> solve(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    std::swap(rhs[p], rhs[r]);
    Rat inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (rhs[i] != 0) return std::nullopt;
  std::vector<Rat> y(cols, 0);
  for (std::size_t i = 0; i < r; ++i) y[pivot_col[i]] = rhs[i];
  return y;
}

std::optional<FitResult> try_fit(const std::vector<Rat>& a, int dN, int dD, int margin) {
  int L = static_cast<int>(a.size());
  int used = dN + dD + 1;
  if (L - used < margin) return std::nullopt;
  auto at = [&](int k) { return k < 0 ? Rat(0) : a[k]; };
  std::vector<std::vector<Rat>> m(dD, std::vector<Rat>(dD));
  std::vector<Rat> rhs(dD);
  for (int e = 0; e < dD; ++e) {
    int k = dN + 1 + e;
    for (int j = 1; j <= dD; ++j) m[e][j - 1] = at(k - j);
    rhs[e] = -at(k);
  }
  auto sol = solve(m, rhs);
  if (!sol) return std::nullopt;
  std::vector<Rat> q{1};
  q.insert(q.end(), sol->begin(), sol->end());
  std::vector<Rat> p(dN + 1);
  for (int k = 0; k < L; ++k) {
    Rat c = 0;
    for (int j = 0; j <= std::min(k, dD); ++j) c += q[j] * a[k - j];
    if (k <= dN) {
      p[k] = c;
    } else if (c != 0) {
      return std::nullopt;
    }
  }
  FitResult r;
  r.fitted = RationalFunction(Poly(p), Poly(q));
  r.deg_num = dN;
  r.deg_den = dD;
  r.terms_used = used;
  r.terms_verified = L - used;
  r.status = FitStatus::Verified;
  r.den_cyclotomic = pure_cyclotomic(r.fitted.den_factorization());
  r.num_deg_le_den = r.fitted.num().degree() <= r.fitted.den().degree();
  return r;
}

}  // namespace

Series<Rat> site_isotropic_series(int order) {
  RationalFunction ratio(Poly{1, 1}, Poly{1, -3});
  Series<Rat> root = series_sqrt(series_of(ratio, order, "q"), order);
  for (Rat& c : root.coeffs) c /= 2;
  root.coeffs[0] -= Rat(1, 2);
  return root;
}

std::vector<RationalFunction> listed_site_R() {
  return {
      factored({0, 1}, {{1, 1}}),
      factored({0, 0, 1}, {{1, 3}}),
      factored({0, 0, 0, 1, 1, 1}, {{1, 5}, {2, 1}}),
      factored({0, 0, 0, 0, 1, 2, 4, 2, 1}, {{1, 7}, {2, 2}}),
  };
}

AnisoSiteExpansion site_aniso_expand(int n_max) {
  if (n_max < 0 || n_max > 40) throw std::invalid_argument("site_aniso_expand: n_max must be in 0..40");
  // 1 - 4q/((1+q)(1+q-qs)) = ((1-q)/(1+q))^2 * w(s), w(0) = 1
  Series<RationalFunction> w{"s", {RationalFunction(1)}};
  for (int k = 1; k <= n_max; ++k) {
    Poly num = Poly::monomial(Rat(-4), static_cast<std::size_t>(k + 1));
    w.coeffs.push_back(RationalFunction::from_factored(num, {{1, 2}, {2, k}}, Poly::one()));
  }
  Series<RationalFunction> b = series_power(w, Rat(-1, 2), n_max);
  RationalFunction scale(Poly{1, 1}, Poly{1, -1});
  AnisoSiteExpansion out;
  for (int n = 0; n <= n_max; ++n) {
    RationalFunction r = scale * b[n];
    if (n == 0) r -= RationalFunction(1);
    out.R.push_back(r * RationalFunction(Rat(1, 2)));
  }
  auto listed = listed_site_R();
  for (std::size_t n = 0; n < listed.size() && n < out.R.size(); ++n) {
    if (!(out.R[n] == listed[n])) {
      out.listed_ok = false;
      out.violations.push_back("R_" + std::to_string(n) + " = " + out.R[n].to_string("q"));
    }
  }
  for (int n = 0; n <= n_max; ++n) {
    const RationalFunction& r = out.R[n];
    std::string tag = "R_" + std::to_string(n);
    if (n >= 2) {
      std::map<int, int> want{{1, 2 * n + 1}, {2, n - 1}};
      if (r.den_cyclo() != want || r.den_remainder().degree() != 0) {
        out.denominators_ok = false;
        out.violations.push_back(tag + " denominator " + r.den_factorization().to_string("q"));
      }
    }
    const Poly& num = r.num();
    std::vector<Rat> c(num.coeffs().begin() + static_cast<long>(num.valuation()), num.coeffs().end());
    if (!std::equal(c.begin(), c.end(), c.rbegin())) {
      out.palindromic_ok = false;
      out.violations.push_back(tag + " numerator not palindromic");
    }
    if (std::any_of(c.begin(), c.end(), [](const Rat& x) { return x <= 0; })) {
      out.positive_ok = false;
      out.violations.push_back(tag + " numerator has a non-positive coefficient");
    }
    auto peak = std::max_element(c.begin(), c.end());
    bool up = std::is_sorted(c.begin(), peak + 1);
    bool down = std::is_sorted(peak, c.end(), [](const Rat& x, const Rat& y) { return x > y; });
    if (!up || !down) out.not_unimodal.push_back(n);
  }
  return out;
}

Json AnisoSiteExpansion::to_json() const {
  Json j;
  j["R"] = Json::array();
  for (const auto& r : R) j["R"].push_back(dba::to_json(r));
  j["listed_ok"] = listed_ok;
  j["denominators_ok"] = denominators_ok;
  j["palindromic_ok"] = palindromic_ok;
  j["positive_ok"] = positive_ok;
  j["not_unimodal"] = not_unimodal;
  j["violations"] = violations;
  j["pass"] = pass();
  return j;
}

FitResult pade_fit(const std::vector<Rat>& series, int dN, int dD, int margin, int max_raise) {
  for (int raise = 0; raise <= max_raise; ++raise) {
    for (int a = 0; a <= raise; ++a) {
      if (auto r = try_fit(series, dN + a, dD + raise - a, margin)) return *r;
    }
  }
  FitResult r;
  r.deg_num = dN + max_raise;
  r.deg_den = dD + max_raise;
  r.terms_used = static_cast<int>(series.size());
  return r;
}

Json FitResult::to_json() const {
  Json j{{"n", n},
         {"deg_num", deg_num},
         {"deg_den", deg_den},
         {"terms_used", terms_used},
         {"terms_verified", terms_verified},
         {"status", verified() ? "verified" : "unstable"}};
  if (verified()) {
    j["fitted"] = dba::to_json(fitted);
    j["text"] = fitted.to_string();
    j["den_cyclotomic"] = den_cyclotomic;
    j["num_deg_le_den"] = num_deg_le_den;
  }
  return j;
}

std::vector<RationalFunction> listed_H() {
  return {
      factored({1}, {{1, 1}}),
      factored({1}, {{1, 3}}),
      factored({1, 2, 1, -1}, {{1, 5}, {2, 1}}),
      factored({1, 5, 7, 1, -3, -2, 1}, {{1, 7}, {2, 2}}),
      factored({1, 10, 33, 53, 43, 3, -25, -20, 1, 5, 2, -1}, {{1, 9}, {2, 3}, {3, 1}}),
  };
}

CycloFactorization conjectured_denominator(int n) {
  CycloFactorization f;
  f.remainder = Poly::one();
  if (n > 0) f.factors[1] = n;
  for (int k = 1; k <= n / 2 + 1; ++k) {
    int e = n - 2 * k + 3;
    if (e > 0) f.factors[k] += e;
  }
  return f;
}

const std::map<int, std::string>& printed_D() {
  static const std::map<int, std::string> d{
      {5, "(1-x)^11(1+x)^4(1+x+x^2)^2"},
      {6, "(1-x)^13(1+x)^5(1+x+x^2)^3(1+x^2)"},
      {7, "(1-x)^15(1+x)^6(1+x+x^2)^4(1+x^2)^2"},
      {8, "(1-x)^17(1+x)^7(1+x+x^2)^5(1+x^2)^3(1+x+x^2+x^3+x^4)"},
  };
  return d;
}

DenominatorReport denominator_conjecture(int n, const Poly& fitted_den) {
  DenominatorReport r;
  r.n = n;
  CycloFactorization want = conjectured_denominator(n);
  CycloFactorization got = cyclo_factorize(fitted_den.normalized_low());
  r.conjectured = want.to_string();
  r.fitted = got.to_string();
  r.match = want.factors == got.factors && got.remainder == Poly::one();
  return r;
}

Json DenominatorReport::to_json() const {
  return {{"n", n}, {"conjectured", conjectured}, {"fitted", fitted}, {"match", match}};
}

FitResult fit_H(int n, int terms, int margin) {
  animals::Budgets budgets;
  budgets.transfer_n = std::max(budgets.transfer_n, n);
  budgets.transfer_m = std::max(budgets.transfer_m, terms);
  auto table = animals::transfer_series(n, terms - 1, budgets);
  std::vector<Rat> a;
  for (const Int& c : table.column(n, terms - 1)) a.emplace_back(c);
  int d = static_cast<int>(conjectured_denominator(n).expand().degree());
  FitResult r = pade_fit(a, d, d, margin, 8);
  r.n = n;
  return r;
}

DFinitenessReport dfiniteness_report(const std::vector<std::pair<int, CycloFactorization>>& dens) {
  if (dens.size() < 3) throw std::invalid_argument("dfiniteness_report: need at least 3 entries");
  DFinitenessReport r;
  int running = 0;
  for (const auto& [n, f] : dens) {
    std::set<int> s = index_set(f);
    r.all_indices.insert(s.begin(), s.end());
    if (!s.empty()) running = std::max(running, *s.rbegin());
    r.running_max.push_back(running);
    r.indices.emplace_back(n, std::move(s));
  }
  std::size_t half = dens.size() / 2;
  int early = r.running_max[half - 1];
  r.fails = r.running_max.back() > early;
  return r;
}

Json DFinitenessReport::to_json() const {
  Json j;
  j["indices"] = Json::array();
  for (const auto& [n, s] : indices) j["indices"].push_back({{"n", n}, {"cyclotomic", s}});
  j["all_indices"] = all_indices;
  j["running_max"] = running_max;
  j["verdict"] = verdict();
  return j;
}

CounterexampleReport counterexample_check(int order) {
  if (order < 1 || order > 200) throw std::invalid_argument("counterexample_check: order must be in 1..200");
  CounterexampleReport r;
  r.order = order;
  r.diagonal.assign(order + 1, 0);
  for (int n = 1; n <= order; ++n)
    for (int a = 0; n + a * n <= order; ++a)
      for (int e = n + a * n; e <= order; e += n + 1) r.diagonal[e] += 1;
  r.diagonal_ok = true;
  for (int k = 0; k <= order; ++k)
    if (r.diagonal[k] != k) r.diagonal_ok = false;

  std::vector<std::pair<int, CycloFactorization>> dens;
  std::set<int> seen;
  r.new_indices_each_n = true;
  int n_max = std::min(order, 12);
  for (int n = 1; n <= n_max; ++n) {
    Poly den = (Poly::one() - Poly::monomial(1, n)) * (Poly::one() - Poly::monomial(1, n + 1));
    CycloFactorization f = cyclo_factorize(den);
    std::set<int> s = index_set(f);
    if (std::includes(seen.begin(), seen.end(), s.begin(), s.end())) r.new_indices_each_n = false;
    seen.insert(s.begin(), s.end());
    r.y_indices.emplace_back(n, s);
    dens.emplace_back(n, f);
  }
  r.accumulation = dfiniteness_report(dens);
  return r;
}

Json CounterexampleReport::to_json() const {
  Json j;
  j["order"] = order;
  j["diagonal"] = Json::array();
  for (const Rat& c : diagonal) j["diagonal"].push_back(dba::to_json(c));
  j["diagonal_ok"] = diagonal_ok;
  j["y_indices"] = Json::array();
  for (const auto& [n, s] : y_indices) j["y_indices"].push_back({{"n", n}, {"cyclotomic", s}});
  j["new_indices_each_n"] = new_indices_each_n;
  j["accumulation"] = accumulation.to_json();
  j["pass"] = pass();
  return j;
}

}  // namespace dba::analysis
