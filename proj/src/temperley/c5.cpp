#include <boost/multiprecision/cpp_bin_float.hpp>

#include "dba/algebra/cyclotomic.hpp"
#include "dba/temperley/temperley.hpp"

namespace dba::temperley {

namespace {

using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>>;

struct Cx {
  Real re, im;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx operator/(const Cx& a, const Cx& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real norm(const Cx& a) { return sqrt(a.re * a.re + a.im * a.im); }

Real to_real(const Rat& r) {
  Real num(r.get_num().get_str());
  Real den(r.get_den().get_str());
  return num / den;
}

std::vector<Cx> aberth(const Poly& p) {
  const int n = p.degree();
  std::vector<Real> a;
  for (int i = 0; i <= n; ++i) a.push_back(to_real(p.coeff(static_cast<std::size_t>(i))));
  Real bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, Real(abs(a[static_cast<std::size_t>(i)] / a.back())));
  bound += 1;
  std::vector<Cx> z(static_cast<std::size_t>(n));
  const Real pi = boost::math::constants::pi<Real>();
  for (int k = 0; k < n; ++k) {
    Real ang = 2 * pi * k / n + Real(0.4);
    Real r = bound * Real(0.5) + Real(0.1) * k / n;
    z[static_cast<std::size_t>(k)] = {r * cos(ang), r * sin(ang)};
  }
  const Real eps = Real("1e-70");
  for (int iter = 0; iter < 5000; ++iter) {
    Real worst = 0;
    for (int k = 0; k < n; ++k) {
      Cx& zk = z[static_cast<std::size_t>(k)];
      Cx v{a.back(), 0};
      Cx d{0, 0};
      for (int i = n - 1; i >= 0; --i) {
        d = d * zk + v;
        v = v * zk + Cx{a[static_cast<std::size_t>(i)], 0};
      }
      Cx w = v / d;
      Cx sum{0, 0};
      for (int j = 0; j < n; ++j) {
        if (j != k) sum = sum + Cx{1, 0} / (zk - z[static_cast<std::size_t>(j)]);
      }
      Cx step = w / (Cx{1, 0} - w * sum);
      zk = zk - step;
      worst = std::max(worst, norm(step));
    }
    if (worst < eps) break;
  }
  return z;
}

}  // namespace

std::vector<std::pair<double, double>> polynomial_roots(const Poly& p) {
  std::vector<std::pair<double, double>> out;
  if (p.degree() < 1) return out;
  for (const auto& z : aberth(p)) out.emplace_back(z.re.convert_to<double>(), z.im.convert_to<double>());
  return out;
}

C5Entry c5_unit_circle_entry(int n, double tol) {
  C5Entry e;
  e.n = n;
  Poly p = Poly::one() - Poly({1, 1, -1}).shifted(static_cast<std::size_t>(n));
  const Poly& m1 = cyclotomic(1);
  const Poly& p1 = cyclotomic(2);
  while (auto q = exact_div(p, m1)) {
    p = *q;
    ++e.mult_one;
  }
  while (auto q = exact_div(p, p1)) {
    p = *q;
    ++e.mult_minus;
  }
  e.cofactor = p;
  Real best = 1e9;
  if (p.degree() >= 1) {
    for (const auto& z : aberth(p)) best = std::min(best, Real(abs(norm(z) - 1)));
  }
  e.min_distance = best.convert_to<double>();

  // c_5(x^n; x) after reduction: numerator should be x^n times the cofactor up to sign
  const auto c = printed_block_coefficients();
  RationalFunction c5 = c[5].substitute({Rat(1), 0, n});
  const Poly& num = c5.num();
  Poly stripped(std::vector<Rat>(num.coeffs().begin() + static_cast<long>(num.valuation()), num.coeffs().end()));
  e.c5_reduced_ok = stripped == p || stripped == -p;

  const bool one_ok = e.mult_one == (n == 1 ? 2 : 1);
  const bool minus_ok = e.mult_minus == (n % 2 == 1 ? 1 : 0);
  e.pass = one_ok && minus_ok && e.min_distance > tol && e.c5_reduced_ok;
  return e;
}

std::vector<C5Entry> c5_unit_circle(int n_max, double tol) {
  std::vector<C5Entry> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(c5_unit_circle_entry(n, tol));
  return out;
}

}  // namespace dba::temperley
