#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dba/algebra/poly.hpp"

namespace dba {

/// c * s^s_pow * x^x_pow. Exponents may be negative where a field element is
/// wanted (partial fractions divide by pole parameters).
struct Monomial {
  Rat coef{1};
  int s_pow = 0;
  int x_pow = 0;

  static Monomial constant(const Rat& c) { return {c, 0, 0}; }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.coef == b.coef && a.s_pow == b.s_pow && a.x_pow == b.x_pow;
  }
  friend bool operator<(const Monomial& a, const Monomial& b);
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.coef * b.coef, a.s_pow + b.s_pow, a.x_pow + b.x_pow};
  }
  Monomial inverse() const { return {1 / coef, -s_pow, -x_pow}; }
  std::string to_string(const std::string& svar = "s", const std::string& xvar = "x") const;
};

/// Dense polynomial in s with coefficients in Q[x]; index = power of s.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<Poly> coeffs);
  BiPoly(const Poly& p);  // NOLINT(google-explicit-constructor): s^0 term

  // Requires nonnegative exponents.
  static BiPoly monomial(const Monomial& m);
  static BiPoly s() { return monomial({Rat(1), 1, 0}); }

  bool is_zero() const { return c_.empty(); }
  int degree_s() const { return static_cast<int>(c_.size()) - 1; }
  int degree_x() const;
  std::size_t term_count() const;
  const std::vector<Poly>& coeffs() const { return c_; }
  const Poly& coeff(std::size_t i) const;
  const Poly& leading() const { return c_.back(); }

  // Lowest term in (s-power, x-power) lexicographic order.
  Rat lowest_coeff() const;
  // gcd of the coefficient polynomials (monic); zero for the zero polynomial.
  Poly content() const;
  // Primitive part scaled to lowest coefficient +1.
  BiPoly normalized_primitive() const;
  bool is_x_only() const { return c_.size() <= 1; }

  Rat eval(const Rat& s, const Rat& x) const;
  // p(m) as a polynomial in x; requires m.s_pow == 0 and m.x_pow >= 0.
  Poly eval_s(const Monomial& m) const;
  // p(m(s,x), x); requires m.s_pow >= 1 and m.x_pow >= 0.
  BiPoly substitute_s(const Monomial& m) const;
  BiPoly derivative_s() const;
  // Keeps powers of s up to and including max_s.
  BiPoly truncated(int max_s) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rat& k);
  BiPoly& operator*=(const Poly& p);
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(BiPoly a) { return a *= Rat(-1); }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Poly& p) { return a *= p; }
  friend BiPoly operator*(BiPoly a, const Rat& k) { return a *= k; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
  friend bool operator<(const BiPoly& a, const BiPoly& b);

  friend BiPoly mul_truncated(const BiPoly& a, const BiPoly& b, int max_s);

  BiPoly pow(unsigned e) const;
  std::string to_string(const std::string& svar = "s", const std::string& xvar = "x") const;

 private:
  void trim();
  std::vector<Poly> c_;
};

// Multiplies by a polynomial; truncates the product at s^max_s.
BiPoly mul_truncated(const BiPoly& a, const BiPoly& b, int max_s);
std::optional<BiPoly> exact_div(const BiPoly& a, const BiPoly& b);
std::optional<BiPoly> exact_div(const BiPoly& a, const Poly& b);
// gcd in Q[x][s]: content gcd times the primitive PRS gcd, normalized low.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

bool operator<(const Poly& a, const Poly& b);

}  // namespace dba
