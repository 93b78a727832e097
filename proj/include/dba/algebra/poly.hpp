#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dba/algebra/rat.hpp"

namespace dba {

/// Dense univariate polynomial over Q; coefficient i multiplies x^i.
/// The zero polynomial has no coefficients; otherwise the top one is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, std::size_t degree);
  static Poly one() { return constant(Rat(1)); }
  static Poly x() { return monomial(Rat(1), 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  // Coefficient of x^i, zero past the end.
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  const Rat& leading() const { return c_.back(); }
  // Index of the lowest nonzero coefficient (0 for the zero polynomial).
  std::size_t valuation() const;
  const Rat& lowest() const { return c_[valuation()]; }

  Rat eval(const Rat& at) const;
  Poly derivative() const;
  // p(c * x^k)
  Poly substitute_monomial(const Rat& c, std::size_t k) const;
  // Multiplies by x^k.
  Poly shifted(std::size_t k) const;
  // Scaled so that the lowest nonzero coefficient is +1.
  Poly normalized_low() const;
  Poly monic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& k);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rat(-1); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& k) { return a *= k; }
  friend Poly operator*(const Rat& k, Poly a) { return a *= k; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly pow(unsigned e) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// a / b when the division is exact, otherwise nullopt.
std::optional<Poly> exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);
// Monic gcd (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

}  // namespace dba
