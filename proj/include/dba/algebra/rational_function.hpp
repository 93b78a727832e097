#pragma once

#include <map>
#include <string>

#include "dba/algebra/cyclotomic.hpp"
#include "dba/algebra/poly.hpp"

namespace dba {

/// Reduced quotient num/den of univariate polynomials over Q.
///
/// The denominator is kept factored as prod Psi_k^m times a remainder that
/// carries no cyclotomic factor found by trial division. Its lowest nonzero
/// coefficient is +1, matching the (1-x)(1+x)... convention of the listings.
/// Every operation returns a fully reduced value.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(Poly num);  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rat& c) : RationalFunction(Poly::constant(c)) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(Rat(c)) {}                  // NOLINT
  RationalFunction(Poly num, const Poly& den);

  static RationalFunction from_factored(Poly num, std::map<int, int> den_cyclo, Poly den_remainder);

  const Poly& num() const { return num_; }
  Poly den() const;
  const std::map<int, int>& den_cyclo() const { return cyclo_; }
  const Poly& den_remainder() const { return rem_; }
  CycloFactorization den_factorization() const { return {cyclo_, rem_}; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return cyclo_.empty() && rem_.degree() == 0; }

  Rat eval(const Rat& at) const;  // throws PoleError
  RationalFunction derivative() const;
  // f(c * x^k)
  RationalFunction substitute_monomial(const Rat& c, std::size_t k) const;
  RationalFunction inverse() const;
  RationalFunction pow(unsigned e) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  std::string to_string(const std::string& var = "x") const;

 private:
  void reduce();

  Poly num_;
  std::map<int, int> cyclo_;
  Poly rem_ = Poly::one();
};

}  // namespace dba
