#pragma once

#include <map>
#include <string>
#include <vector>

#include "dba/algebra/bipoly.hpp"
#include "dba/algebra/rational_function.hpp"

namespace dba {

/// One irreducible-or-opaque factor of a denominator that involves s.
struct SAtom {
  BiPoly poly;  // primitive over Q[x], deg_s >= 1, lowest coefficient +1
  int mult = 0;
};

/// Reduced element of Q(s, x).
///
/// The denominator is held factored: an x-only part (cyclotomic exponents and
/// a remainder polynomial) and a list of pairwise coprime s-atoms. Atoms that
/// are linear in s are irreducible, so reduction against them is trial
/// division; higher-degree atoms (only produced from generic input) fall back
/// to a gcd over Q[x][s]. Every public operation returns a reduced value.
class BiRationalFunction {
 public:
  BiRationalFunction() = default;
  BiRationalFunction(BiPoly num);             // NOLINT(google-explicit-constructor)
  BiRationalFunction(const RationalFunction& f);  // NOLINT(google-explicit-constructor)
  BiRationalFunction(const Rat& c) : BiRationalFunction(BiPoly(Poly::constant(c))) {}  // NOLINT
  BiRationalFunction(long c) : BiRationalFunction(Rat(c)) {}                          // NOLINT
  BiRationalFunction(BiPoly num, const BiPoly& den);

  // Monomial with possibly negative exponents.
  static BiRationalFunction from_monomial(const Monomial& m);
  static BiRationalFunction s() { return from_monomial({Rat(1), 1, 0}); }
  static BiRationalFunction x() { return from_monomial({Rat(1), 0, 1}); }

  const BiPoly& num() const { return num_; }
  BiPoly den() const;
  const std::map<int, int>& den_cyclo() const { return cyclo_; }
  const Poly& den_x_remainder() const { return rem_; }
  const std::vector<SAtom>& den_atoms() const { return atoms_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_x_only() const { return num_.is_x_only() && atoms_.empty(); }
  // Throws std::logic_error unless is_x_only().
  RationalFunction as_x_only() const;

  Rat eval(const Rat& s, const Rat& x) const;  // throws PoleError

  // f(m) with m free of s: a function of x alone. Throws PoleError naming the
  // denominator factor that vanishes identically.
  RationalFunction substitute(const Monomial& m) const;
  // f(m(s,x); x) with m.s_pow >= 1.
  BiRationalFunction substitute_s(const Monomial& m) const;
  BiRationalFunction derivative_s() const;
  // Coefficients of s^0..s^order of the Taylor expansion around s = 0.
  std::vector<RationalFunction> series_s(int order) const;

  BiRationalFunction inverse() const;

  BiRationalFunction& operator+=(const BiRationalFunction& o);
  BiRationalFunction& operator-=(const BiRationalFunction& o) { return *this += -o; }
  BiRationalFunction& operator*=(const BiRationalFunction& o);
  BiRationalFunction& operator/=(const BiRationalFunction& o) { return *this *= o.inverse(); }

  friend BiRationalFunction operator+(BiRationalFunction a, const BiRationalFunction& b) { return a += b; }
  friend BiRationalFunction operator-(BiRationalFunction a, const BiRationalFunction& b) { return a -= b; }
  friend BiRationalFunction operator*(BiRationalFunction a, const BiRationalFunction& b) { return a *= b; }
  friend BiRationalFunction operator/(BiRationalFunction a, const BiRationalFunction& b) { return a /= b; }
  friend BiRationalFunction operator-(BiRationalFunction a);
  friend bool operator==(const BiRationalFunction& a, const BiRationalFunction& b);

  BiRationalFunction pow(unsigned e) const;

  // Numerator and denominator with the denominator listed factor by factor.
  std::string to_string(const std::string& svar = "s", const std::string& xvar = "x") const;
  std::string den_string(const std::string& svar = "s", const std::string& xvar = "x") const;

 private:
  // Builds from a numerator and arbitrary (possibly overlapping) factors.
  static BiRationalFunction assemble(BiPoly num, std::map<int, int> cyclo, Poly rem, std::vector<SAtom> atoms);
  void reduce();

  BiPoly num_;
  std::map<int, int> cyclo_;
  Poly rem_ = Poly::one();
  std::vector<SAtom> atoms_;
};

}  // namespace dba
