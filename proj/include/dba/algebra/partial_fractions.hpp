#pragma once

#include <string>
#include <vector>

#include "dba/algebra/bi_rational.hpp"

namespace dba {

// Factor (1 - alpha t)^mult.
struct TPole {
  Monomial alpha;
  int mult = 1;
};

/// Rational function of t over Q(s,x) whose denominator is a product of
/// monomial poles (1 - alpha t). Numerator coefficients are indexed by the
/// power of t.
class PoleRational {
 public:
  PoleRational() = default;
  PoleRational(std::vector<BiRationalFunction> num, std::vector<TPole> poles);

  static PoleRational constant(const BiRationalFunction& c);
  static PoleRational t_power(int k);
  // alpha t / (1 - alpha t)
  static PoleRational geometric(const Monomial& alpha);
  // Splits den into monomial poles c s^a x^b (c = +-1, a, b <= max_pow);
  // throws UnsupportedPole if anything else is left over.
  static PoleRational from_polys(std::vector<BiRationalFunction> num, std::vector<BiRationalFunction> den,
                                 int max_pow = 4);

  const std::vector<BiRationalFunction>& num() const { return num_; }
  const std::vector<TPole>& poles() const { return poles_; }
  std::vector<BiRationalFunction> den() const;
  bool is_zero() const { return num_.empty(); }

  // Taylor coefficients in t up to t^order.
  std::vector<BiRationalFunction> series(int order) const;

  PoleRational& operator+=(const PoleRational& o);
  PoleRational& operator*=(const PoleRational& o);
  friend PoleRational operator+(PoleRational a, const PoleRational& b) { return a += b; }
  friend PoleRational operator*(PoleRational a, const PoleRational& b) { return a *= b; }
  friend PoleRational operator-(PoleRational a);
  friend PoleRational operator-(PoleRational a, const PoleRational& b) { return a += -b; }
  friend bool operator==(const PoleRational& a, const PoleRational& b);

 private:
  void reduce();

  std::vector<BiRationalFunction> num_;
  std::vector<TPole> poles_;  // sorted by alpha, distinct
};

// coef / (1 - alpha t)^j
struct PFTerm {
  BiRationalFunction coef;
  Monomial alpha;
  int j = 1;
};

struct PartialFractionForm {
  std::vector<BiRationalFunction> poly;  // polynomial part, index = power of t
  std::vector<PFTerm> terms;             // distinct (alpha, j), sorted

  PoleRational recombine() const;
  const BiRationalFunction* find(const Monomial& alpha, int j) const;
};

PartialFractionForm partial_fractions_t(const PoleRational& f);

// sum_n [t^n] f(t) * [t^n] g(t), where f is a function of the single series
// variable held in the s slot of a BiRationalFunction.
BiRationalFunction hadamard(const BiRationalFunction& f, const PartialFractionForm& g);

}  // namespace dba
