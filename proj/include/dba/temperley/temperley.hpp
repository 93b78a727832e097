#pragma once

#include <array>
#include <string>
#include <vector>

#include "dba/algebra/bi_rational.hpp"
#include "dba/algebra/partial_fractions.hpp"
#include "dba/algebra/rational_function.hpp"

namespace dba::temperley {

struct BlockGFs {
  BiRationalFunction seed;        // s x / (1 - s x)
  PoleRational cap;               // in t over Q(x)
  PartialFractionForm cap_pf;
  PoleRational block;             // T(s,t;x) built from the <.> sum
  PartialFractionForm block_pf;   // generic partial fractions of block
  std::array<BiRationalFunction, 6> c;  // printed c_0..c_5
};

// <m> = m / (1 - m)
BiRationalFunction bracket(const Monomial& m);
PoleRational block_from_brackets();
std::array<BiRationalFunction, 6> printed_block_coefficients();
// The printed coefficients arranged as a partial fraction form in the (1 - alpha t)^-j basis.
PartialFractionForm printed_block_pf(const std::array<BiRationalFunction, 6>& c);

// Cross-checks every printed identity; throws ConsistencyError naming the
// first differing coefficient.
BlockGFs build_block_gfs();

struct UncappedGF {
  int n = 0;
  BiRationalFunction value;
  RationalFunction at_one;   // f(1; x)
  RationalFunction at_x;     // f(x; x)
  RationalFunction d1_at_x;  // df/ds at s = x
  RationalFunction d2_at_x;  // d2f/ds2 at s = x
  RationalFunction at_x2;    // f(x^2; x)
};

UncappedGF make_uncapped(int n, BiRationalFunction value);
UncappedGF seed_gf(const BlockGFs& b);

// Five-term recurrence with the printed c_i.
BiRationalFunction step_recurrence(const BlockGFs& b, const UncappedGF& u);
// f(t; x) Hadamard T(s, t; x) through the generic partial fraction form.
BiRationalFunction step_hadamard(const BlockGFs& b, const UncappedGF& u);
// Both routes; throws ConsistencyError if they differ. With check = false only
// the recurrence route runs.
UncappedGF step(const BlockGFs& b, const UncappedGF& u, bool check = true);

struct Specialization {
  RationalFunction at_one;   // from the s = 1 recurrence
  RationalFunction at_x;     // from the s = x recurrence
  bool at_one_ok = false;    // equals substitution into the generic next value
  bool at_x_ok = false;
  bool printed_at_one_ok = false;  // the forms exactly as typeset
  bool printed_at_x_ok = false;
};

// Degenerate recurrences evaluated from u's specials and compared with next's.
Specialization specialize_and_check(const UncappedGF& u, const UncappedGF& next);

// f_n = (f(1;x) - x f(x;x)) / (1 - x)
RationalFunction cap_off(const UncappedGF& u);

struct StructureReport {
  int n = 0;
  bool vanishes_at_zero = false;     // f(0;x) = 0
  bool no_one_minus_s = false;
  bool top_atom_simple = false;      // (1 - s x^n) with multiplicity 1
  bool relaxed_ok = false;           // atoms (1 - s x^k), k <= n; Psi_k, k <= n
  bool strict_ok = false;            // additionally all other factors have k <= n - 1
  std::vector<std::string> violations;
  std::string denominator;
  bool pass() const { return vanishes_at_zero && no_one_minus_s && top_atom_simple && relaxed_ok; }
};

StructureReport verify_structure(int n, const BiRationalFunction& value);

struct C5Entry {
  int n = 0;
  int mult_one = 0;    // multiplicity of (1 - x) in p_n
  int mult_minus = 0;  // multiplicity of (1 + x) in p_n
  Poly cofactor;
  double min_distance = 0;  // min over cofactor roots of ||root| - 1|
  bool c5_reduced_ok = false;  // reduced c_5(x^n; x) numerator is x^k times the cofactor
  bool pass = false;
};

// p_n = 1 - (1 + x - x^2) x^n and the zeros of c_5(x^n; x).
C5Entry c5_unit_circle_entry(int n, double tol);
std::vector<C5Entry> c5_unit_circle(int n_max, double tol = 1e-9);

struct PoleCertificate {
  int n = 0;
  CycloFactorization den;
  int psi_multiplicity = 0;
  bool numerator_coprime = false;
  bool at_one_regular = false;
  bool pass() const { return psi_multiplicity == 1 && numerator_coprime && at_one_regular; }
};

PoleCertificate psi_pole_certificate(const UncappedGF& u, const RationalFunction& f_n);

// Numeric roots of a real polynomial (Aberth iteration at 256 bits).
std::vector<std::pair<double, double>> polynomial_roots(const Poly& p);

}  // namespace dba::temperley
