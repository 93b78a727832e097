#pragma once

#include <map>
#include <string>

#include "dba/algebra/poly.hpp"

namespace dba {

/// Cyclotomic polynomial Psi_k normalized to constant term +1,
/// so Psi_1 = 1 - x and prod_{d | k} Psi_d = 1 - x^k.
const Poly& cyclotomic(int k);

int euler_phi(int k);

/// Multiplicities of Psi_k in a polynomial plus the cyclotomic-free rest.
struct CycloFactorization {
  std::map<int, int> factors;  // k -> multiplicity
  Poly remainder;

  Poly expand() const;
  // Highest cyclotomic index present, 0 when there is none.
  int max_index() const { return factors.empty() ? 0 : factors.rbegin()->first; }
  // e.g. "(1-x)^5(1+x)" with a trailing "*(remainder)" when it is not 1.
  std::string to_string(const std::string& var = "x") const;
};

/// Trial division by Psi_1..Psi_kmax. kmax <= 0 selects 2*deg(p)+2.
CycloFactorization cyclo_factorize(const Poly& p, int kmax = 0);

Poly cyclo_product(const std::map<int, int>& factors);

/// Psi_k written the way the listings print it, e.g. "(1+x+x^2)".
std::string cyclotomic_label(int k, const std::string& var = "x");

}  // namespace dba
