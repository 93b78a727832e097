#pragma once

#include <vector>

#include "dba/algebra/rat.hpp"
#include "dba/animals/animal.hpp"

namespace dba::animals {

enum class TwoDirected { No, Yes, Primitive };

const char* to_string(TwoDirected c);

// Every bond-row between the lowest and highest vertex rows holds exactly two
// vertical bonds. Primitive: each degree-1 vertex lies weakly between the pair
// of the bond-row just above or just below it. Assumes a is directed.
TwoDirected classify_2directed(const BondAnimal& a);
TwoDirected classify_2directed(const std::vector<Bond>& bonds);

// Coefficients m = 0..max_m of the series of 2-directed animals with 2n
// vertical bonds, counted by exhaustive growth. Budget: 2n + max_m <= max_bonds.
std::vector<Int> count_2directed(int n, int max_m, bool primitive_only, int max_bonds = 20);
inline std::vector<Int> enumerate_primitive_2directed(int n, int max_m, int max_bonds = 20) {
  return count_2directed(n, max_m, true, max_bonds);
}

}  // namespace dba::animals
