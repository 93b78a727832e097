#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dba/algebra/rat.hpp"
#include "dba/algebra/serialize.hpp"
#include "dba/animals/animal.hpp"

namespace dba::animals {

/// b_{m,n}: directed animals with m horizontal and n vertical bonds, empty animal included.
struct SeriesTable {
  std::map<std::pair<int, int>, Int> entries;  // (m, n) -> count
  std::string complete_region;
  std::string provenance;  // "bruteforce" | "transfer"

  Int at(int m, int n) const;
  bool has(int m, int n) const { return entries.count({m, n}) != 0; }
  // Coefficients b_{0,n} .. b_{max_m,n}; missing entries are an error.
  std::vector<Int> column(int n, int max_m) const;

  Json to_json() const;
  static SeriesTable from_json(const Json& j);
};

struct Budgets {
  int max_bonds = 12;
  int transfer_n = 6;
  int transfer_m = 80;
};

struct EnumerationResult {
  SeriesTable table;
  std::vector<BondAnimal> animals;  // sorted by key within each size; empty if not kept
  std::size_t rejected_disconnected = 0;
  std::size_t rejected_undirected = 0;
};

// All directed animals with at most max_bonds bonds, grown one bond at a time
// and deduplicated by canonical form. Output is independent of workers.
EnumerationResult enumerate_directed(int max_bonds, int workers = 1, bool keep_animals = true,
                                     const Budgets& budgets = {});

struct GrowthLimits {
  int max_h = 0;
  int max_v = 0;
  int max_v_per_row = -1;  // -1: unlimited
  int max_row = -1;        // highest vertex row, -1: unlimited
};

// Every directed animal with h <= max_h and v <= max_v (and per-row vertical
// bond limit) exactly once, rooted at the origin. Streams; keeps nothing.
void for_each_directed(const GrowthLimits& limits, const std::function<void(const std::vector<Bond>&)>& visit);

// b_{m,n} for m <= max_m at fixed n by a column sweep.
SeriesTable transfer_series(int n, int max_m, const Budgets& budgets = {});

}  // namespace dba::animals
