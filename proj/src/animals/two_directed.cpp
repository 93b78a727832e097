#include "dba/animals/two_directed.hpp"

#include <algorithm>
#include <map>

#include "dba/animals/enumerate.hpp"
#include "dba/error.hpp"

namespace dba::animals {

const char* to_string(TwoDirected c) {
  switch (c) {
    case TwoDirected::No:
      return "not 2-directed";
    case TwoDirected::Yes:
      return "2-directed";
    case TwoDirected::Primitive:
      return "primitive 2-directed";
  }
  return "?";
}

TwoDirected classify_2directed(const std::vector<Bond>& bonds) {
  if (bonds.empty()) return TwoDirected::No;
  int lo = bonds[0].row;
  int hi = bonds[0].row;
  for (const auto& b : bonds) {
    lo = std::min(lo, b.row);
    hi = std::max(hi, b.head().row);
  }
  // bond-row r joins vertex rows r and r+1
  std::map<int, std::vector<int>> pairs;
  int v = 0;
  for (const auto& b : bonds) {
    if (!b.horizontal()) {
      pairs[b.row].push_back(b.col);
      ++v;
    }
  }
  if (v < 2) return TwoDirected::No;
  for (int r = lo; r < hi; ++r) {
    auto it = pairs.find(r);
    if (it == pairs.end() || it->second.size() != 2) return TwoDirected::No;
    std::sort(it->second.begin(), it->second.end());
  }
  std::map<Vertex, int> degree;
  for (const auto& b : bonds) {
    ++degree[b.tail()];
    ++degree[b.head()];
  }
  auto between = [&](int bond_row, int col) {
    auto it = pairs.find(bond_row);
    return it != pairs.end() && it->second[0] <= col && col <= it->second[1];
  };
  for (const auto& [p, d] : degree) {
    if (d != 1) continue;
    if (!between(p.row, p.col) && !between(p.row - 1, p.col)) return TwoDirected::Yes;
  }
  return TwoDirected::Primitive;
}

TwoDirected classify_2directed(const BondAnimal& a) { return classify_2directed(a.bonds()); }

std::vector<Int> count_2directed(int n, int max_m, bool primitive_only, int max_bonds) {
  if (n < 1) throw std::invalid_argument("2-directed animals need n >= 1");
  if (2 * n + max_m > max_bonds) {
    throw BudgetExceeded("2n + max_m = " + std::to_string(2 * n + max_m) + " exceeds budget " +
                         std::to_string(max_bonds));
  }
  std::vector<Int> out(static_cast<std::size_t>(max_m) + 1);
  for_each_directed({max_m, 2 * n, 2, n}, [&](const std::vector<Bond>& bonds) {
    int h = 0;
    for (const auto& b : bonds) h += b.horizontal();
    if (static_cast<int>(bonds.size()) - h != 2 * n) return;
    TwoDirected c = classify_2directed(bonds);
    if (c == TwoDirected::Primitive || (!primitive_only && c == TwoDirected::Yes)) out[static_cast<std::size_t>(h)] += 1;
  });
  return out;
}

}  // namespace dba::animals
