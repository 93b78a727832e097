#include "dba/animals/animal.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "dba/error.hpp"

namespace dba::animals {

namespace {

std::uint32_t pack(const Bond& b) {
  return (static_cast<std::uint32_t>(b.col) << 16) | (static_cast<std::uint32_t>(b.row) << 1) |
         static_cast<std::uint32_t>(b.o);
}

}  // namespace

bool connected(const std::vector<Bond>& bonds) {
  if (bonds.size() <= 1) return true;
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const auto& b : bonds) {
    adj[b.tail()].push_back(b.head());
    adj[b.head()].push_back(b.tail());
  }
  std::set<Vertex> seen{bonds[0].tail()};
  std::vector<Vertex> stack{bonds[0].tail()};
  while (!stack.empty()) {
    Vertex p = stack.back();
    stack.pop_back();
    for (const auto& q : adj[p]) {
      if (seen.insert(q).second) stack.push_back(q);
    }
  }
  return seen.size() == adj.size();
}

BondAnimal BondAnimal::canonicalize(std::vector<Bond> bonds) {
  BondAnimal a;
  if (bonds.empty()) return a;
  std::sort(bonds.begin(), bonds.end());
  if (std::adjacent_find(bonds.begin(), bonds.end()) != bonds.end()) {
    throw std::invalid_argument("repeated bond");
  }
  if (!connected(bonds)) throw ConnectivityError("bond set is not connected");
  int c0 = bonds[0].col;
  int r0 = bonds[0].row;
  for (const auto& b : bonds) {
    c0 = std::min(c0, b.col);
    r0 = std::min(r0, b.row);
  }
  for (auto& b : bonds) {
    b.col -= c0;
    b.row -= r0;
    if (b.horizontal()) ++a.h_;
  }
  a.bonds_ = std::move(bonds);
  a.key_.reserve(a.bonds_.size());
  for (const auto& b : a.bonds_) a.key_.push_back(pack(b));
  return a;
}

bool BondAnimal::contains(const Bond& b) const { return std::binary_search(bonds_.begin(), bonds_.end(), b); }

std::vector<Vertex> BondAnimal::vertices() const {
  std::vector<Vertex> v;
  for (const auto& b : bonds_) {
    v.push_back(b.tail());
    v.push_back(b.head());
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

int BondAnimal::degree(const Vertex& p) const {
  int d = 0;
  for (const auto& b : bonds_) d += (b.tail() == p) + (b.head() == p);
  return d;
}

int BondAnimal::max_col() const {
  int m = 0;
  for (const auto& b : bonds_) m = std::max(m, b.head().col);
  return m;
}

int BondAnimal::max_row() const {
  int m = 0;
  for (const auto& b : bonds_) m = std::max(m, b.head().row);
  return m;
}

std::string BondAnimal::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < bonds_.size(); ++i) {
    if (i) os << ' ';
    os << (bonds_[i].horizontal() ? 'h' : 'v') << '(' << bonds_[i].col << ',' << bonds_[i].row << ')';
  }
  return os.str();
}

std::size_t AnimalHash::operator()(const BondAnimal& a) const {
  std::size_t h = 1469598103934665603ULL;
  for (auto k : a.key()) {
    h ^= k;
    h *= 1099511628211ULL;
  }
  return h;
}

std::set<Vertex> directed_roots(const BondAnimal& a) {
  if (a.empty()) return {Vertex{0, 0}};
  std::map<Vertex, std::vector<Vertex>> out;
  std::set<Vertex> tails;
  for (const auto& b : a.bonds()) {
    out[b.tail()].push_back(b.head());
    tails.insert(b.tail());
  }
  std::set<Vertex> roots;
  for (const auto& r : a.vertices()) {
    std::set<Vertex> seen{r};
    std::vector<Vertex> stack{r};
    while (!stack.empty()) {
      Vertex p = stack.back();
      stack.pop_back();
      auto it = out.find(p);
      if (it == out.end()) continue;
      for (const auto& q : it->second) {
        if (seen.insert(q).second) stack.push_back(q);
      }
    }
    if (std::includes(seen.begin(), seen.end(), tails.begin(), tails.end())) roots.insert(r);
  }
  return roots;
}

bool is_directed(const BondAnimal& a) { return !directed_roots(a).empty(); }

BondAnimal parse_animal(const std::string& text) {
  static const std::regex re(R"(([hv])\((-?\d+),(-?\d+)\))");
  std::vector<Bond> bonds;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), re); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    bonds.push_back({std::stoi(m[2]), std::stoi(m[3]), m[1] == "h" ? Orientation::Horizontal : Orientation::Vertical});
  }
  return BondAnimal::canonicalize(std::move(bonds));
}

}  // namespace dba::animals
