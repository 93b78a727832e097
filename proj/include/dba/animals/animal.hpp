#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace dba::animals {

struct Vertex {
  int col = 0;
  int row = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

enum class Orientation : std::uint8_t { Horizontal = 0, Vertical = 1 };

// Horizontal bonds run tail -> east neighbour, vertical bonds tail -> north neighbour.
struct Bond {
  int col = 0;
  int row = 0;
  Orientation o = Orientation::Horizontal;

  static Bond h(int col, int row) { return {col, row, Orientation::Horizontal}; }
  static Bond v(int col, int row) { return {col, row, Orientation::Vertical}; }
  bool horizontal() const { return o == Orientation::Horizontal; }
  Vertex tail() const { return {col, row}; }
  Vertex head() const { return horizontal() ? Vertex{col + 1, row} : Vertex{col, row + 1}; }
  friend auto operator<=>(const Bond&, const Bond&) = default;
};

class BondAnimal {
 public:
  BondAnimal() = default;

  // Translates to min col = min row = 0 and sorts. Throws ConnectivityError for
  // a disconnected set, std::invalid_argument for a repeated bond.
  static BondAnimal canonicalize(std::vector<Bond> bonds);

  const std::vector<Bond>& bonds() const { return bonds_; }
  bool empty() const { return bonds_.empty(); }
  std::size_t size() const { return bonds_.size(); }
  int h_count() const { return h_; }
  int v_count() const { return static_cast<int>(bonds_.size()) - h_; }
  bool contains(const Bond& b) const;
  std::vector<Vertex> vertices() const;
  int degree(const Vertex& p) const;
  int max_col() const;
  int max_row() const;

  // Packed sorted bond list; equal keys iff equal animals.
  const std::vector<std::uint32_t>& key() const { return key_; }
  std::string to_string() const;

  friend bool operator==(const BondAnimal& a, const BondAnimal& b) { return a.bonds_ == b.bonds_; }
  friend bool operator<(const BondAnimal& a, const BondAnimal& b) { return a.key_ < b.key_; }

 private:
  std::vector<Bond> bonds_;
  std::vector<std::uint32_t> key_;
  int h_ = 0;
};

struct AnimalHash {
  std::size_t operator()(const BondAnimal& a) const;
};

bool connected(const std::vector<Bond>& bonds);

// Vertices from which every bond's tail is reachable along oriented bonds.
// The empty animal has the single conventional root (0, 0).
std::set<Vertex> directed_roots(const BondAnimal& a);
bool is_directed(const BondAnimal& a);

// Parses "h(0,0) v(1,0) ..." as produced by to_string.
BondAnimal parse_animal(const std::string& text);

}  // namespace dba::animals
