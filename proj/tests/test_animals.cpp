#include "doctest.h"
#include "dba/algebra/series.hpp"
#include "dba/animals/enumerate.hpp"
#include "dba/animals/two_directed.hpp"
#include "dba/error.hpp"

using namespace dba;
using namespace dba::animals;

namespace {

const EnumerationResult& brute8() {
  static const EnumerationResult r = enumerate_directed(8);
  return r;
}

std::vector<Int> ints(std::initializer_list<long> v) {
  std::vector<Int> r;
  for (long c : v) r.emplace_back(c);
  return r;
}

}  // namespace

TEST_CASE("canonicalize") {
  BondAnimal a = BondAnimal::canonicalize({Bond::h(5, 7)});
  CHECK(a.bonds() == std::vector<Bond>{Bond::h(0, 0)});
  CHECK(BondAnimal::canonicalize({}).empty());
  CHECK_THROWS_AS(BondAnimal::canonicalize({Bond::v(0, 0), Bond::h(3, 3)}), ConnectivityError);
  CHECK_THROWS_AS(BondAnimal::canonicalize({Bond::v(0, 0), Bond::v(0, 0)}), std::invalid_argument);
  BondAnimal b = BondAnimal::canonicalize({Bond::v(-2, 4), Bond::h(-3, 4)});
  CHECK(b.h_count() == 1);
  CHECK(b.v_count() == 1);
  CHECK(b.to_string() == "h(0,0) v(1,0)");
  CHECK(parse_animal(b.to_string()) == b);
}

TEST_CASE("directed roots") {
  CHECK(directed_roots(BondAnimal::canonicalize({Bond::h(0, 0)})) == std::set<Vertex>{{0, 0}});
  CHECK(directed_roots(BondAnimal::canonicalize({Bond::h(0, 0), Bond::v(1, 0)})) == std::set<Vertex>{{0, 0}});
  CHECK(directed_roots(BondAnimal::canonicalize({Bond::h(0, 1), Bond::v(1, 0)})).empty());
  CHECK(directed_roots(BondAnimal()) == std::set<Vertex>{{0, 0}});
}

TEST_CASE("brute force small counts") {
  const SeriesTable& t = brute8().table;
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(1, 0) == 1);
  CHECK(t.at(2, 0) == 1);
  CHECK(t.at(1, 1) == 3);
  CHECK(t.at(2, 1) == 6);
  CHECK(t.at(0, 2) == 1);
  CHECK_THROWS_AS(enumerate_directed(13), BudgetExceeded);
}

TEST_CASE("brute force emits only directed animals and rejects only undirected ones") {
  const EnumerationResult& r = brute8();
  for (const auto& a : r.animals) CHECK_FALSE(directed_roots(a).empty());
  // regrow one level and classify every candidate independently
  std::size_t undirected = 0;
  std::size_t disconnected = 0;
  for (const auto& a : r.animals) {
    if (a.size() != 5) continue;
    for (const auto& p : a.vertices()) {
      for (Bond b : {Bond::h(p.col, p.row), Bond::v(p.col, p.row), Bond::h(p.col - 1, p.row), Bond::v(p.col, p.row - 1)}) {
        if (a.contains(b)) continue;
        auto bonds = a.bonds();
        bonds.push_back(b);
        if (!connected(bonds)) {
          ++disconnected;
        } else if (directed_roots(BondAnimal::canonicalize(bonds)).empty()) {
          ++undirected;
        }
      }
    }
  }
  CHECK(disconnected == 0);
  CHECK(undirected > 0);
}

TEST_CASE("worker count does not change the result") {
  EnumerationResult a = enumerate_directed(7, 1);
  EnumerationResult b = enumerate_directed(7, 3);
  CHECK(a.table.entries == b.table.entries);
  CHECK(a.animals == b.animals);
}

TEST_CASE("streaming growth agrees with brute force") {
  std::map<std::pair<int, int>, Int> counts;
  for_each_directed({8, 8, -1, -1}, [&](const std::vector<Bond>& bonds) {
    int h = 0;
    for (const auto& b : bonds) h += b.horizontal();
    int v = static_cast<int>(bonds.size()) - h;
    if (h + v <= 8) counts[{h, v}] += 1;
  });
  CHECK(counts == brute8().table.entries);
}

TEST_CASE("transfer series") {
  SeriesTable t0 = transfer_series(0, 10);
  for (int m = 0; m <= 10; ++m) CHECK(t0.at(m, 0) == 1);
  // expansion of (1 + 2x + x^2 - x^3)/((1 - x)^5 (1 + x)): 1, 6, 20, 49
  CHECK(transfer_series(2, 3).column(2, 3) == ints({1, 6, 20, 49}));
  CHECK(transfer_series(1, 5).at(5, 1) == 21);
  CHECK_THROWS_AS(transfer_series(7, 10), BudgetExceeded);
  CHECK_THROWS_AS(transfer_series(2, 81), BudgetExceeded);
  for (int n = 0; n <= 8; ++n) {
    SeriesTable t = transfer_series(std::min(n, 6), 8 - std::min(n, 6));
    int nn = std::min(n, 6);
    for (int m = 0; m + nn <= 8; ++m) CHECK(t.at(m, nn) == brute8().table.at(m, nn));
  }
}

TEST_CASE("listed H_0, H_1, H_2 series") {
  const SeriesTable& t = brute8().table;
  auto h1 = series_of(RationalFunction(Poly::one(), Poly({1, -1}).pow(3)), 7);
  auto h2 = series_of(RationalFunction(Poly({1, 2, 1, -1}), Poly({1, -1}).pow(5) * Poly({1, 1})), 6);
  for (int m = 0; m <= 8; ++m) CHECK(t.at(m, 0) == 1);
  for (int m = 0; m <= 7; ++m) CHECK(Rat(t.at(m, 1)) == h1[static_cast<std::size_t>(m)]);
  for (int m = 0; m <= 6; ++m) CHECK(Rat(t.at(m, 2)) == h2[static_cast<std::size_t>(m)]);
}

TEST_CASE("series table json") {
  SeriesTable t = transfer_series(2, 5);
  Json j = t.to_json();
  CHECK(j["convention"] == "empty_included");
  CHECK(j["entries"][3] == Json::parse(R"([3, 2, "49"])"));
  SeriesTable back = SeriesTable::from_json(Json::parse(j.dump()));
  CHECK(back.entries == t.entries);
}

TEST_CASE("2-directed classification") {
  BondAnimal unit = BondAnimal::canonicalize({Bond::v(0, 0), Bond::v(1, 0), Bond::h(0, 0)});
  CHECK(classify_2directed(unit) == TwoDirected::Primitive);
  CHECK(classify_2directed(BondAnimal::canonicalize({Bond::h(0, 0)})) == TwoDirected::No);
  BondAnimal tail = BondAnimal::canonicalize({Bond::v(0, 0), Bond::v(1, 0), Bond::h(0, 0), Bond::h(1, 0)});
  CHECK(classify_2directed(tail) == TwoDirected::Yes);
  BondAnimal three = BondAnimal::canonicalize({Bond::v(0, 0), Bond::v(1, 0), Bond::v(2, 0), Bond::h(0, 0), Bond::h(1, 0)});
  CHECK(classify_2directed(three) == TwoDirected::No);
}

TEST_CASE("primitive 2-directed counts") {
  CHECK(enumerate_primitive_2directed(1, 5) == ints({0, 1, 2, 2, 3, 3}));
  CHECK(count_2directed(1, 4, false) == ints({0, 1, 5, 14, 31}));
  CHECK_THROWS_AS(enumerate_primitive_2directed(3, 20), BudgetExceeded);
  // the streaming oracle agrees with filtering the brute-force list
  std::vector<Int> filtered(5);
  for (const auto& a : brute8().animals) {
    if (a.v_count() == 2 && a.h_count() <= 4 && classify_2directed(a) == TwoDirected::Primitive) filtered[static_cast<std::size_t>(a.h_count())] += 1;
  }
  CHECK(filtered == enumerate_primitive_2directed(1, 4));
  std::vector<Int> filtered2(5);
  for (const auto& a : brute8().animals) {
    if (a.v_count() == 4 && a.h_count() <= 4 && classify_2directed(a) == TwoDirected::Primitive) filtered2[static_cast<std::size_t>(a.h_count())] += 1;
  }
  CHECK(filtered2 == enumerate_primitive_2directed(2, 4));
}
