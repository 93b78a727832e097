#include "doctest.h"
#include "dba/animals/enumerate.hpp"
#include "dba/animals/two_directed.hpp"
#include "dba/error.hpp"
#include "dba/haruspicy/haruspicy.hpp"

using namespace dba;
using namespace dba::animals;
using namespace dba::haruspicy;

namespace {

const std::vector<BondAnimal>& upto7() {
  static const std::vector<BondAnimal> r = enumerate_directed(7).animals;
  return r;
}

BondAnimal A(const char* s) { return parse_animal(s); }

const char* kSquare = "h(0,0) h(0,1) v(0,0) v(1,0)";
const char* kWide = "h(0,0) h(1,0) h(0,1) h(1,1) v(0,0) v(2,0)";
const char* kTall = "h(0,0) h(0,1) h(0,2) v(0,0) v(1,0) v(0,1) v(1,1)";

}  // namespace

TEST_CASE("decompose small shapes") {
  SectionDecomposition sq = decompose(A(kSquare));
  CHECK(sq.sigma == std::map<int, int>{{2, 1}});
  CHECK(sq.between_page_vbonds == 2);
  CHECK(sq.within_page_vbonds == 0);

  CHECK(decompose(A("h(0,0)")).sigma == std::map<int, int>{{1, 1}});

  SectionDecomposition dom = decompose(A("v(0,0) v(0,1)"));
  CHECK(dom.pages.empty());
  CHECK(dom.between_page_vbonds + dom.within_page_vbonds == 2);

  CHECK(decompose(A(kTall)).sigma == std::map<int, int>{{3, 1}});

  // an L: the vertical bond at the right end separates the two horizontal bonds
  SectionDecomposition l = decompose(A("h(0,0) v(0,0) h(0,1)"));
  CHECK(l.pages.size() == 2);
  CHECK(l.sigma == std::map<int, int>{{1, 2}});

  Json j = decompose(A(kWide)).to_json();
  CHECK(j["pages"].size() == 1);
  CHECK(j["pages"][0]["sections"].size() == 2);
  CHECK(j["sigma"]["2"] == 2);
  CHECK(j["vbonds"]["between"] == 2);
}

TEST_CASE("section counts add up") {
  for (const BondAnimal& a : upto7()) {
    SectionDecomposition d = decompose(a);
    int h = 0;
    for (auto [k, c] : d.sigma) h += k * c;
    CHECK(h == a.h_count());
    CHECK(d.between_page_vbonds + d.within_page_vbonds == a.v_count());
    for (const Page& p : d.pages) CHECK(p.contiguous);
  }
}

TEST_CASE("deletion") {
  BondAnimal wide = A(kWide);
  auto dups = duplicate_sections(wide);
  REQUIRE(dups.size() == 1);
  CHECK(dups[0].column == 1);
  CHECK(delete_duplicate_section(wide, dups[0]) == A(kSquare));

  CHECK_THROWS_AS(delete_duplicate_section(wide, decompose(wide).pages[0].sections[0]), NotADuplicate);

  // the two cells of a full domino are separated by the middle vertical bond
  BondAnimal full = A("h(0,0) h(1,0) h(0,1) h(1,1) v(0,0) v(1,0) v(2,0)");
  CHECK(duplicate_sections(full).empty());
  CHECK(reduce_to_minimal(full) == full);
}

TEST_CASE("reduction") {
  CHECK(reduce_to_minimal(A("h(0,0) h(1,0) h(2,0)")) == A("h(0,0)"));
  CHECK(reduce_to_minimal(A("h(0,0) h(1,0) h(2,0) h(3,0) h(4,0)")) == A("h(0,0)"));
  CHECK(reduce_to_minimal(A("h(0,0) h(1,0) h(2,0) h(0,1) h(1,1) h(2,1) v(0,0) v(3,0)")) == A(kSquare));
  CHECK(reduce_to_minimal(A(kSquare)) == A(kSquare));
  CHECK(reduce_to_minimal(A(kTall)) == A(kTall));
  CHECK(reduce_to_minimal(BondAnimal()) == BondAnimal());

  BondAnimal path3 = A("h(0,0) h(1,0) h(2,0)");
  auto dups = duplicate_sections(path3);
  REQUIRE(dups.size() == 2);
  CHECK(delete_duplicate_section(path3, dups[0]) == A("h(0,0) h(1,0)"));
  CHECK(delete_duplicate_section(path3, dups[1]) == A("h(0,0) h(1,0)"));
}

TEST_CASE("duplication inverts deletion") {
  BondAnimal sq = A(kSquare);
  Section s = decompose(sq).pages[0].sections[0];
  CHECK(duplicate_section(sq, s) == A(kWide));
  BondAnimal tall2 = duplicate_section(A(kTall), decompose(A(kTall)).pages[0].sections[0]);
  CHECK(tall2.h_count() == 6);
  CHECK(tall2.v_count() == 4);
  CHECK(reduce_to_minimal(tall2) == A(kTall));
}

TEST_CASE("closure under deletion and duplication") {
  auto directed = closure_check([](const BondAnimal& a) { return is_directed(a); }, upto7(), "directed");
  CHECK(directed.violations.empty());
  CHECK(directed.deletions > 1000);
  auto two = closure_check([](const BondAnimal& a) { return classify_2directed(a) != TwoDirected::No; }, upto7(),
                           "2-directed");
  CHECK(two.violations.empty());
}

TEST_CASE("confluence up to 7 bonds") {
  ConfluenceReport r = confluence_check(upto7(), 5, 11);
  CHECK(r.animals == upto7().size());
  CHECK(r.violations.empty());
}

TEST_CASE("k-section lemma up to 8 bonds") {
  LemmaReport r = verify_ksection_lemma(8, 1);
  CHECK(r.violations.empty());
  CHECK(r.equality_cases > 0);
  // with only the left wall the column splits into three 1-sections
  CHECK(decompose(A("h(0,0) h(0,1) h(0,2) v(0,0) v(0,1)")).sigma == std::map<int, int>{{1, 3}});
}

TEST_CASE("minimal census") {
  CensusReport c0 = minimal_census(0, 6);
  CHECK(c0.minimal == std::vector<BondAnimal>{BondAnimal(), A("h(0,0)")});
  CHECK(census_series(c0.minimal, 6) == std::vector<Int>(7, 1));

  CensusReport c1 = minimal_census(1, 7, 4);
  CHECK(c1.minimal.size() == 8);
  CHECK(c1.stabilized);
  CHECK(c1.non_decreasing);
  std::vector<Int> h1;
  for (int m = 0; m <= 6; ++m) h1.emplace_back((m + 1) * (m + 2) / 2);
  CHECK(census_series(c1.minimal, 6) == h1);
  for (const BondAnimal& m : c1.minimal) CHECK(reduce_to_minimal(m) == m);
}
