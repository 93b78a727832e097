#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dba/algebra/rat.hpp"
#include "dba/algebra/serialize.hpp"
#include "dba/animals/animal.hpp"

namespace dba::haruspicy {

using animals::BondAnimal;

struct Section {
  int page = 0;
  int column = 0;         // horizontal bonds (column, row) -> (column + 1, row)
  std::vector<int> rows;  // ascending
  int k() const { return static_cast<int>(rows.size()); }
};

struct Page {
  int id = 0;
  int col_lo = 0;
  int col_hi = 0;
  bool contiguous = true;
  std::vector<Section> sections;  // by column
};

struct SectionDecomposition {
  std::vector<Page> pages;   // by leftmost column, then lowest row
  std::map<int, int> sigma;  // k -> number of k-sections
  int between_page_vbonds = 0;
  int within_page_vbonds = 0;

  std::vector<Section> sections() const;
  Json to_json() const;
};

SectionDecomposition decompose(const BondAnimal& a);

// Sections whose left neighbour in the same page is identical and may be deleted.
std::vector<Section> duplicate_sections(const BondAnimal& a);

// Throws NotADuplicate unless s (as reported by decompose(a)) is a duplicate.
BondAnimal delete_duplicate_section(const BondAnimal& a, const Section& s);
// Inserts a copy of s immediately to its right.
BondAnimal duplicate_section(const BondAnimal& a, const Section& s);

// Deletes the leftmost, then topmost, duplicate until none is left.
BondAnimal reduce_to_minimal(const BondAnimal& a);
// Same, choosing uniformly among the duplicates at each step.
BondAnimal reduce_randomly(const BondAnimal& a, std::uint64_t seed);

struct CensusReport {
  int n_vertical = 0;
  std::vector<int> budgets;
  std::vector<std::size_t> sizes;  // census size per budget
  std::vector<BondAnimal> minimal;  // at the largest budget, sorted
  bool non_decreasing = true;
  bool stabilized = false;          // last two budgets give the same set
};

CensusReport minimal_census(int n_vertical, int bond_budget, int first_budget = -1);

// Coefficients 0..order of the sum of x^h / (1 - x)^(number of sections) over the census.
std::vector<Int> census_series(const std::vector<BondAnimal>& minimal, int order);

struct LemmaReport {
  std::size_t animals = 0;
  std::size_t sections = 0;
  std::size_t equality_cases = 0;
  std::vector<std::string> violations;
};

// k-section => v >= 2k - 2, and v = 2k - 2 => every bond-row has two vertical bonds.
LemmaReport verify_ksection_lemma(int max_bonds, int workers = 1);
void check_ksection(const BondAnimal& a, LemmaReport& r);

struct ClosureReport {
  std::size_t samples = 0;
  std::size_t deletions = 0;
  std::size_t duplications = 0;
  std::vector<std::string> violations;
};

// Applies every legal single deletion and every duplication; the predicate value must not change.
ClosureReport closure_check(const std::function<bool(const BondAnimal&)>& predicate,
                            const std::vector<BondAnimal>& samples, const std::string& name);

struct ConfluenceReport {
  std::size_t animals = 0;
  std::size_t orders = 0;
  std::vector<std::string> violations;
};

ConfluenceReport confluence_check(const std::vector<BondAnimal>& samples, int orders, std::uint64_t seed);

}  // namespace dba::haruspicy
