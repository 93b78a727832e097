#include "dba/haruspicy/haruspicy.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "dba/animals/enumerate.hpp"
#include "dba/error.hpp"

namespace dba::haruspicy {

using animals::Bond;

namespace {

enum class Ray { Left, Right, Full };
enum class Side { West, East, Removed };

struct Band {
  int lo = 0;
  int hi = 0;
  Ray top = Ray::Full;
  Ray bottom = Ray::Full;
  friend bool operator==(const Band&, const Band&) = default;
};

struct Cut {
  int col;
  int lo;  // lowest blocked tile row
  int hi;  // highest blocked tile row
};

class Geometry {
 public:
  explicit Geometry(const BondAnimal& a) : a_(a) {
    if (a.empty()) return;
    width_ = a.max_col();
    height_ = a.max_row();
    left_.assign(std::max(height_, 0), INT32_MAX);
    right_.assign(std::max(height_, 0), INT32_MIN);
    for (const Bond& b : a.bonds()) {
      if (b.horizontal()) continue;
      left_[b.row] = std::min(left_[b.row], b.col);
      right_[b.row] = std::max(right_[b.row], b.col);
    }
    for (int r = 0; r < height_; ++r) {
      if (row_empty(r)) continue;
      std::set<int> ends{left_[r], right_[r]};
      for (int c : ends) {
        int up = r + 1;
        while (!covers_vertex(up, c)) ++up;
        int down = r - 1;
        while (!covers_vertex(down, c)) --down;
        cuts_.push_back({c, down + 1, up});
      }
    }
    build_tiles();
  }

  int width() const { return width_; }
  int height() const { return height_; }

  bool row_empty(int r) const { return r < 0 || r >= height_ || left_[r] == INT32_MAX; }

  // The section line at y = r + 1/2 contains the lattice point x = c.
  bool covers_vertex(int r, int c) const { return row_empty(r) || c <= left_[r] || c >= right_[r]; }

  // Tiles (i, r) and (i, r + 1) are separated.
  bool v_blocked(int i, int r) const { return row_empty(r) || i + 1 <= left_[r] || i >= right_[r]; }

  Ray ray(int i, int r) const {
    if (row_empty(r)) return Ray::Full;
    return i + 1 <= left_[r] ? Ray::Left : Ray::Right;
  }

  // Tiles (i - 1, j) and (i, j) are separated.
  bool h_blocked(int i, int j) const {
    for (const Cut& c : cuts_)
      if (c.col == i && c.lo <= j && j <= c.hi) return true;
    return false;
  }

  bool vbond_between(const Bond& b) const {
    for (const Cut& c : cuts_)
      if (c.col == b.col && c.lo <= b.row && b.row + 1 <= c.hi) return true;
    return false;
  }

  int tile_page(int i, int j) const { return comp_[index(i, j)]; }

  Band band(int i, int j) const {
    Band b{j, j};
    while (!v_blocked(i, b.hi)) ++b.hi;
    while (!v_blocked(i, b.lo - 1)) --b.lo;
    b.top = ray(i, b.hi);
    b.bottom = ray(i, b.lo - 1);
    return b;
  }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * width_ + i; }

  void build_tiles() {
    std::size_t n = static_cast<std::size_t>(width_) * (height_ + 1);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    for (int j = 0; j <= height_; ++j)
      for (int i = 0; i < width_; ++i) {
        if (i > 0 && !h_blocked(i, j)) unite(index(i, j), index(i - 1, j));
        if (j < height_ && !v_blocked(i, j)) unite(index(i, j), index(i, j + 1));
      }
    comp_.resize(n);
    for (std::size_t t = 0; t < n; ++t) comp_[t] = find(static_cast<int>(t));
  }

  const BondAnimal& a_;
  int width_ = 0;
  int height_ = 0;
  std::vector<int> left_, right_;
  std::vector<Cut> cuts_;
  std::vector<int> comp_;
};

Side side_of(const Bond& b, const Band& band, int i) {
  auto outside = [](Ray r) { return r == Ray::Right ? Side::West : Side::East; };
  if (b.horizontal()) {
    if (b.row > band.hi) return outside(band.top);
    if (b.row < band.lo) return outside(band.bottom);
  } else {
    if (b.row >= band.hi) return outside(band.top);
    if (b.row + 1 <= band.lo) return outside(band.bottom);
  }
  return b.col >= i + 1 ? Side::East : Side::West;
}

struct Decomposed {
  SectionDecomposition d;
  std::map<int, int> page_of_comp;
};

Decomposed decompose_with(const BondAnimal& a, const Geometry& g) {
  Decomposed out;
  std::map<int, std::map<int, std::vector<int>>> by_comp;  // comp -> column -> rows
  for (const Bond& b : a.bonds()) {
    if (b.horizontal()) {
      by_comp[g.tile_page(b.col, b.row)][b.col].push_back(b.row);
    } else if (g.vbond_between(b)) {
      ++out.d.between_page_vbonds;
    } else {
      ++out.d.within_page_vbonds;
    }
  }
  std::vector<std::pair<std::pair<int, int>, int>> order;
  for (auto& [comp, cols] : by_comp) {
    auto& first = *cols.begin();
    order.push_back({{first.first, *std::min_element(first.second.begin(), first.second.end())}, comp});
  }
  std::sort(order.begin(), order.end());
  for (std::size_t p = 0; p < order.size(); ++p) {
    int comp = order[p].second;
    out.page_of_comp[comp] = static_cast<int>(p);
    Page page;
    page.id = static_cast<int>(p);
    for (auto& [col, rows] : by_comp[comp]) {
      std::sort(rows.begin(), rows.end());
      page.sections.push_back({page.id, col, rows});
      ++out.d.sigma[static_cast<int>(rows.size())];
    }
    page.col_lo = page.sections.front().column;
    page.col_hi = page.sections.back().column;
    page.contiguous = page.col_hi - page.col_lo + 1 == static_cast<int>(page.sections.size());
    out.d.pages.push_back(std::move(page));
  }
  return out;
}

const Section* find_section(const SectionDecomposition& d, int page, int column) {
  if (page < 0 || page >= static_cast<int>(d.pages.size())) return nullptr;
  for (const Section& s : d.pages[page].sections)
    if (s.column == column) return &s;
  return nullptr;
}

// Band holding every row of s, or nullopt if the rows are split.
std::optional<Band> section_band(const Geometry& g, const Section& s) {
  Band b = g.band(s.column, s.rows.front());
  if (s.rows.back() > b.hi) return std::nullopt;
  return b;
}

std::string why_not_duplicate(const BondAnimal& a, const Geometry& g, const SectionDecomposition& d,
                              const Section& s) {
  const Section* here = find_section(d, s.page, s.column);
  if (!here || here->rows != s.rows) return "no such section";
  const Section* west = find_section(d, s.page, s.column - 1);
  if (!west) return "no section to the west in the same page";
  if (west->rows != here->rows) return "west section has different rows";
  auto b = section_band(g, *here);
  auto bw = section_band(g, *west);
  if (!b || !bw) return "section is not vertically connected";
  if (!(*b == *bw)) return "bands differ";
  for (int j = b->lo; j <= b->hi; ++j)
    if (g.h_blocked(s.column, j)) return "cut between the sections";
  for (int r = b->lo; r < b->hi; ++r)
    if (a.contains(Bond::v(s.column, r))) return "vertical bond between the sections";
  return {};
}

BondAnimal rebuild(const BondAnimal& a, const Band& band, int i, int shift, bool remove_column) {
  std::vector<Bond> out;
  out.reserve(a.size());
  for (const Bond& b : a.bonds()) {
    if (remove_column && b.horizontal() && b.col == i && b.row >= band.lo && b.row <= band.hi) continue;
    Bond c = b;
    if (side_of(b, band, i) == Side::East) c.col += shift;
    out.push_back(c);
  }
  return BondAnimal::canonicalize(std::move(out));
}

}  // namespace

std::vector<Section> SectionDecomposition::sections() const {
  std::vector<Section> out;
  for (const Page& p : pages) out.insert(out.end(), p.sections.begin(), p.sections.end());
  return out;
}

Json SectionDecomposition::to_json() const {
  Json j;
  j["pages"] = Json::array();
  for (const Page& p : pages) {
    Json jp{{"id", p.id}, {"columns", {p.col_lo, p.col_hi}}, {"contiguous", p.contiguous}};
    jp["sections"] = Json::array();
    for (const Section& s : p.sections) jp["sections"].push_back({{"column", s.column}, {"rows", s.rows}, {"k", s.k()}});
    j["pages"].push_back(jp);
  }
  Json sig = Json::object();
  for (auto [k, c] : sigma) sig[std::to_string(k)] = c;
  j["sigma"] = sig;
  j["vbonds"] = {{"within", within_page_vbonds}, {"between", between_page_vbonds}};
  return j;
}

SectionDecomposition decompose(const BondAnimal& a) {
  Geometry g(a);
  return decompose_with(a, g).d;
}

std::vector<Section> duplicate_sections(const BondAnimal& a) {
  Geometry g(a);
  SectionDecomposition d = decompose_with(a, g).d;
  std::vector<Section> out;
  for (const Section& s : d.sections())
    if (why_not_duplicate(a, g, d, s).empty()) out.push_back(s);
  return out;
}

BondAnimal delete_duplicate_section(const BondAnimal& a, const Section& s) {
  Geometry g(a);
  SectionDecomposition d = decompose_with(a, g).d;
  std::string why = why_not_duplicate(a, g, d, s);
  if (!why.empty()) throw NotADuplicate("section at column " + std::to_string(s.column) + ": " + why);
  return rebuild(a, *section_band(g, s), s.column, -1, true);
}

BondAnimal duplicate_section(const BondAnimal& a, const Section& s) {
  Geometry g(a);
  SectionDecomposition d = decompose_with(a, g).d;
  const Section* here = find_section(d, s.page, s.column);
  if (!here || here->rows != s.rows) throw std::invalid_argument("duplicate_section: no such section");
  auto band = section_band(g, *here);
  if (!band) throw std::invalid_argument("duplicate_section: section is not vertically connected");
  std::vector<Bond> bonds;
  for (const Bond& b : a.bonds()) {
    Bond c = b;
    if (side_of(b, *band, s.column) == Side::East) c.col += 1;
    bonds.push_back(c);
  }
  for (int r : s.rows) bonds.push_back(Bond::h(s.column + 1, r));
  return BondAnimal::canonicalize(std::move(bonds));
}

BondAnimal reduce_to_minimal(const BondAnimal& a) {
  BondAnimal cur = a;
  for (;;) {
    auto dups = duplicate_sections(cur);
    if (dups.empty()) return cur;
    auto best = std::min_element(dups.begin(), dups.end(), [](const Section& x, const Section& y) {
      if (x.column != y.column) return x.column < y.column;
      return x.rows.back() > y.rows.back();
    });
    cur = delete_duplicate_section(cur, *best);
  }
}

BondAnimal reduce_randomly(const BondAnimal& a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BondAnimal cur = a;
  for (;;) {
    auto dups = duplicate_sections(cur);
    if (dups.empty()) return cur;
    std::uniform_int_distribution<std::size_t> pick(0, dups.size() - 1);
    cur = delete_duplicate_section(cur, dups[pick(rng)]);
  }
}

CensusReport minimal_census(int n_vertical, int bond_budget, int first_budget) {
  if (first_budget < 0) first_budget = std::max(n_vertical, bond_budget - 3);
  CensusReport rep;
  rep.n_vertical = n_vertical;
  std::map<BondAnimal, int> first_seen;  // minimal animal -> smallest animal size reaching it
  animals::GrowthLimits lim{bond_budget - n_vertical, n_vertical};
  animals::for_each_directed(lim, [&](const std::vector<Bond>& bonds) {
    BondAnimal a = BondAnimal::canonicalize(bonds);
    if (a.v_count() != n_vertical) return;
    BondAnimal m = reduce_to_minimal(a);
    int sz = static_cast<int>(a.size());
    auto [it, fresh] = first_seen.emplace(m, sz);
    if (!fresh) it->second = std::min(it->second, sz);
  });
  for (int b = first_budget; b <= bond_budget; ++b) {
    std::size_t n = 0;
    for (auto& [m, sz] : first_seen) n += sz <= b;
    if (!rep.sizes.empty() && n < rep.sizes.back()) rep.non_decreasing = false;
    rep.budgets.push_back(b);
    rep.sizes.push_back(n);
  }
  rep.stabilized = rep.sizes.size() >= 2 && rep.sizes.back() == rep.sizes[rep.sizes.size() - 2];
  for (auto& [m, sz] : first_seen) rep.minimal.push_back(m);
  return rep;
}

std::vector<Int> census_series(const std::vector<BondAnimal>& minimal, int order) {
  std::vector<Int> out(order + 1, 0);
  for (const BondAnimal& m : minimal) {
    int h = m.h_count();
    unsigned long s = decompose(m).sections().size();
    for (int e = h; e <= order; ++e) {
      if (s == 0) {
        out[e] += e == h ? 1 : 0;
        continue;
      }
      Int c;
      mpz_bin_uiui(c.get_mpz_t(), e - h + s - 1, s - 1);
      out[e] += c;
    }
  }
  return out;
}

void check_ksection(const BondAnimal& a, LemmaReport& r) {
  SectionDecomposition d = decompose(a);
  int v = a.v_count();
  for (const Section& s : d.sections()) {
    ++r.sections;
    int k = s.k();
    if (v < 2 * k - 2) {
      r.violations.push_back(a.to_string() + ": " + std::to_string(k) + "-section with " + std::to_string(v) +
                             " vertical bonds");
      continue;
    }
    if (v != 2 * k - 2) continue;
    ++r.equality_cases;
    std::map<int, int> per_row;
    for (const Bond& b : a.bonds())
      if (!b.horizontal()) ++per_row[b.row];
    for (int row = 0; row < a.max_row(); ++row)
      if (per_row[row] != 2) {
        r.violations.push_back(a.to_string() + ": equality case with " + std::to_string(per_row[row]) +
                               " vertical bonds in bond-row " + std::to_string(row));
        break;
      }
  }
}

LemmaReport verify_ksection_lemma(int max_bonds, int workers) {
  LemmaReport total;
  std::vector<std::vector<Bond>> all;
  for (int v = 0; v <= max_bonds; ++v) {
    animals::GrowthLimits lim{max_bonds - v, v};
    animals::for_each_directed(lim, [&](const std::vector<Bond>& b) {
      int vc = 0;
      for (const Bond& x : b) vc += !x.horizontal();
      if (vc == v) all.push_back(b);
    });
  }
  workers = std::max(1, workers);
  std::vector<std::future<LemmaReport>> jobs;
  for (int w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      LemmaReport r;
      for (std::size_t i = w; i < all.size(); i += workers) {
        ++r.animals;
        check_ksection(BondAnimal::canonicalize(all[i]), r);
      }
      return r;
    }));
  for (auto& j : jobs) {
    LemmaReport r = j.get();
    total.animals += r.animals;
    total.sections += r.sections;
    total.equality_cases += r.equality_cases;
    total.violations.insert(total.violations.end(), r.violations.begin(), r.violations.end());
  }
  std::sort(total.violations.begin(), total.violations.end());
  return total;
}

ClosureReport closure_check(const std::function<bool(const BondAnimal&)>& predicate,
                            const std::vector<BondAnimal>& samples, const std::string& name) {
  ClosureReport r;
  for (const BondAnimal& a : samples) {
    ++r.samples;
    bool before = predicate(a);
    auto report = [&](const char* op, const Section& s, const std::string& what) {
      std::ostringstream os;
      os << name << ": " << op << " of column " << s.column << " in " << a.to_string() << ": " << what;
      r.violations.push_back(os.str());
    };
    for (const Section& s : duplicate_sections(a)) {
      ++r.deletions;
      try {
        if (predicate(delete_duplicate_section(a, s)) != before) report("deletion", s, "predicate changed");
      } catch (const std::exception& e) {
        report("deletion", s, e.what());
      }
    }
    for (const Section& s : decompose(a).sections()) {
      ++r.duplications;
      try {
        BondAnimal b = duplicate_section(a, s);
        if (predicate(b) != before) report("duplication", s, "predicate changed");
        bool undone = false;
        for (const Section& t : duplicate_sections(b))
          if (t.column == s.column + 1 && t.rows == s.rows && delete_duplicate_section(b, t) == a) undone = true;
        if (!undone) report("duplication", s, "deletion does not undo it");
      } catch (const std::exception& e) {
        report("duplication", s, e.what());
      }
    }
  }
  return r;
}

ConfluenceReport confluence_check(const std::vector<BondAnimal>& samples, int orders, std::uint64_t seed) {
  ConfluenceReport r;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const BondAnimal& a = samples[i];
    ++r.animals;
    BondAnimal ref = reduce_to_minimal(a);
    for (int o = 0; o < orders; ++o) {
      ++r.orders;
      BondAnimal m = reduce_randomly(a, seed + i * 7919u + o);
      if (!(m == ref)) {
        r.violations.push_back(a.to_string() + " reduces to " + ref.to_string() + " and " + m.to_string());
        break;
      }
    }
  }
  return r;
}

}  // namespace dba::haruspicy
