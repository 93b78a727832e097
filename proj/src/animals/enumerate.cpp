#include "dba/animals/enumerate.hpp"

#include <algorithm>
#include <future>
#include <thread>
#include <unordered_set>

#include "dba/error.hpp"

namespace dba::animals {

Int SeriesTable::at(int m, int n) const {
  auto it = entries.find({m, n});
  if (it == entries.end()) {
    throw std::out_of_range("no entry for (m, n) = (" + std::to_string(m) + ", " + std::to_string(n) + ")");
  }
  return it->second;
}

std::vector<Int> SeriesTable::column(int n, int max_m) const {
  std::vector<Int> out;
  for (int m = 0; m <= max_m; ++m) out.push_back(at(m, n));
  return out;
}

Json SeriesTable::to_json() const {
  Json e = Json::array();
  for (const auto& [mn, c] : entries) e.push_back({mn.first, mn.second, c.get_str()});
  return {{"convention", "empty_included"},
          {"provenance", provenance},
          {"complete_region", complete_region},
          {"entries", e}};
}

SeriesTable SeriesTable::from_json(const Json& j) {
  if (j.value("convention", std::string()) != "empty_included") {
    throw std::invalid_argument("series table convention must be empty_included");
  }
  SeriesTable t;
  t.provenance = j.value("provenance", std::string());
  t.complete_region = j.value("complete_region", std::string());
  for (const auto& e : j.at("entries")) t.entries[{e.at(0).get<int>(), e.at(1).get<int>()}] = parse_int(e.at(2).get<std::string>());
  return t;
}

namespace {

struct Growth {
  std::vector<BondAnimal> found;
  std::size_t disconnected = 0;
  std::size_t undirected = 0;
};

// Candidate bonds sharing a vertex with a.
std::vector<Bond> adjacent_bonds(const BondAnimal& a) {
  std::vector<Bond> out;
  if (a.empty()) return {Bond::h(0, 0), Bond::v(0, 0)};
  for (const auto& p : a.vertices()) {
    for (Bond b : {Bond::h(p.col, p.row), Bond::v(p.col, p.row), Bond::h(p.col - 1, p.row), Bond::v(p.col, p.row - 1)}) {
      if (!a.contains(b)) out.push_back(b);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Growth grow(const std::vector<BondAnimal>& level, std::size_t begin, std::size_t end) {
  Growth g;
  std::unordered_set<BondAnimal, AnimalHash> seen;
  for (std::size_t i = begin; i < end; ++i) {
    const BondAnimal& a = level[i];
    for (const auto& b : adjacent_bonds(a)) {
      std::vector<Bond> bonds = a.bonds();
      bonds.push_back(b);
      if (!connected(bonds)) {
        ++g.disconnected;
        continue;
      }
      BondAnimal c = BondAnimal::canonicalize(std::move(bonds));
      if (!is_directed(c)) {
        ++g.undirected;
        continue;
      }
      seen.insert(std::move(c));
    }
  }
  g.found.assign(seen.begin(), seen.end());
  std::sort(g.found.begin(), g.found.end());
  return g;
}

}  // namespace

EnumerationResult enumerate_directed(int max_bonds, int workers, bool keep_animals, const Budgets& budgets) {
  if (max_bonds > budgets.max_bonds) {
    throw BudgetExceeded("max_bonds " + std::to_string(max_bonds) + " exceeds budget " +
                         std::to_string(budgets.max_bonds));
  }
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  EnumerationResult r;
  r.table.provenance = "bruteforce";
  r.table.complete_region = "m+n<=" + std::to_string(max_bonds);
  for (int m = 0; m <= max_bonds; ++m) {
    for (int n = 0; m + n <= max_bonds; ++n) r.table.entries[{m, n}] = 0;
  }
  std::vector<BondAnimal> level{BondAnimal()};
  for (int k = 0;; ++k) {
    for (const auto& a : level) r.table.entries[{a.h_count(), a.v_count()}] += 1;
    if (keep_animals) r.animals.insert(r.animals.end(), level.begin(), level.end());
    if (k == max_bonds) break;
    const std::size_t chunks = std::min<std::size_t>(static_cast<std::size_t>(workers), std::max<std::size_t>(level.size(), 1));
    std::vector<std::future<Growth>> jobs;
    for (std::size_t c = 0; c < chunks; ++c) {
      std::size_t begin = level.size() * c / chunks;
      std::size_t end = level.size() * (c + 1) / chunks;
      jobs.push_back(std::async(chunks == 1 ? std::launch::deferred : std::launch::async, grow, std::cref(level), begin, end));
    }
    std::vector<BondAnimal> next;
    for (auto& j : jobs) {
      Growth g = j.get();
      r.rejected_disconnected += g.disconnected;
      r.rejected_undirected += g.undirected;
      next.insert(next.end(), std::make_move_iterator(g.found.begin()), std::make_move_iterator(g.found.end()));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return r;
}

namespace {

// Redelmeier-style search over bonds where bond b' may follow b when b' starts at b's head
// (or at the root). Each rooted directed bond set is produced exactly once.
class DirectedSearch {
 public:
  DirectedSearch(const GrowthLimits& limits, const std::function<void(const std::vector<Bond>&)>& visit)
      : lim_(limits), visit_(visit) {
    span_ = lim_.max_h + 2;
    rows_ = lim_.max_v + 2;
    used_.assign(static_cast<std::size_t>(span_ * rows_ * 2), 0);
    per_row_.assign(static_cast<std::size_t>(rows_), 0);
  }

  void run() {
    std::vector<Bond> untried;
    push_out(Vertex{0, 0}, untried);
    visit_(chosen_);
    search(untried);
  }

 private:
  std::size_t idx(const Bond& b) const {
    return static_cast<std::size_t>((b.col * rows_ + b.row) * 2 + static_cast<int>(b.o));
  }

  // Out-bonds of p not yet seen; they become candidates.
  void push_out(const Vertex& p, std::vector<Bond>& untried) {
    for (Bond b : {Bond::h(p.col, p.row), Bond::v(p.col, p.row)}) {
      if (b.col >= span_ - 1 || b.row >= rows_ - 1) continue;
      auto& u = used_[idx(b)];
      if (u == 0) {
        u = 1;
        untried.push_back(b);
        marked_.push_back(b);
      }
    }
  }

  bool allowed(const Bond& b) const {
    if (b.horizontal()) return h_ < lim_.max_h;
    if (v_ >= lim_.max_v) return false;
    if (lim_.max_row >= 0 && b.row + 1 > lim_.max_row) return false;
    return lim_.max_v_per_row < 0 || per_row_[static_cast<std::size_t>(b.row)] < lim_.max_v_per_row;
  }

  void search(std::vector<Bond> untried) {
    while (!untried.empty()) {
      Bond b = untried.back();
      untried.pop_back();
      if (!allowed(b)) continue;
      const std::size_t mark = marked_.size();
      std::vector<Bond> next = untried;
      chosen_.push_back(b);
      if (b.horizontal()) {
        ++h_;
      } else {
        ++v_;
        ++per_row_[static_cast<std::size_t>(b.row)];
      }
      push_out(b.head(), next);
      visit_(chosen_);
      search(std::move(next));
      if (b.horizontal()) {
        --h_;
      } else {
        --v_;
        --per_row_[static_cast<std::size_t>(b.row)];
      }
      chosen_.pop_back();
      while (marked_.size() > mark) {
        used_[idx(marked_.back())] = 0;
        marked_.pop_back();
      }
    }
  }

  GrowthLimits lim_;
  const std::function<void(const std::vector<Bond>&)>& visit_;
  int span_ = 0;
  int rows_ = 0;
  std::vector<char> used_;
  std::vector<int> per_row_;
  std::vector<Bond> chosen_;
  std::vector<Bond> marked_;
  int h_ = 0;
  int v_ = 0;
};

}  // namespace

void for_each_directed(const GrowthLimits& limits, const std::function<void(const std::vector<Bond>&)>& visit) {
  DirectedSearch(limits, visit).run();
}

SeriesTable transfer_series(int n, int max_m, const Budgets& budgets) {
  if (n < 0 || n > budgets.transfer_n) throw BudgetExceeded("transfer n over limit " + std::to_string(budgets.transfer_n));
  if (max_m < 0 || max_m > budgets.transfer_m) throw BudgetExceeded("transfer m over limit " + std::to_string(budgets.transfer_m));
  // Rows 0..n. State: rows entering the next column by a horizontal bond, vertical bonds used.
  const int rows = n + 1;
  const int masks = 1 << rows;
  struct Move {
    int vcount;
    unsigned reach;
  };
  std::vector<std::vector<Move>> moves(static_cast<std::size_t>(masks));
  for (int in = 1; in < masks; ++in) {
    for (int vb = 0; vb < (1 << n); ++vb) {
      // bond r joins rows r and r+1; its tail must be reachable
      unsigned reach = static_cast<unsigned>(in);
      bool ok = true;
      for (int r = 0; r < n && ok; ++r) {
        if (!(vb >> r & 1)) continue;
        if (!(reach >> r & 1)) ok = false;
        reach |= 1u << (r + 1);
      }
      if (ok) moves[static_cast<std::size_t>(in)].push_back({__builtin_popcount(static_cast<unsigned>(vb)), reach});
    }
  }
  // counts[in][v][m]
  auto blank = [&] {
    return std::vector<std::vector<std::vector<Int>>>(
        static_cast<std::size_t>(masks),
        std::vector<std::vector<Int>>(static_cast<std::size_t>(n) + 1, std::vector<Int>(static_cast<std::size_t>(max_m) + 1)));
  };
  auto cur = blank();
  cur[1][0][0] = 1;
  std::vector<Int> result(static_cast<std::size_t>(max_m) + 1);
  for (int column = 0; column <= max_m; ++column) {
    auto nxt = blank();
    bool live = false;
    for (int in = 1; in < masks; ++in) {
      for (int v = 0; v <= n; ++v) {
        for (int m = 0; m <= max_m; ++m) {
          const Int& c = cur[static_cast<std::size_t>(in)][static_cast<std::size_t>(v)][static_cast<std::size_t>(m)];
          if (c == 0) continue;
          for (const auto& mv : moves[static_cast<std::size_t>(in)]) {
            const int v2 = v + mv.vcount;
            if (v2 > n) continue;
            // out = empty ends the animal
            if (v2 == n) result[static_cast<std::size_t>(m)] += c;
            for (unsigned out = mv.reach; out != 0; out = (out - 1) & mv.reach) {
              const int m2 = m + __builtin_popcount(out);
              if (m2 > max_m) continue;
              nxt[out][static_cast<std::size_t>(v2)][static_cast<std::size_t>(m2)] += c;
              live = true;
            }
          }
        }
      }
    }
    cur = std::move(nxt);
    if (!live) break;
  }
  SeriesTable t;
  t.provenance = "transfer";
  t.complete_region = "n=" + std::to_string(n) + ",m<=" + std::to_string(max_m);
  for (int m = 0; m <= max_m; ++m) t.entries[{m, n}] = result[static_cast<std::size_t>(m)];
  return t;
}

}  // namespace dba::animals
