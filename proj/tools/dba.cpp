#include <openssl/evp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dba/analysis/analysis.hpp"
#include "dba/animals/enumerate.hpp"
#include "dba/error.hpp"
#include "dba/haruspicy/haruspicy.hpp"
#include "dba/suites/suites.hpp"
#include "dba/temperley/temperley.hpp"

using namespace dba;
namespace fs = std::filesystem;

namespace {

struct RunConfig {
  std::string command;
  std::string suite;
  int brute = -1;
  bool transfer = false;
  int n = -1;
  int m = -1;
  int N = 30;
  int bonds = -1;
  bool crosscheck = false;
  std::string out;
  std::string cache;
  int workers = 1;
  double tol = 1e-9;
  bool tables = false;
  bool solvability = false;
  bool site = false;
  std::string animal;

  Json to_json() const {
    Json j{{"command", command}, {"workers", workers}};
    if (!suite.empty()) j["suite"] = suite;
    if (brute >= 0) j["brute"] = brute;
    if (transfer) j["transfer"] = true;
    if (n >= 0) j["n"] = n;
    if (m >= 0) j["m"] = m;
    if (command == "verify" || command == "report") j["N"] = N;
    if (bonds >= 0) j["bonds"] = bonds;
    if (crosscheck) j["crosscheck"] = true;
    if (command == "verify") j["tol"] = tol;
    if (tables) j["tables"] = true;
    if (solvability) j["solvability"] = true;
    if (site) j["site"] = true;
    if (!animal.empty()) j["animal"] = animal;
    return j;
  }
};

std::string sha256(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

void emit(const RunConfig& cfg, const Json& payload) {
  Json doc{{"config", cfg.to_json()}, {"payload", payload}, {"payload_sha256", sha256(payload.dump())}};
  if (cfg.out.empty()) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
  f << doc.dump(2) << "\n";
}

animals::SeriesTable cached_transfer(const RunConfig& cfg, int n, int m, const animals::Budgets& budgets) {
  fs::path file;
  if (!cfg.cache.empty()) {
    Json key{{"transfer_n", n}, {"transfer_m", m}};
    file = fs::path(cfg.cache) / ("transfer-" + sha256(key.dump()).substr(0, 16) + ".json");
    if (fs::exists(file)) {
      std::ifstream f(file);
      return animals::SeriesTable::from_json(Json::parse(f));
    }
  }
  animals::SeriesTable t = animals::transfer_series(n, m, budgets);
  if (!file.empty()) {
    fs::create_directories(file.parent_path());
    std::ofstream(file) << t.to_json().dump() << "\n";
  }
  return t;
}

int run_enumerate(const RunConfig& cfg) {
  if (cfg.brute < 0 && !cfg.transfer) throw std::invalid_argument("enumerate needs --brute B and/or --transfer");
  animals::Budgets budgets;
  if (cfg.brute > budgets.max_bonds) budgets.max_bonds = cfg.brute;
  Json payload = Json::object();
  animals::SeriesTable brute, tr;
  if (cfg.brute >= 0) {
    brute = animals::enumerate_directed(cfg.brute, cfg.workers, false, budgets).table;
    payload["brute"] = brute.to_json();
  }
  if (cfg.transfer) {
    if (cfg.n < 0 || cfg.m < 0) throw std::invalid_argument("--transfer needs -n and -m");
    tr = cached_transfer(cfg, cfg.n, cfg.m, budgets);
    payload["transfer"] = tr.to_json();
  }
  int code = 0;
  if (cfg.crosscheck) {
    if (cfg.brute < 0 || !cfg.transfer) throw std::invalid_argument("--crosscheck needs both --brute and --transfer");
    Json diff = Json::array();
    int compared = 0;
    for (const auto& [key, v] : tr.entries) {
      if (!brute.has(key.first, key.second)) continue;
      ++compared;
      if (brute.at(key.first, key.second) != v)
        diff.push_back({key.first, key.second, brute.at(key.first, key.second).get_str(), v.get_str()});
    }
    payload["crosscheck"] = {{"compared", compared}, {"mismatches", diff}};
    if (!diff.empty()) {
      std::cerr << "crosscheck mismatch: " << diff.dump() << "\n";
      code = 1;
    }
  }
  emit(cfg, payload);
  return code;
}

int verify_with(const RunConfig& cfg, const std::vector<suites::CheckResult>& results) {
  Json list = Json::array();
  Json failures = Json::array();
  bool ok = true;
  for (const auto& r : results) {
    list.push_back(r.to_json());
    ok = ok && r.pass;
    for (const auto& f : r.failures) failures.push_back(r.name + ": " + f);
    std::cerr << (r.pass ? "pass " : "FAIL ") << r.name << "\n";
  }
  emit(cfg, {{"pass", ok}, {"suites", list}, {"failures", failures}});
  return ok ? 0 : 1;
}

std::vector<suites::CheckResult> run_suite(const RunConfig& cfg, const std::string& name) {
  int n = cfg.n;
  if (name == "ksection") return {suites::check_ksection(cfg.bonds >= 0 ? cfg.bonds : 10, cfg.workers)};
  if (name == "haruspicy") return {suites::check_haruspicy(cfg.bonds >= 0 ? cfg.bonds : 9)};
  if (name == "temperley") {
    int k = n >= 0 ? n : 6;
    return {suites::check_temperley(k), suites::check_certificates(k), suites::check_c5(30, cfg.tol)};
  }
  if (name == "site") return {suites::check_site(n >= 0 ? n : 12)};
  if (name == "counterexample") return {suites::check_counterexample(cfg.N)};
  if (name == "enumeration") return {suites::check_enumeration(cfg.bonds >= 0 ? cfg.bonds : 10, cfg.workers)};
  if (name == "fits") return {suites::check_fits(n >= 0 ? n : 4, 4)};
  if (name == "oracle") return {suites::check_oracle()};
  if (name == "conjecture") return {suites::check_conjecture()};
  if (name == "all") {
    std::vector<suites::CheckResult> all;
    for (const char* s : {"site", "enumeration", "fits", "conjecture", "temperley", "oracle", "ksection", "haruspicy",
                          "counterexample"}) {
      auto part = run_suite(cfg, s);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

int run_report(const RunConfig& cfg) {
  if (!cfg.tables && !cfg.solvability && !cfg.site)
    throw std::invalid_argument("report needs --tables, --solvability or --site");
  Json payload = Json::object();
  std::ostringstream text;
  if (cfg.tables) {
    int n_max = cfg.n >= 0 ? cfg.n : 4;
    Json rows = Json::array();
    for (int n = 0; n <= n_max; ++n) {
      int d = static_cast<int>(analysis::conjectured_denominator(n).expand().degree());
      analysis::FitResult f = analysis::fit_H(n, std::max(60, 2 * d + 12));
      f.n = n;
      Json j = f.to_json();
      if (f.verified()) {
        auto c = analysis::denominator_conjecture(n, f.fitted.den());
        j["conjecture"] = c.to_json();
        text << "H_" << n << "(x) = " << f.fitted.to_string() << "\n";
        text << "    D_" << n << " formula " << c.conjectured << (c.match ? "  (matches)" : "  (differs)") << "\n";
      } else {
        text << "H_" << n << "(x): no verified fit\n";
      }
      rows.push_back(j);
    }
    payload["H"] = rows;
  }
  if (cfg.site) {
    int n_max = cfg.n >= 0 ? cfg.n : 8;
    auto r = suites::check_site(n_max);
    payload["site"] = r.to_json();
    for (const auto& row : r.detail["table"])
      text << "R_" << row["n"].get<int>() << "(q) = " << row["R"].get<std::string>() << "\n";
  }
  if (cfg.solvability) {
    auto r = suites::check_solvability();
    payload["solvability"] = r.to_json();
    text << "bond: " << r.detail["bond"]["verdict"].get<std::string>() << "\n";
    text << "site: " << r.detail["site"]["verdict"].get<std::string>() << "\n";
  }
  payload["text"] = text.str();
  std::cerr << text.str();
  emit(cfg, payload);
  return 0;
}

int run_fit(const RunConfig& cfg) {
  if (cfg.n < 0) throw std::invalid_argument("fit needs -n");
  int terms = cfg.m >= 0 ? cfg.m + 1 : 80;
  analysis::FitResult f = analysis::fit_H(cfg.n, terms);
  Json payload = f.to_json();
  if (f.verified()) payload["conjecture"] = analysis::denominator_conjecture(cfg.n, f.fitted.den()).to_json();
  emit(cfg, payload);
  return f.verified() ? 0 : 1;
}

int run_recur(const RunConfig& cfg) {
  int n_max = cfg.n >= 0 ? cfg.n : 4;
  auto b = temperley::build_block_gfs();
  temperley::UncappedGF u = temperley::seed_gf(b);
  Json rows = Json::array();
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) u = temperley::step(b, u, cfg.crosscheck);
    RationalFunction f = temperley::cap_off(u);
    rows.push_back({{"n", n}, {"f", dba::to_json(f)}, {"text", f.to_string()}, {"uncapped_den", u.value.den_string()}});
  }
  emit(cfg, {{"f", rows}});
  return 0;
}

int run_reduce(const RunConfig& cfg) {
  animals::BondAnimal a = animals::parse_animal(cfg.animal);
  animals::BondAnimal m = haruspicy::reduce_to_minimal(a);
  emit(cfg, {{"animal", a.to_string()},
             {"decomposition", haruspicy::decompose(a).to_json()},
             {"minimal", m.to_string()},
             {"minimal_decomposition", haruspicy::decompose(m).to_json()}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directed bond animals: enumeration, recurrences and checks"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto common = [&](CLI::App* c) {
    c->add_option("--out", cfg.out, "Output file (stdout if omitted)");
    c->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
    c->add_option("-n", cfg.n, "Vertical bond count / index")->check(CLI::NonNegativeNumber);
  };

  auto* en = app.add_subcommand("enumerate", "Count directed animals b_{m,n}");
  common(en);
  en->add_option("--brute", cfg.brute, "Brute force up to B bonds")->check(CLI::Range(0, 14));
  en->add_flag("--transfer", cfg.transfer, "Column sweep at fixed n");
  en->add_option("-m", cfg.m, "Largest horizontal bond count")->check(CLI::NonNegativeNumber);
  en->add_flag("--crosscheck", cfg.crosscheck, "Compare brute force and transfer on the overlap");
  en->add_option("--cache", cfg.cache, "Directory for cached transfer tables");

  auto* ve = app.add_subcommand("verify", "Run a check suite; exit 0 iff it passes");
  common(ve);
  ve->add_option("suite,--suite", cfg.suite,
                 "ksection | haruspicy | temperley | site | counterexample | enumeration | fits | oracle | "
                 "conjecture | all");
  ve->add_option("--bonds", cfg.bonds, "Bond budget")->check(CLI::Range(0, 14));
  ve->add_option("-N", cfg.N, "Series order")->check(CLI::Range(1, 200));
  ve->add_option("--tol", cfg.tol, "Unit circle tolerance for root checks")->check(CLI::PositiveNumber);

  auto* re = app.add_subcommand("report", "Tables mirroring the listings");
  common(re);
  re->add_flag("--tables", cfg.tables, "H_n fits with factored denominators");
  re->add_flag("--solvability", cfg.solvability, "Pole accumulation verdicts");
  re->add_flag("--site", cfg.site, "Site animal R_n table");

  auto* fi = app.add_subcommand("fit", "Pade fit of H_n from the transfer series");
  common(fi);
  fi->add_option("-m", cfg.m, "Highest coefficient used")->check(CLI::NonNegativeNumber);

  auto* rc = app.add_subcommand("recur", "f_1..f_n from the recurrence");
  common(rc);
  rc->add_flag("--crosscheck", cfg.crosscheck, "Also run the Hadamard route");

  auto* rd = app.add_subcommand("reduce", "Section decomposition and minimal animal");
  common(rd);
  rd->add_option("animal", cfg.animal, "e.g. \"h(0,0) h(1,0) v(2,0)\"")->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*en) return cfg.command = "enumerate", run_enumerate(cfg);
    if (*ve) {
      cfg.command = "verify";
      if (cfg.suite.empty()) throw std::invalid_argument("verify needs a suite name");
      return verify_with(cfg, run_suite(cfg, cfg.suite));
    }
    if (*re) return cfg.command = "report", run_report(cfg);
    if (*fi) return cfg.command = "fit", run_fit(cfg);
    if (*rc) return cfg.command = "recur", run_recur(cfg);
    if (*rd) return cfg.command = "reduce", run_reduce(cfg);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
