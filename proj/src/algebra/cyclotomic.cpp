#include "dba/algebra/cyclotomic.hpp"

#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace dba {

namespace {

std::mutex cache_mutex;
std::unordered_map<int, std::unique_ptr<Poly>> cache;

Poly compute_cyclotomic(int k) {
  // (1 - x^k) / prod_{d | k, d < k} Psi_d
  Poly p = Poly::one() - Poly::monomial(Rat(1), static_cast<std::size_t>(k));
  for (int d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    auto q = exact_div(p, cyclotomic(d));
    if (!q) throw std::logic_error("cyclotomic: inexact division");
    p = std::move(*q);
  }
  return p;
}

std::string sign_term(const Rat& c, std::size_t i, const std::string& var, bool first) {
  std::ostringstream os;
  Rat mag = abs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? "-" : "+");
  }
  if (i == 0 || mag != 1) os << mag.get_str();
  if (i > 0) os << var;
  if (i > 1) os << "^" << i;
  return os.str();
}

// Compact form matching printed factor listings: "1+x+x^2".
std::string compact(const Poly& p, const std::string& var) {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.coeffs()[i] == 0) continue;
    out += sign_term(p.coeffs()[i], i, var, first);
    first = false;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

const Poly& cyclotomic(int k) {
  if (k < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(k);
    if (it != cache.end()) return *it->second;
  }
  auto p = std::make_unique<Poly>(compute_cyclotomic(k));
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto [it, inserted] = cache.emplace(k, std::move(p));
  return *it->second;
}

int euler_phi(int k) {
  int result = k;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

Poly CycloFactorization::expand() const { return cyclo_product(factors) * remainder; }

std::string CycloFactorization::to_string(const std::string& var) const {
  std::string out;
  for (const auto& [k, m] : factors) {
    out += cyclotomic_label(k, var);
    if (m > 1) out += "^" + std::to_string(m);
  }
  bool trivial_rest = remainder.degree() == 0 && remainder.coeff(0) == 1;
  if (!trivial_rest) {
    std::string rest = "(" + compact(remainder, var) + ")";
    out = out.empty() ? rest : out + "*" + rest;
  }
  return out.empty() ? "1" : out;
}

CycloFactorization cyclo_factorize(const Poly& p, int kmax) {
  if (p.is_zero()) throw std::invalid_argument("cyclo_factorize of the zero polynomial");
  if (kmax <= 0) kmax = 2 * p.degree() + 2;
  CycloFactorization out;
  Poly rest = p;
  for (int k = 1; k <= kmax && rest.degree() > 0; ++k) {
    if (euler_phi(k) > rest.degree()) continue;
    const Poly& psi = cyclotomic(k);
    int mult = 0;
    while (rest.degree() >= psi.degree()) {
      auto q = exact_div(rest, psi);
      if (!q) break;
      rest = std::move(*q);
      ++mult;
    }
    if (mult > 0) out.factors[k] = mult;
  }
  out.remainder = std::move(rest);
  return out;
}

Poly cyclo_product(const std::map<int, int>& factors) {
  Poly p = Poly::one();
  for (const auto& [k, m] : factors) p *= cyclotomic(k).pow(static_cast<unsigned>(m));
  return p;
}

std::string cyclotomic_label(int k, const std::string& var) {
  return "(" + compact(cyclotomic(k), var) + ")";
}

}  // namespace dba
