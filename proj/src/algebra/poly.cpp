#include "dba/algebra/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace dba {

namespace {

// Integer content-free image of p (same roots, integer coefficients, gcd 1).
std::vector<Int> primitive_integer(const Poly& p) {
  Int lcm_den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> out(p.size());
  Int g = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = p.coeffs()[i].get_num() * (lcm_den / p.coeffs()[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1) {
    for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

void strip_content(std::vector<Int>& v) {
  Int g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1) {
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

void trim_int(std::vector<Int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Pseudo-remainder of a by b over Z.
std::vector<Int> pseudo_rem(std::vector<Int> a, const std::vector<Int>& b) {
  const std::size_t db = b.size() - 1;
  const Int& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    Int la = a.back();
    Int g;
    mpz_gcd(g.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
    Int fa = lb / g;
    Int fb = la / g;
    for (auto& c : a) c *= fa;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= fb * b[i];
    trim_int(a);
  }
  return a;
}

}  // namespace

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, std::size_t degree) {
  if (c == 0) return {};
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t Poly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return i;
  }
  return 0;
}

Rat Poly::eval(const Rat& at) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::substitute_monomial(const Rat& c, std::size_t k) const {
  if (is_zero()) return {};
  if (c == 0) return constant(c_[0]);
  std::vector<Rat> out((c_.size() - 1) * k + 1);
  Rat cp = 1;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    out[i * k] += c_[i] * cp;
    cp *= c;
  }
  return Poly(std::move(out));
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rat> out(c_.size() + k);
  for (std::size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
  return Poly(std::move(out));
}

Poly Poly::normalized_low() const {
  if (is_zero()) return {};
  Rat inv = 1 / lowest();
  return *this * inv;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Rat inv = 1 / leading();
  return *this * inv;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= k;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
  mpq_t tmp;
  mpq_init(tmp);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      mpq_mul(tmp, a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      mpq_add(out[i + j].get_mpq_t(), out[i + j].get_mpq_t(), tmp);
    }
  }
  mpq_clear(tmp);
  return Poly(std::move(out));
}

Poly Poly::pow(unsigned e) const {
  Poly result = one();
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rat> rem = a.coeffs();
  std::vector<Rat> quo(a.size() - b.size() + 1);
  const Rat inv_lead = 1 / b.leading();
  const std::size_t db = b.size() - 1;
  mpq_t tmp;
  mpq_init(tmp);
  for (std::size_t k = quo.size(); k-- > 0;) {
    Rat q = rem[k + db] * inv_lead;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      mpq_mul(tmp, q.get_mpq_t(), b.coeffs()[j].get_mpq_t());
      mpq_sub(rem[k + j].get_mpq_t(), rem[k + j].get_mpq_t(), tmp);
    }
    quo[k] = std::move(q);
  }
  mpq_clear(tmp);
  rem.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

std::optional<Poly> exact_div(const Poly& a, const Poly& b) {
  if (a.is_zero()) return Poly{};
  if (a.degree() < b.degree()) return std::nullopt;
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

bool divides(const Poly& d, const Poly& a) { return exact_div(a, d).has_value(); }

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Poly::one();
  // Primitive PRS over Z keeps coefficient growth in check.
  std::vector<Int> u = primitive_integer(a);
  std::vector<Int> v = primitive_integer(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    std::vector<Int> r = pseudo_rem(u, v);
    strip_content(r);
    u = std::move(v);
    v = std::move(r);
  }
  std::vector<Rat> out(u.begin(), u.end());
  return Poly(std::move(out)).monic();
}

}  // namespace dba
