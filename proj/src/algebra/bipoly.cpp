#include "dba/algebra/bipoly.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

namespace dba {

namespace {

const Poly kZeroPoly{};

Rat rat_pow(const Rat& base, long e) {
  Rat r = 1;
  Rat b = base;
  bool neg = e < 0;
  unsigned long u = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  while (u > 0) {
    if (u & 1UL) r *= b;
    u >>= 1UL;
    if (u > 0) b *= b;
  }
  return neg ? Rat(1 / r) : r;
}

// Primitive part over Q[x], scaled low.
BiPoly primitive_part(const BiPoly& p) {
  Poly c = p.content();
  std::vector<Poly> out;
  out.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) out.push_back(*exact_div(q, c));
  return BiPoly(std::move(out));
}

// Pseudo-remainder in s over Q[x].
BiPoly pseudo_rem(BiPoly u, const BiPoly& v) {
  const int dv = v.degree_s();
  const Poly& lv = v.leading();
  while (!u.is_zero() && u.degree_s() >= dv) {
    const int shift = u.degree_s() - dv;
    Poly lu = u.leading();
    std::vector<Poly> sub(static_cast<std::size_t>(shift) + v.coeffs().size());
    for (std::size_t i = 0; i < v.coeffs().size(); ++i) sub[i + shift] = v.coeffs()[i] * lu;
    u *= lv;
    u -= BiPoly(std::move(sub));
  }
  return u;
}

}  // namespace

bool operator<(const Monomial& a, const Monomial& b) {
  return std::tie(a.s_pow, a.x_pow) < std::tie(b.s_pow, b.x_pow) ||
         (a.s_pow == b.s_pow && a.x_pow == b.x_pow && a.coef < b.coef);
}

std::string Monomial::to_string(const std::string& svar, const std::string& xvar) const {
  std::ostringstream os;
  bool any = false;
  if (coef != 1 || (s_pow == 0 && x_pow == 0)) {
    os << coef.get_str();
    any = true;
  }
  auto factor = [&](const std::string& v, int e) {
    if (e == 0) return;
    if (any) os << "*";
    os << v;
    if (e != 1) os << "^" << e;
    any = true;
  };
  factor(svar, s_pow);
  factor(xvar, x_pow);
  return os.str();
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    int c = cmp(a.coeffs()[i], b.coeffs()[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

BiPoly::BiPoly(std::vector<Poly> coeffs) : c_(std::move(coeffs)) { trim(); }

BiPoly::BiPoly(const Poly& p) {
  if (!p.is_zero()) c_.push_back(p);
}

BiPoly BiPoly::monomial(const Monomial& m) {
  if (m.s_pow < 0 || m.x_pow < 0) throw std::invalid_argument("BiPoly::monomial: negative exponent");
  if (m.coef == 0) return {};
  std::vector<Poly> c(static_cast<std::size_t>(m.s_pow) + 1);
  c[m.s_pow] = Poly::monomial(m.coef, static_cast<std::size_t>(m.x_pow));
  return BiPoly(std::move(c));
}

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& p : c_) d = std::max(d, p.degree());
  return d;
}

std::size_t BiPoly::term_count() const {
  std::size_t n = 0;
  for (const auto& p : c_) {
    for (const auto& c : p.coeffs()) n += (c != 0);
  }
  return n;
}

const Poly& BiPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : kZeroPoly; }

Rat BiPoly::lowest_coeff() const {
  for (const auto& p : c_) {
    if (!p.is_zero()) return p.lowest();
  }
  return 0;
}

Poly BiPoly::content() const {
  Poly g;
  for (const auto& p : c_) {
    if (p.is_zero()) continue;
    g = gcd(g, p);
    if (g.degree() == 0) break;
  }
  return g;
}

BiPoly BiPoly::normalized_primitive() const {
  if (is_zero()) return {};
  BiPoly p = primitive_part(*this);
  Rat low = p.lowest_coeff();
  if (low != 1) p *= Rat(1 / low);
  return p;
}

Rat BiPoly::eval(const Rat& s, const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s + it->eval(x);
  return acc;
}

Poly BiPoly::eval_s(const Monomial& m) const {
  if (m.s_pow != 0 || m.x_pow < 0) throw std::invalid_argument("eval_s: monomial must be in x only");
  Poly out;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    if (m.coef == 0 && j > 0) break;
    Rat cj = rat_pow(m.coef, static_cast<long>(j));
    out += (c_[j] * cj).shifted(static_cast<std::size_t>(m.x_pow) * j);
  }
  return out;
}

BiPoly BiPoly::substitute_s(const Monomial& m) const {
  if (m.s_pow < 1 || m.x_pow < 0) throw std::invalid_argument("substitute_s: monomial must carry s");
  if (m.coef == 0 || is_zero()) return {};
  std::vector<Poly> out(static_cast<std::size_t>(degree_s()) * m.s_pow + 1);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    out[j * m.s_pow] = (c_[j] * rat_pow(m.coef, static_cast<long>(j))).shifted(static_cast<std::size_t>(m.x_pow) * j);
  }
  return BiPoly(std::move(out));
}

BiPoly BiPoly::derivative_s() const {
  if (c_.size() <= 1) return {};
  std::vector<Poly> out(c_.size() - 1);
  for (std::size_t j = 1; j < c_.size(); ++j) out[j - 1] = c_[j] * Rat(static_cast<long>(j));
  return BiPoly(std::move(out));
}

BiPoly BiPoly::truncated(int max_s) const {
  if (max_s < 0) return {};
  if (degree_s() <= max_s) return *this;
  return BiPoly(std::vector<Poly>(c_.begin(), c_.begin() + max_s + 1));
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const Rat& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& p : c_) p *= k;
  return *this;
}

BiPoly& BiPoly::operator*=(const Poly& p) {
  if (p.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& q : c_) q = q * p;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  return mul_truncated(a, b, a.degree_s() + b.degree_s());
}

BiPoly mul_truncated(const BiPoly& a, const BiPoly& b, int max_s) {
  if (a.is_zero() || b.is_zero() || max_s < 0) return {};
  const int top = std::min(max_s, a.degree_s() + b.degree_s());
  std::vector<Poly> out(static_cast<std::size_t>(top) + 1);
  for (std::size_t i = 0; i < a.c_.size() && static_cast<int>(i) <= top; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size() && static_cast<int>(i + j) <= top; ++j) {
      if (b.c_[j].is_zero()) continue;
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return BiPoly(std::move(out));
}

bool operator<(const BiPoly& a, const BiPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] < b.c_[i]) return true;
    if (b.c_[i] < a.c_[i]) return false;
  }
  return false;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly r(Poly::one());
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

std::string BiPoly::to_string(const std::string& svar, const std::string& xvar) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    for (std::size_t i = 0; i < c_[j].size(); ++i) {
      const Rat& c = c_[j].coeffs()[i];
      if (c == 0) continue;
      os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      first = false;
      Monomial m{abs(c), static_cast<int>(j), static_cast<int>(i)};
      os << m.to_string(svar, xvar);
    }
  }
  return os.str();
}

std::optional<BiPoly> exact_div(const BiPoly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("BiPoly division by zero");
  std::vector<Poly> out;
  out.reserve(a.coeffs().size());
  for (const auto& p : a.coeffs()) {
    auto q = exact_div(p, b);
    if (!q) return std::nullopt;
    out.push_back(std::move(*q));
  }
  return BiPoly(std::move(out));
}

std::optional<BiPoly> exact_div(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw std::domain_error("BiPoly division by zero");
  if (a.is_zero()) return BiPoly{};
  if (b.degree_s() == 0) return exact_div(a, b.leading());
  if (a.degree_s() < b.degree_s()) return std::nullopt;
  const int db = b.degree_s();
  std::vector<Poly> rem = a.coeffs();
  std::vector<Poly> quo(static_cast<std::size_t>(a.degree_s() - db) + 1);
  const Poly& lb = b.leading();
  const bool unit_lead = lb.degree() == 0;
  const Rat inv_lead = unit_lead ? Rat(1 / lb.coeff(0)) : Rat(0);
  for (std::size_t k = quo.size(); k-- > 0;) {
    Poly& top = rem[k + db];
    if (top.is_zero()) continue;
    Poly q;
    if (unit_lead) {
      q = top * inv_lead;
    } else {
      auto d = exact_div(top, lb);
      if (!d) return std::nullopt;
      q = std::move(*d);
    }
    for (int j = 0; j <= db; ++j) {
      if (b.coeffs()[j].is_zero()) continue;
      rem[k + j] -= q * b.coeffs()[j];
    }
    quo[k] = std::move(q);
  }
  for (int j = 0; j < db; ++j) {
    if (!rem[j].is_zero()) return std::nullopt;
  }
  return BiPoly(std::move(quo));
}

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b.is_zero() ? BiPoly{} : b * Rat(1 / b.lowest_coeff());
  if (b.is_zero()) return a * Rat(1 / a.lowest_coeff());
  Poly cg = gcd(a.content(), b.content());
  BiPoly u = primitive_part(a);
  BiPoly v = primitive_part(b);
  if (u.degree_s() < v.degree_s()) std::swap(u, v);
  while (!v.is_zero() && v.degree_s() > 0) {
    BiPoly r = pseudo_rem(u, v);
    u = std::move(v);
    v = r.is_zero() ? BiPoly{} : primitive_part(r);
  }
  // v == 0: u is the gcd; v constant in s: primitive parts are coprime.
  BiPoly g = v.is_zero() ? u : BiPoly(Poly::one());
  g *= cg;
  return g * Rat(1 / g.lowest_coeff());
}

}  // namespace dba
