#include "dba/algebra/partial_fractions.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "dba/error.hpp"

namespace dba {

namespace {

using Coeffs = std::vector<BiRationalFunction>;

void trim(Coeffs& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
  }
  trim(r);
  return r;
}

Coeffs add(Coeffs a, const Coeffs& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

BiRationalFunction mono(const Monomial& m) { return BiRationalFunction::from_monomial(m); }

// p * (1 - alpha t)
Coeffs times_pole(const Coeffs& p, const Monomial& alpha) {
  if (p.empty()) return {};
  Coeffs r(p.size() + 1);
  const BiRationalFunction a = mono(alpha);
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i] += p[i];
    r[i + 1] -= a * p[i];
  }
  trim(r);
  return r;
}

// p / (1 - alpha t) if exact.
std::optional<Coeffs> divide_pole(const Coeffs& p, const Monomial& alpha) {
  if (p.empty()) return Coeffs{};
  const BiRationalFunction a = mono(alpha);
  Coeffs q(p.size() - 1);
  BiRationalFunction carry;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    carry = p[k] + a * carry;
    q[k] = carry;
  }
  if (!(p.back() + a * carry).is_zero()) return std::nullopt;
  trim(q);
  return q;
}

BiRationalFunction binom(int n, int k) {
  Int c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BiRationalFunction(Rat(c));
}

}  // namespace

PoleRational::PoleRational(std::vector<BiRationalFunction> num, std::vector<TPole> poles)
    : num_(std::move(num)), poles_(std::move(poles)) {
  trim(num_);
  std::sort(poles_.begin(), poles_.end(), [](const TPole& a, const TPole& b) { return a.alpha < b.alpha; });
  std::vector<TPole> merged;
  for (const auto& p : poles_) {
    if (p.alpha.coef == 0) throw std::invalid_argument("pole parameter is zero");
    if (!merged.empty() && merged.back().alpha == p.alpha) {
      merged.back().mult += p.mult;
    } else if (p.mult > 0) {
      merged.push_back(p);
    }
  }
  poles_ = std::move(merged);
  reduce();
}

PoleRational PoleRational::constant(const BiRationalFunction& c) { return PoleRational({c}, {}); }

PoleRational PoleRational::t_power(int k) {
  Coeffs n(static_cast<std::size_t>(k) + 1);
  n.back() = BiRationalFunction(1);
  return PoleRational(std::move(n), {});
}

PoleRational PoleRational::geometric(const Monomial& alpha) {
  return PoleRational({BiRationalFunction(), mono(alpha)}, {{alpha, 1}});
}

PoleRational PoleRational::from_polys(Coeffs num, Coeffs den, int max_pow) {
  trim(num);
  trim(den);
  if (den.empty()) throw PoleError("zero denominator");
  if (den[0].is_zero()) throw UnsupportedPole("denominator vanishes at t = 0");
  const BiRationalFunction d0 = den[0];
  for (auto& c : den) c /= d0;
  for (auto& c : num) c /= d0;
  std::vector<TPole> poles;
  for (int a = 0; a <= max_pow && den.size() > 1; ++a) {
    for (int b = 0; b <= max_pow && den.size() > 1; ++b) {
      for (int sign : {1, -1}) {
        Monomial alpha{Rat(sign), a, b};
        while (den.size() > 1) {
          auto q = divide_pole(den, alpha);
          if (!q) break;
          den = std::move(*q);
          poles.push_back({alpha, 1});
        }
      }
    }
  }
  if (den.size() > 1) {
    std::string rest;
    for (std::size_t i = 0; i < den.size(); ++i) rest += (i ? ", " : "") + den[i].to_string();
    throw UnsupportedPole("denominator factor in t is not of the form (1 - alpha t): [" + rest + "]");
  }
  return PoleRational(std::move(num), std::move(poles));
}

void PoleRational::reduce() {
  for (auto& p : poles_) {
    while (p.mult > 0) {
      auto q = divide_pole(num_, p.alpha);
      if (!q) break;
      num_ = std::move(*q);
      --p.mult;
    }
  }
  poles_.erase(std::remove_if(poles_.begin(), poles_.end(), [](const TPole& p) { return p.mult == 0; }),
               poles_.end());
  if (num_.empty()) poles_.clear();
}

Coeffs PoleRational::den() const {
  Coeffs d{BiRationalFunction(1)};
  for (const auto& p : poles_) {
    for (int i = 0; i < p.mult; ++i) d = times_pole(d, p.alpha);
  }
  return d;
}

Coeffs PoleRational::series(int order) const {
  Coeffs d = den();
  Coeffs r;
  for (int n = 0; n <= order; ++n) {
    BiRationalFunction acc = static_cast<std::size_t>(n) < num_.size() ? num_[static_cast<std::size_t>(n)]
                                                                         : BiRationalFunction();
    for (int k = 1; k <= n && static_cast<std::size_t>(k) < d.size(); ++k) {
      acc -= d[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(n - k)];
    }
    r.push_back(acc);
  }
  return r;
}

PoleRational& PoleRational::operator+=(const PoleRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  std::map<Monomial, std::pair<int, int>> m;
  for (const auto& p : poles_) m[p.alpha].first = p.mult;
  for (const auto& p : o.poles_) m[p.alpha].second = p.mult;
  Coeffs a = num_;
  Coeffs b = o.num_;
  std::vector<TPole> poles;
  for (const auto& [alpha, e] : m) {
    int top = std::max(e.first, e.second);
    for (int i = e.first; i < top; ++i) a = times_pole(a, alpha);
    for (int i = e.second; i < top; ++i) b = times_pole(b, alpha);
    poles.push_back({alpha, top});
  }
  num_ = add(std::move(a), b);
  poles_ = std::move(poles);
  reduce();
  return *this;
}

PoleRational& PoleRational::operator*=(const PoleRational& o) {
  std::vector<TPole> poles = poles_;
  poles.insert(poles.end(), o.poles_.begin(), o.poles_.end());
  *this = PoleRational(mul(num_, o.num_), std::move(poles));
  return *this;
}

PoleRational operator-(PoleRational a) {
  for (auto& c : a.num_) c = -c;
  return a;
}

bool operator==(const PoleRational& a, const PoleRational& b) { return (a - b).is_zero(); }

PoleRational PartialFractionForm::recombine() const {
  PoleRational r(poly, {});
  for (const auto& term : terms) r += PoleRational({term.coef}, {{term.alpha, term.j}});
  return r;
}

const BiRationalFunction* PartialFractionForm::find(const Monomial& alpha, int j) const {
  for (const auto& term : terms) {
    if (term.alpha == alpha && term.j == j) return &term.coef;
  }
  return nullptr;
}

namespace {

Coeffs truncate(Coeffs p, int order) {
  if (static_cast<int>(p.size()) > order + 1) p.resize(static_cast<std::size_t>(order) + 1);
  trim(p);
  return p;
}

// Polynomial quotient of a by b in t.
Coeffs poly_quotient(Coeffs a, const Coeffs& b) {
  if (a.size() < b.size()) return {};
  Coeffs q(a.size() - b.size() + 1);
  const BiRationalFunction inv_lead = b.back().inverse();
  for (std::size_t k = q.size(); k-- > 0;) {
    BiRationalFunction c = a[k + b.size() - 1] * inv_lead;
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= c * b[i];
    q[k] = c;
  }
  trim(q);
  return q;
}

}  // namespace

PartialFractionForm partial_fractions_t(const PoleRational& f) {
  PartialFractionForm out;
  out.poly = poly_quotient(f.num(), f.den());
  for (const auto& pole : f.poles()) {
    const int m = pole.mult;
    const BiRationalFunction inv_alpha = mono(pole.alpha.inverse());
    // t = (1 - w) / alpha
    const Coeffs t_of_w{inv_alpha, -inv_alpha};
    Coeffs g;
    for (std::size_t k = f.num().size(); k-- > 0;) {
      g = truncate(add(mul(g, t_of_w), Coeffs{f.num()[k]}), m - 1);
    }
    for (const auto& other : f.poles()) {
      if (other.alpha == pole.alpha) continue;
      // 1 - beta t = (1 - r) + r w with r = beta / alpha
      const BiRationalFunction r = mono(other.alpha * pole.alpha.inverse());
      const BiRationalFunction a0 = BiRationalFunction(1) - r;
      const BiRationalFunction ratio = -(r / a0);
      Coeffs inv{a0.inverse()};
      for (int k = 1; k < m; ++k) inv.push_back(inv.back() * ratio);
      for (int e = 0; e < other.mult; ++e) g = truncate(mul(g, inv), m - 1);
    }
    for (int j = 1; j <= m; ++j) {
      std::size_t idx = static_cast<std::size_t>(m - j);
      if (idx < g.size() && !g[idx].is_zero()) out.terms.push_back({g[idx], pole.alpha, j});
    }
  }
  std::sort(out.terms.begin(), out.terms.end(), [](const PFTerm& a, const PFTerm& b) {
    return a.alpha < b.alpha || (a.alpha == b.alpha && a.j < b.j);
  });
  return out;
}

BiRationalFunction hadamard(const BiRationalFunction& f, const PartialFractionForm& g) {
  BiRationalFunction result;
  if (!g.poly.empty()) {
    auto fs = f.series_s(static_cast<int>(g.poly.size()) - 1);
    for (std::size_t k = 0; k < g.poly.size(); ++k) result += g.poly[k] * BiRationalFunction(fs[k]);
  }
  // f^(i)(alpha) / i!, cached per alpha
  std::vector<BiRationalFunction> derivs{f};
  auto taylor = [&](int i) -> const BiRationalFunction& {
    while (static_cast<int>(derivs.size()) <= i) {
      derivs.push_back(derivs.back().derivative_s() * BiRationalFunction(Rat(1, static_cast<long>(derivs.size()))));
    }
    return derivs[static_cast<std::size_t>(i)];
  };
  auto at = [](const BiRationalFunction& h, const Monomial& alpha) {
    if (alpha.s_pow == 0) return BiRationalFunction(h.substitute(alpha));
    return h.substitute_s(alpha);
  };
  // 1/(1 - a t)^j = sum_{i<j} C(j-1, i) a^i t^i / (1 - a t)^(i+1)
  for (const auto& term : g.terms) {
    BiRationalFunction acc;
    for (int i = 0; i < term.j; ++i) {
      Monomial ai{Rat(1), 0, 0};
      for (int k = 0; k < i; ++k) ai = ai * term.alpha;
      acc += binom(term.j - 1, i) * mono(ai) * at(taylor(i), term.alpha);
    }
    result += term.coef * acc;
  }
  return result;
}

}  // namespace dba
