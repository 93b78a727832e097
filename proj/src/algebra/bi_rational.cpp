#include "dba/algebra/bi_rational.hpp"

#include <algorithm>
#include <stdexcept>

#include "dba/error.hpp"

namespace dba {

namespace {

bool all_linear(const std::vector<SAtom>& atoms) {
  return std::all_of(atoms.begin(), atoms.end(), [](const SAtom& a) { return a.poly.degree_s() == 1; });
}

void merge_equal(std::vector<SAtom>& atoms) {
  std::sort(atoms.begin(), atoms.end(), [](const SAtom& a, const SAtom& b) { return a.poly < b.poly; });
  std::vector<SAtom> out;
  for (auto& a : atoms) {
    if (!out.empty() && out.back().poly == a.poly) {
      out.back().mult += a.mult;
    } else {
      out.push_back(std::move(a));
    }
  }
  atoms = std::move(out);
}

// Makes the atoms pairwise coprime (a gcd-free basis); multiplicities follow.
void refine(std::vector<SAtom>& atoms) {
  merge_equal(atoms);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < atoms.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < atoms.size() && !changed; ++j) {
        if (atoms[i].poly.degree_s() == 1 && atoms[j].poly.degree_s() == 1) continue;
        BiPoly g = gcd(atoms[i].poly, atoms[j].poly);
        if (g.degree_s() < 1) continue;
        SAtom a = atoms[i];
        SAtom b = atoms[j];
        atoms.erase(atoms.begin() + static_cast<long>(j));
        atoms.erase(atoms.begin() + static_cast<long>(i));
        BiPoly ra = exact_div(a.poly, g)->normalized_primitive();
        BiPoly rb = exact_div(b.poly, g)->normalized_primitive();
        atoms.push_back({g.normalized_primitive(), a.mult + b.mult});
        if (ra.degree_s() >= 1) atoms.push_back({ra, a.mult});
        if (rb.degree_s() >= 1) atoms.push_back({rb, b.mult});
        merge_equal(atoms);
        changed = true;
      }
    }
  }
}

int multiplicity_in(BiPoly p, const BiPoly& b) {
  int e = 0;
  while (p.degree_s() >= b.degree_s()) {
    auto q = exact_div(p, b);
    if (!q) break;
    p = std::move(*q);
    ++e;
  }
  return e;
}

// Exponent vector of `atoms` over `basis`.
std::vector<int> express(const std::vector<SAtom>& atoms, const std::vector<SAtom>& basis) {
  std::vector<int> e(basis.size(), 0);
  for (const auto& a : atoms) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (a.poly == basis[i].poly) {
        e[i] += a.mult;
      } else if (a.poly.degree_s() > 1) {
        e[i] += a.mult * multiplicity_in(a.poly, basis[i].poly);
      }
    }
  }
  return e;
}

std::vector<SAtom> common_basis(const std::vector<SAtom>& a, const std::vector<SAtom>& b) {
  std::vector<SAtom> basis;
  for (const auto& x : a) basis.push_back({x.poly, 1});
  for (const auto& x : b) basis.push_back({x.poly, 1});
  if (all_linear(basis)) {
    merge_equal(basis);
  } else {
    refine(basis);
  }
  for (auto& x : basis) x.mult = 0;
  return basis;
}

Poly cyclo_power_product(const std::map<int, int>& f) { return cyclo_product(f); }

BiPoly times_atoms(BiPoly p, const std::vector<SAtom>& basis, const std::vector<int>& exps) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (int k = 0; k < exps[i]; ++k) p = p * basis[i].poly;
  }
  return p;
}

BiPoly times_cyclo(BiPoly p, const std::map<int, int>& f) {
  for (const auto& [k, m] : f) {
    for (int i = 0; i < m; ++i) p *= cyclotomic(k);
  }
  return p;
}

// Iterated gcd of rem with the coefficient polynomials of num.
Poly gcd_with_content(const Poly& rem, const BiPoly& num) {
  Poly g = rem;
  for (const auto& c : num.coeffs()) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.degree() <= 0) return Poly::one();
  }
  return g;
}

}  // namespace

BiRationalFunction::BiRationalFunction(BiPoly num) : num_(std::move(num)) {}

BiRationalFunction::BiRationalFunction(const RationalFunction& f)
    : num_(BiPoly(f.num())), cyclo_(f.den_cyclo()), rem_(f.den_remainder()) {}

BiRationalFunction::BiRationalFunction(BiPoly num, const BiPoly& den) {
  if (den.is_zero()) throw PoleError("bivariate rational function with zero denominator");
  *this = assemble(std::move(num), {}, Poly::one(), {{den, 1}});
}

BiRationalFunction BiRationalFunction::from_monomial(const Monomial& m) {
  Monomial top{m.coef, std::max(m.s_pow, 0), std::max(m.x_pow, 0)};
  BiPoly num = BiPoly::monomial(top);
  std::vector<SAtom> atoms;
  if (m.s_pow < 0) atoms.push_back({BiPoly::s(), -m.s_pow});
  Poly rem = m.x_pow < 0 ? Poly::monomial(Rat(1), static_cast<std::size_t>(-m.x_pow)) : Poly::one();
  return assemble(std::move(num), {}, std::move(rem), std::move(atoms));
}

BiRationalFunction BiRationalFunction::assemble(BiPoly num, std::map<int, int> cyclo, Poly rem,
                                                std::vector<SAtom> raw) {
  BiRationalFunction r;
  r.num_ = std::move(num);
  r.cyclo_ = std::move(cyclo);
  r.rem_ = std::move(rem);
  for (auto& a : raw) {
    if (a.mult == 0) continue;
    if (a.poly.is_zero()) throw PoleError("zero denominator factor");
    Poly c = a.poly.content();
    BiPoly prim = *exact_div(a.poly, c);
    Rat low = prim.lowest_coeff();
    prim *= Rat(1 / low);
    // a.poly = c * low * prim
    Poly xpart = c * low;
    for (int i = 0; i < a.mult; ++i) r.rem_ = r.rem_ * xpart;
    if (prim.degree_s() >= 1) r.atoms_.push_back({std::move(prim), a.mult});
  }
  if (all_linear(r.atoms_)) {
    merge_equal(r.atoms_);
  } else {
    refine(r.atoms_);
  }
  r.reduce();
  return r;
}

void BiRationalFunction::reduce() {
  for (auto it = cyclo_.begin(); it != cyclo_.end();) {
    it = it->second <= 0 ? cyclo_.erase(it) : std::next(it);
  }
  atoms_.erase(std::remove_if(atoms_.begin(), atoms_.end(), [](const SAtom& a) { return a.mult <= 0; }),
               atoms_.end());
  if (num_.is_zero()) {
    cyclo_.clear();
    rem_ = Poly::one();
    atoms_.clear();
    return;
  }
  if (rem_.degree() > 0) {
    CycloFactorization f = cyclo_factorize(rem_);
    for (const auto& [k, m] : f.factors) cyclo_[k] += m;
    rem_ = std::move(f.remainder);
  }
  for (auto it = cyclo_.begin(); it != cyclo_.end();) {
    const Poly& psi = cyclotomic(it->first);
    while (it->second > 0) {
      auto q = exact_div(num_, psi);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? cyclo_.erase(it) : std::next(it);
  }
  while (rem_.degree() > 0) {
    Poly g = gcd_with_content(rem_, num_);
    if (g.degree() <= 0) break;
    num_ = *exact_div(num_, g);
    rem_ = *exact_div(rem_, g);
  }
  bool restart = true;
  while (restart) {
    restart = false;
    for (std::size_t i = 0; i < atoms_.size() && !restart; ++i) {
      SAtom& a = atoms_[i];
      if (a.poly.degree_s() == 1) {
        while (a.mult > 0) {
          auto q = exact_div(num_, a.poly);
          if (!q) break;
          num_ = std::move(*q);
          --a.mult;
        }
        continue;
      }
      while (a.mult > 0) {
        BiPoly g = gcd(num_, a.poly);
        if (g.degree_s() < 1) break;
        g = g.normalized_primitive();
        if (g == a.poly) {
          num_ = *exact_div(num_, a.poly);
          --a.mult;
          continue;
        }
        BiPoly rest = exact_div(a.poly, g)->normalized_primitive();
        int m = a.mult;
        atoms_.erase(atoms_.begin() + static_cast<long>(i));
        atoms_.push_back({g, m});
        atoms_.push_back({rest, m});
        refine(atoms_);
        restart = true;
        break;
      }
    }
  }
  atoms_.erase(std::remove_if(atoms_.begin(), atoms_.end(), [](const SAtom& a) { return a.mult <= 0; }),
               atoms_.end());
  Rat low = rem_.lowest();
  if (low != 1) {
    rem_ *= Rat(1 / low);
    num_ *= Rat(1 / low);
  }
}

BiPoly BiRationalFunction::den() const {
  BiPoly d(rem_ * cyclo_power_product(cyclo_));
  for (const auto& a : atoms_) d = d * a.poly.pow(static_cast<unsigned>(a.mult));
  return d;
}

RationalFunction BiRationalFunction::as_x_only() const {
  if (!is_x_only()) throw std::logic_error("as_x_only: value depends on s: " + to_string());
  return RationalFunction::from_factored(num_.coeff(0), cyclo_, rem_);
}

Rat BiRationalFunction::eval(const Rat& s, const Rat& x) const {
  Rat d = rem_.eval(x) * cyclo_power_product(cyclo_).eval(x);
  for (const auto& a : atoms_) {
    Rat v = a.poly.eval(s, x);
    for (int i = 0; i < a.mult; ++i) d *= v;
  }
  if (d == 0) throw PoleError("bivariate rational function evaluated at a pole");
  return num_.eval(s, x) / d;
}

RationalFunction BiRationalFunction::substitute(const Monomial& m) const {
  if (m.s_pow != 0 || m.x_pow < 0) throw std::invalid_argument("substitute: target must be c*x^k with k >= 0");
  Poly n = num_.eval_s(m);
  std::map<int, int> cyclo = cyclo_;
  Poly rem = rem_;
  for (const auto& a : atoms_) {
    Poly v = a.poly.eval_s(m);
    if (v.is_zero()) {
      throw PoleError("pole at s = " + m.to_string() + ": denominator factor (" + a.poly.to_string() +
                      ") vanishes");
    }
    CycloFactorization f = cyclo_factorize(v);
    for (const auto& [k, e] : f.factors) cyclo[k] += e * a.mult;
    for (int i = 0; i < a.mult; ++i) rem = rem * f.remainder;
  }
  return RationalFunction::from_factored(std::move(n), std::move(cyclo), std::move(rem));
}

BiRationalFunction BiRationalFunction::substitute_s(const Monomial& m) const {
  if (m.s_pow < 1 || m.coef == 0) throw std::invalid_argument("substitute_s: target must carry s");
  if (m.x_pow < 0) throw std::invalid_argument("substitute_s: negative power of x");
  std::vector<SAtom> raw;
  raw.reserve(atoms_.size());
  for (const auto& a : atoms_) raw.push_back({a.poly.substitute_s(m), a.mult});
  return assemble(num_.substitute_s(m), cyclo_, rem_, std::move(raw));
}

BiRationalFunction BiRationalFunction::derivative_s() const {
  BiRationalFunction r;
  r.cyclo_ = cyclo_;
  r.rem_ = rem_;
  if (atoms_.empty()) {
    r.num_ = num_.derivative_s();
    r.reduce();
    return r;
  }
  // (N / (X prod a_i^m_i))' = (N' prod a_i - N sum_i m_i a_i' prod_{k != i} a_k) / (X prod a_i^(m_i+1))
  BiPoly all(Poly::one());
  for (const auto& a : atoms_) all = all * a.poly;
  BiPoly sum;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    BiPoly others(Poly::one());
    for (std::size_t k = 0; k < atoms_.size(); ++k) {
      if (k != i) others = others * atoms_[k].poly;
    }
    sum += atoms_[i].poly.derivative_s() * others * Rat(atoms_[i].mult);
  }
  r.num_ = num_.derivative_s() * all - num_ * sum;
  r.atoms_ = atoms_;
  for (auto& a : r.atoms_) ++a.mult;
  r.reduce();
  return r;
}

std::vector<RationalFunction> BiRationalFunction::series_s(int order) const {
  BiPoly d(rem_ * cyclo_power_product(cyclo_));
  for (const auto& a : atoms_) {
    for (int i = 0; i < a.mult; ++i) d = mul_truncated(d, a.poly, order);
  }
  const Poly& d0 = d.coeff(0);
  if (d0.is_zero()) throw NotExpandable("series in s: denominator vanishes at s = 0");
  std::vector<RationalFunction> out;
  out.reserve(static_cast<std::size_t>(order) + 1);
  RationalFunction inv_d0 = RationalFunction(Poly::one(), d0);
  for (int j = 0; j <= order; ++j) {
    RationalFunction acc(num_.coeff(static_cast<std::size_t>(j)));
    for (int i = 1; i <= j; ++i) {
      const Poly& di = d.coeff(static_cast<std::size_t>(i));
      if (di.is_zero()) continue;
      acc -= RationalFunction(di) * out[static_cast<std::size_t>(j - i)];
    }
    out.push_back(acc * inv_d0);
  }
  return out;
}

BiRationalFunction BiRationalFunction::inverse() const {
  if (is_zero()) throw PoleError("inverse of zero");
  BiPoly new_num = den();
  return assemble(std::move(new_num), {}, Poly::one(), {{num_, 1}});
}

BiRationalFunction& BiRationalFunction::operator+=(const BiRationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  std::map<int, int> lcm_cyclo = cyclo_;
  for (const auto& [k, m] : o.cyclo_) lcm_cyclo[k] = std::max(lcm_cyclo[k], m);
  Poly g = gcd(rem_, o.rem_);
  Poly lcm_rem = rem_ * *exact_div(o.rem_, g);

  std::vector<SAtom> basis = common_basis(atoms_, o.atoms_);
  std::vector<int> ea = express(atoms_, basis);
  std::vector<int> eb = express(o.atoms_, basis);
  std::vector<int> el(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) el[i] = std::max(ea[i], eb[i]);

  auto cofactor = [&](const BiRationalFunction& f, const std::vector<int>& e) {
    std::map<int, int> miss;
    for (const auto& [k, m] : lcm_cyclo) {
      auto it = f.cyclo_.find(k);
      int d = m - (it == f.cyclo_.end() ? 0 : it->second);
      if (d > 0) miss[k] = d;
    }
    std::vector<int> de(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) de[i] = el[i] - e[i];
    BiPoly p = f.num_ * *exact_div(lcm_rem, f.rem_);
    p = times_cyclo(std::move(p), miss);
    return times_atoms(std::move(p), basis, de);
  };
  BiPoly sum = cofactor(*this, ea) + cofactor(o, eb);
  num_ = std::move(sum);
  cyclo_ = std::move(lcm_cyclo);
  rem_ = std::move(lcm_rem);
  for (std::size_t i = 0; i < basis.size(); ++i) basis[i].mult = el[i];
  atoms_ = std::move(basis);
  reduce();
  return *this;
}

BiRationalFunction& BiRationalFunction::operator*=(const BiRationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = BiRationalFunction();
  std::vector<SAtom> atoms = atoms_;
  atoms.insert(atoms.end(), o.atoms_.begin(), o.atoms_.end());
  std::map<int, int> cyclo = cyclo_;
  for (const auto& [k, m] : o.cyclo_) cyclo[k] += m;
  BiPoly prod = num_ * o.num_;
  *this = assemble(std::move(prod), std::move(cyclo), rem_ * o.rem_, std::move(atoms));
  return *this;
}

BiRationalFunction operator-(BiRationalFunction a) {
  a.num_ = -a.num_;
  return a;
}

bool operator==(const BiRationalFunction& a, const BiRationalFunction& b) {
  if (a.num_ == b.num_ && a.cyclo_ == b.cyclo_ && a.rem_ == b.rem_ && a.atoms_.size() == b.atoms_.size()) {
    bool same = true;
    for (std::size_t i = 0; i < a.atoms_.size() && same; ++i) {
      same = a.atoms_[i].poly == b.atoms_[i].poly && a.atoms_[i].mult == b.atoms_[i].mult;
    }
    if (same) return true;
  }
  return (a - b).is_zero();
}

BiRationalFunction BiRationalFunction::pow(unsigned e) const {
  BiRationalFunction r(1);
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

std::string BiRationalFunction::den_string(const std::string& svar, const std::string& xvar) const {
  std::string out = CycloFactorization{cyclo_, rem_}.to_string(xvar);
  if (out == "1") out.clear();
  for (const auto& a : atoms_) {
    std::string f = "(" + a.poly.to_string(svar, xvar) + ")";
    if (a.mult > 1) f += "^" + std::to_string(a.mult);
    out += out.empty() ? f : "*" + f;
  }
  return out.empty() ? "1" : out;
}

std::string BiRationalFunction::to_string(const std::string& svar, const std::string& xvar) const {
  return "(" + num_.to_string(svar, xvar) + ")/(" + den_string(svar, xvar) + ")";
}

}  // namespace dba
