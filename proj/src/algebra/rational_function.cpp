#include "dba/algebra/rational_function.hpp"

#include <algorithm>

#include "dba/error.hpp"

namespace dba {

namespace {

Poly multiply_cyclo(Poly p, const std::map<int, int>& factors) {
  for (const auto& [k, m] : factors) {
    for (int i = 0; i < m; ++i) p *= cyclotomic(k);
  }
  return p;
}

}  // namespace

RationalFunction::RationalFunction(Poly num) : num_(std::move(num)) {}

RationalFunction::RationalFunction(Poly num, const Poly& den) {
  if (den.is_zero()) throw PoleError("rational function with zero denominator");
  CycloFactorization f = cyclo_factorize(den);
  num_ = std::move(num);
  cyclo_ = std::move(f.factors);
  rem_ = std::move(f.remainder);
  reduce();
}

RationalFunction RationalFunction::from_factored(Poly num, std::map<int, int> den_cyclo, Poly den_remainder) {
  if (den_remainder.is_zero()) throw PoleError("rational function with zero denominator");
  RationalFunction r;
  r.num_ = std::move(num);
  r.cyclo_ = std::move(den_cyclo);
  r.rem_ = std::move(den_remainder);
  r.reduce();
  return r;
}

void RationalFunction::reduce() {
  for (auto it = cyclo_.begin(); it != cyclo_.end();) {
    if (it->second <= 0) {
      it = cyclo_.erase(it);
    } else {
      ++it;
    }
  }
  if (num_.is_zero()) {
    cyclo_.clear();
    rem_ = Poly::one();
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
    if (it->second == 0) {
      it = cyclo_.erase(it);
    } else {
      ++it;
    }
  }
  while (rem_.degree() > 0) {
    Poly g = gcd(num_, rem_);
    if (g.degree() <= 0) break;
    num_ = *exact_div(num_, g);
    rem_ = *exact_div(rem_, g);
  }
  Rat low = rem_.lowest();
  if (low != 1) {
    rem_ *= 1 / low;
    num_ *= 1 / low;
  }
}

Poly RationalFunction::den() const { return multiply_cyclo(rem_, cyclo_); }

Rat RationalFunction::eval(const Rat& at) const {
  Rat d = den().eval(at);
  if (d == 0) throw PoleError("rational function evaluated at a pole: x = " + at.get_str());
  return num_.eval(at) / d;
}

RationalFunction RationalFunction::derivative() const {
  // (n/d)' = (n' d - n d') / d^2
  Poly d = den();
  return RationalFunction(num_.derivative() * d - num_ * d.derivative(), d * d);
}

RationalFunction RationalFunction::substitute_monomial(const Rat& c, std::size_t k) const {
  return RationalFunction(num_.substitute_monomial(c, k), den().substitute_monomial(c, k));
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw PoleError("inverse of zero rational function");
  return RationalFunction(den(), num_);
}

RationalFunction RationalFunction::pow(unsigned e) const {
  RationalFunction r(1);
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  std::map<int, int> lcm_cyclo = cyclo_;
  for (const auto& [k, m] : o.cyclo_) lcm_cyclo[k] = std::max(lcm_cyclo[k], m);
  Poly g = gcd(rem_, o.rem_);
  Poly lcm_rem = rem_ * *exact_div(o.rem_, g);
  auto missing = [&](const std::map<int, int>& have) {
    std::map<int, int> out;
    for (const auto& [k, m] : lcm_cyclo) {
      auto it = have.find(k);
      int e = m - (it == have.end() ? 0 : it->second);
      if (e > 0) out[k] = e;
    }
    return out;
  };
  Poly a = multiply_cyclo(num_ * *exact_div(lcm_rem, rem_), missing(cyclo_));
  Poly b = multiply_cyclo(o.num_ * *exact_div(lcm_rem, o.rem_), missing(o.cyclo_));
  num_ = a + b;
  cyclo_ = std::move(lcm_cyclo);
  rem_ = std::move(lcm_rem);
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  num_ = num_ * o.num_;
  for (const auto& [k, m] : o.cyclo_) cyclo_[k] += m;
  rem_ = rem_ * o.rem_;
  reduce();
  return *this;
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction r = a;
  r.num_ = -r.num_;
  return r;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.num_ == b.num_ && a.cyclo_ == b.cyclo_ && a.rem_ == b.rem_) return true;
  return a.num_ * b.den() == b.num_ * a.den();
}

std::string RationalFunction::to_string(const std::string& var) const {
  std::string n = "(" + num_.to_string(var) + ")";
  if (is_polynomial()) {
    Rat c = rem_.coeff(0);
    return c == 1 ? n : n + "/" + c.get_str();
  }
  return n + "/" + den_factorization().to_string(var);
}

}  // namespace dba
