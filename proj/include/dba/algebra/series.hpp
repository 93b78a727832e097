#pragma once

#include <string>
#include <vector>

#include "dba/algebra/bi_rational.hpp"
#include "dba/algebra/rational_function.hpp"
#include "dba/error.hpp"

namespace dba {

/// Truncated power series c_0 + c_1 v + ... + c_N v^N.
template <class T>
struct Series {
  std::string var = "x";
  std::vector<T> coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  const T& operator[](std::size_t i) const { return coeffs[i]; }
};

// Taylor coefficients at 0. Throws NotExpandable if the denominator vanishes there.
Series<Rat> series_of(const RationalFunction& f, int order, const std::string& var = "x");
// Expansion in s with coefficients in Q(x).
Series<RationalFunction> series_of(const BiRationalFunction& f, int order, const std::string& var = "s");

template <class T>
Series<T> series_mul(const Series<T>& a, const Series<T>& b, int order) {
  Series<T> r{a.var, std::vector<T>(static_cast<std::size_t>(order) + 1, T(0))};
  for (int i = 0; i <= std::min(order, a.order()); ++i) {
    for (int j = 0; i + j <= order && j <= b.order(); ++j) {
      r.coeffs[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  }
  return r;
}

template <class T>
Series<T> series_inverse(const Series<T>& a, int order) {
  if (a.coeffs.empty() || a[0] == T(0)) throw NotExpandable("series inverse: constant term is zero");
  const T inv0 = T(1) / a[0];
  Series<T> r{a.var, {}};
  r.coeffs.reserve(static_cast<std::size_t>(order) + 1);
  r.coeffs.push_back(inv0);
  for (int n = 1; n <= order; ++n) {
    T acc(0);
    for (int k = 1; k <= std::min(n, a.order()); ++k) {
      acc += a[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(n - k)];
    }
    r.coeffs.push_back(-(acc * inv0));
  }
  return r;
}

// a^e for rational e, a_0 = 1; n b_n = sum_{k=1}^n ((e+1)k - n) a_k b_{n-k}.
template <class T>
Series<T> series_power(const Series<T>& a, const Rat& e, int order) {
  if (a.coeffs.empty() || !(a[0] == T(1))) throw NotExpandable("series power: constant term must be 1");
  Series<T> b{a.var, {}};
  b.coeffs.reserve(static_cast<std::size_t>(order) + 1);
  b.coeffs.push_back(T(1));
  for (int n = 1; n <= order; ++n) {
    T acc(0);
    for (int k = 1; k <= std::min(n, a.order()); ++k) {
      Rat w = (e + 1) * k - n;
      if (w == 0) continue;
      acc += T(w) * a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(n - k)];
    }
    b.coeffs.push_back(acc * T(Rat(1, n)));
  }
  return b;
}

template <class T>
Series<T> series_sqrt(const Series<T>& a, int order) {
  return series_power(a, Rat(1, 2), order);
}

}  // namespace dba
