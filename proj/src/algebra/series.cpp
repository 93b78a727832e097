#include "dba/algebra/series.hpp"

namespace dba {

Series<Rat> series_of(const RationalFunction& f, int order, const std::string& var) {
  const Poly d = f.den();
  if (d.coeff(0) == 0) throw NotExpandable("series at 0: denominator vanishes");
  const Rat inv0 = 1 / d.coeff(0);
  Series<Rat> r{var, {}};
  r.coeffs.reserve(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    Rat acc = f.num().coeff(static_cast<std::size_t>(n));
    for (int k = 1; k <= std::min(n, d.degree()); ++k) {
      acc -= d.coeff(static_cast<std::size_t>(k)) * r.coeffs[static_cast<std::size_t>(n - k)];
    }
    r.coeffs.push_back(acc * inv0);
  }
  return r;
}

Series<RationalFunction> series_of(const BiRationalFunction& f, int order, const std::string& var) {
  return {var, f.series_s(order)};
}

}  // namespace dba
