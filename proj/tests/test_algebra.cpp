#include <random>

#include "doctest.h"
#include "dba/algebra/bi_rational.hpp"
#include "dba/algebra/cyclotomic.hpp"
#include "dba/algebra/rational_function.hpp"
#include "dba/error.hpp"

using namespace dba;

namespace {

Poly one_minus_xk(int k) {
  Poly p = Poly::monomial(Rat(-1), static_cast<std::size_t>(k));
  return p + Poly::one();
}

BiRationalFunction bx(long c, int sp, int xp) { return BiRationalFunction::from_monomial({Rat(c), sp, xp}); }

}  // namespace

TEST_CASE("cyclotomic examples") {
  CHECK(cyclotomic(1) == Poly({1, -1}));
  CHECK(cyclotomic(2) == Poly({1, 1}));
  CHECK(cyclotomic(6) == Poly({1, -1, 1}));
}

TEST_CASE("product of cyclotomics over divisors is 1-x^k") {
  for (int k = 1; k <= 64; ++k) {
    Poly p = Poly::one();
    for (int d = 1; d <= k; ++d) {
      if (k % d == 0) p = p * cyclotomic(d);
    }
    CHECK(p == one_minus_xk(k));
  }
}

TEST_CASE("cyclo_factorize examples") {
  auto f = cyclo_factorize(cyclotomic(1).pow(5) * cyclotomic(2));
  CHECK(f.factors == std::map<int, int>{{1, 5}, {2, 1}});
  CHECK(f.remainder == Poly::one());

  auto g = cyclo_factorize(Poly({2, 0, 1}));
  CHECK(g.factors.empty());
  CHECK(g.remainder == Poly({2, 0, 1}));

  auto h = cyclo_factorize(one_minus_xk(6));
  CHECK(h.factors == std::map<int, int>{{1, 1}, {2, 1}, {3, 1}, {6, 1}});
  CHECK(h.remainder == Poly::one());
}

TEST_CASE("cyclo_factorize round trip on random products") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    std::map<int, int> want;
    Poly p = Poly::one();
    for (int k = 1; k <= 12; ++k) {
      int m = static_cast<int>(rng() % 6);
      if (rng() % 3 == 0) m = 0;
      if (m > 0) want[k] = m;
      p = p * cyclotomic(k).pow(static_cast<unsigned>(m));
    }
    // |x + x^3| <= 2 < 3 on the unit circle
    Poly rest({3, 1, 0, 1});
    auto f = cyclo_factorize(p * rest);
    CHECK(f.factors == want);
    CHECK(f.expand() == p * rest);
  }
}

TEST_CASE("rational function reduction and normalization") {
  RationalFunction f(Poly({1, 0, -1}), Poly({1, -1}));
  CHECK(f == RationalFunction(Poly({1, 1})));
  RationalFunction g(Poly({1}), Poly({-1, 1}));
  CHECK(g.den() == Poly({1, -1}));
  CHECK(g.num() == Poly({-1}));
  CHECK_THROWS_AS(RationalFunction(Poly::one(), Poly({1, -1})).eval(Rat(1)), PoleError);
}

TEST_CASE("bivariate substitution with cancellation") {
  // (1 - s^2)/(1 - s) at s = 1
  BiRationalFunction f(BiPoly(std::vector<Poly>{Poly({1}), Poly(), Poly({-1})}),
                       BiPoly(std::vector<Poly>{Poly({1}), Poly({-1})}));
  CHECK(f.substitute({Rat(1), 0, 0}) == RationalFunction(2));

  BiRationalFunction seed = bx(1, 1, 1) / (BiRationalFunction(1) - bx(1, 1, 1));
  CHECK(seed.substitute({Rat(1), 0, 0}) == RationalFunction(Poly({0, 1}), Poly({1, -1})));
  CHECK(seed.substitute({Rat(1), 0, 1}) == RationalFunction(Poly({0, 0, 1}), Poly({1, 0, -1})));
  CHECK(seed.substitute({Rat(0), 0, 0}) == RationalFunction(0));

  BiRationalFunction pole = BiRationalFunction(1) / (BiRationalFunction(1) - bx(1, 1, 0));
  CHECK_THROWS_AS(pole.substitute({Rat(1), 0, 0}), PoleError);
}

TEST_CASE("bivariate derivative") {
  BiRationalFunction seed = bx(1, 1, 1) / (BiRationalFunction(1) - bx(1, 1, 1));
  BiRationalFunction d = seed.derivative_s();
  BiRationalFunction want = bx(1, 0, 1) / (BiRationalFunction(1) - bx(1, 1, 1)).pow(2);
  CHECK(d == want);
  auto sd = d.series_s(6);
  auto ss = seed.series_s(7);
  for (int j = 0; j <= 6; ++j) CHECK(sd[static_cast<std::size_t>(j)] == ss[static_cast<std::size_t>(j + 1)] * RationalFunction(j + 1));

  CHECK(BiRationalFunction(RationalFunction(Poly({0, 1}), Poly({1, -1}))).derivative_s().is_zero());
  CHECK(bx(1, 2, 0).derivative_s() == bx(2, 1, 0));
}

TEST_CASE("bivariate arithmetic keeps denominators reduced") {
  BiRationalFunction a = BiRationalFunction(1) / (BiRationalFunction(1) - bx(1, 1, 1));
  BiRationalFunction b = BiRationalFunction(1) / (BiRationalFunction(1) - bx(1, 1, 2));
  BiRationalFunction c = a * b / a;
  CHECK(c == b);
  CHECK(c.den_atoms().size() == 1);
  BiRationalFunction z = a + b - a - b;
  CHECK(z.is_zero());
  BiRationalFunction q = (a - b) / (a - b);
  CHECK(q == BiRationalFunction(1));
  CHECK(q.den_atoms().empty());
}

TEST_CASE("substitute_s s -> x s") {
  BiRationalFunction a = bx(1, 1, 1) / (BiRationalFunction(1) - bx(1, 1, 1));
  BiRationalFunction b = a.substitute_s({Rat(1), 1, 1});
  CHECK(b == bx(1, 1, 2) / (BiRationalFunction(1) - bx(1, 1, 2)));
}

#include "dba/algebra/partial_fractions.hpp"
#include "dba/algebra/series.hpp"

namespace {

std::vector<Rat> rats(std::initializer_list<long> v) {
  std::vector<Rat> r;
  for (long c : v) r.emplace_back(c);
  return r;
}

RationalFunction rf(Poly n, Poly d) { return RationalFunction(std::move(n), d); }

}  // namespace

TEST_CASE("series_of") {
  CHECK(series_of(rf(Poly::one(), Poly({1, -1}).pow(3)), 3).coeffs == rats({1, 3, 6, 10}));
  CHECK(series_of(rf(Poly::one(), Poly({1, -1})), 2).coeffs == rats({1, 1, 1}));
  CHECK(series_of(rf(Poly({0, 1}), Poly({1, -1}).pow(2)), 4).coeffs == rats({0, 1, 2, 3, 4}));
  CHECK_THROWS_AS(series_of(rf(Poly::one(), Poly({0, 1})), 3), NotExpandable);
}

TEST_CASE("series_sqrt") {
  Series<Rat> one{"q", rats({1})};
  CHECK(series_sqrt(one, 4).coeffs == rats({1, 0, 0, 0, 0}));
  Series<Rat> sq{"q", rats({1, 2, 1})};
  CHECK(series_sqrt(sq, 4).coeffs == rats({1, 1, 0, 0, 0}));
  Series<Rat> a = series_of(rf(Poly({1, 1}), Poly({1, -3})), 5, "q");
  Series<Rat> b = series_sqrt(a, 5);
  std::vector<Rat> half;
  for (int i = 1; i <= 5; ++i) half.push_back(b[static_cast<std::size_t>(i)] / 2);
  CHECK(half == rats({1, 2, 5, 13, 35}));
  Series<Rat> bad{"q", rats({4, 1})};
  CHECK_THROWS_AS(series_sqrt(bad, 3), NotExpandable);
}

TEST_CASE("partial fractions of the cap") {
  BiRationalFunction x = BiRationalFunction::x();
  // t (1 + x - t x) / ((1 - t)(1 - t x))
  PoleRational cap({BiRationalFunction(), BiRationalFunction(1) + x, -x}, {{{Rat(1), 0, 0}, 1}, {{Rat(1), 0, 1}, 1}});
  PartialFractionForm pf = partial_fractions_t(cap);
  REQUIRE(pf.poly.size() == 1);
  CHECK(pf.poly[0] == BiRationalFunction(-1));
  REQUIRE(pf.terms.size() == 2);
  BiRationalFunction one_minus_x = BiRationalFunction(1) - x;
  CHECK(*pf.find({Rat(1), 0, 0}, 1) == one_minus_x.inverse());
  CHECK(*pf.find({Rat(1), 0, 1}, 1) == -(x / one_minus_x));
  CHECK(pf.recombine() == cap);
}

TEST_CASE("partial fractions: simple cases") {
  BiRationalFunction x = BiRationalFunction::x();
  PoleRational f({BiRationalFunction(1)}, {{{Rat(1), 0, 0}, 1}, {{Rat(1), 0, 1}, 1}});
  PartialFractionForm pf = partial_fractions_t(f);
  CHECK(pf.poly.empty());
  CHECK(*pf.find({Rat(1), 0, 0}, 1) == (BiRationalFunction(1) - x).inverse());
  CHECK(*pf.find({Rat(1), 0, 1}, 1) == -(x / (BiRationalFunction(1) - x)));

  PoleRational g({BiRationalFunction(1)}, {{{Rat(1), 1, 0}, 1}});
  PartialFractionForm pg = partial_fractions_t(g);
  REQUIRE(pg.terms.size() == 1);
  CHECK(pg.terms[0].coef == BiRationalFunction(1));
  CHECK(pg.terms[0].alpha == Monomial{Rat(1), 1, 0});
  CHECK(pg.terms[0].j == 1);
}

TEST_CASE("partial fractions round trip with repeated poles") {
  BiRationalFunction s = BiRationalFunction::s();
  BiRationalFunction x = BiRationalFunction::x();
  PoleRational f({s + x, BiRationalFunction(3), s * x, BiRationalFunction(1), x},
                 {{{Rat(1), 0, 1}, 2}, {{Rat(1), 1, 0}, 1}, {{Rat(1), 1, 1}, 3}, {{Rat(1), 0, 0}, 1}});
  PartialFractionForm pf = partial_fractions_t(f);
  CHECK(pf.recombine() == f);
}

TEST_CASE("from_polys rejects non-monomial poles") {
  BiRationalFunction x = BiRationalFunction::x();
  // 1 - t - t^2
  CHECK_THROWS_AS(PoleRational::from_polys({BiRationalFunction(1)}, {BiRationalFunction(1), BiRationalFunction(-1),
                                                                      BiRationalFunction(-1)}),
                  UnsupportedPole);
  // (1 - t)(1 - x t) = 1 - (1 + x) t + x t^2
  PoleRational p = PoleRational::from_polys({BiRationalFunction(1)},
                                            {BiRationalFunction(1), -(BiRationalFunction(1) + x), x});
  CHECK(p.poles().size() == 2);
}

TEST_CASE("hadamard examples") {
  BiRationalFunction s = BiRationalFunction::s();
  BiRationalFunction x = BiRationalFunction::x();
  BiRationalFunction geo = (BiRationalFunction(1) - s).inverse();

  PartialFractionForm g1;
  g1.terms.push_back({BiRationalFunction(1), {Rat(1), 0, 1}, 1});
  CHECK(hadamard(geo, g1) == (BiRationalFunction(1) - x).inverse());

  PartialFractionForm g2;
  g2.terms.push_back({BiRationalFunction(1), {Rat(2), 0, 0}, 1});
  BiRationalFunction quad = BiRationalFunction(1) + BiRationalFunction(3) * s + BiRationalFunction(5) * s * s;
  CHECK(hadamard(quad, g2) == BiRationalFunction(27));

  // t / (1 - x t)^2
  PartialFractionForm g3 = partial_fractions_t(PoleRational({BiRationalFunction(), BiRationalFunction(1)},
                                                            {{{Rat(1), 0, 1}, 2}}));
  CHECK(hadamard(geo, g3) == (BiRationalFunction(1) - x).pow(2).inverse());
}

TEST_CASE("hadamard agrees with truncated dot product") {
  // f = 1/((1 - t)^2 (1 + t)) as a function of the series variable; g in t with symbolic alpha = x
  BiRationalFunction s = BiRationalFunction::s();
  BiRationalFunction f = ((BiRationalFunction(1) - s).pow(2) * (BiRationalFunction(1) + s)).inverse();
  PoleRational g({BiRationalFunction(1), BiRationalFunction(2)}, {{{Rat(1), 0, 1}, 3}});
  PartialFractionForm pg = partial_fractions_t(g);
  BiRationalFunction h = hadamard(f, pg);
  const int N = 60;
  auto fs = f.series_s(N + 1);
  auto gs = g.series(N + 1);
  // [t^n] g has lowest power x^(n-1)
  std::vector<Rat> direct(N + 1, Rat(0));
  for (int n = 0; n <= N + 1; ++n) {
    Rat fn = fs[static_cast<std::size_t>(n)].eval(Rat(0));
    Poly gn = gs[static_cast<std::size_t>(n)].as_x_only().num();
    for (int k = 0; k <= gn.degree() && k <= N; ++k) direct[static_cast<std::size_t>(k)] += fn * gn.coeff(static_cast<std::size_t>(k));
  }
  auto hs = series_of(h.as_x_only(), N);
  CHECK(hs.coeffs == direct);
}

#include "dba/algebra/serialize.hpp"

TEST_CASE("json round trip") {
  Rat r(-7, 12);
  CHECK(to_json(r) == "-7/12");
  CHECK(rat_from_json(to_json(r)) == r);
  RationalFunction f(Poly({1, 2, 1, -1}), cyclotomic(1).pow(5) * cyclotomic(2) * Poly({3, 0, 1}));
  Json j = to_json(f);
  CHECK(j["den_cyclo_factors"] == Json::parse("[[1,5],[2,1]]"));
  CHECK(rational_function_from_json(Json::parse(j.dump())) == f);
  CHECK(to_json(rational_function_from_json(j)).dump() == j.dump());

  BiRationalFunction s = BiRationalFunction::s();
  BiRationalFunction x = BiRationalFunction::x();
  BiRationalFunction g = s * x / ((BiRationalFunction(1) - s * x).pow(2) * (BiRationalFunction(1) - x));
  CHECK(bi_rational_from_json(Json::parse(to_json(g).dump())) == g);
}
