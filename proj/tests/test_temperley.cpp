#include "doctest.h"
#include "dba/algebra/cyclotomic.hpp"
#include "dba/algebra/series.hpp"
#include "dba/error.hpp"
#include "dba/temperley/temperley.hpp"

using namespace dba;
using namespace dba::temperley;

namespace {

const BlockGFs& blocks() {
  static const BlockGFs b = build_block_gfs();
  return b;
}

// f_1 .. f_n from the recurrence
std::vector<RationalFunction> f_list(int n) {
  std::vector<RationalFunction> out;
  UncappedGF u = seed_gf(blocks());
  for (int k = 1; k <= n; ++k) {
    out.push_back(cap_off(u));
    if (k < n) u = step(blocks(), u);
  }
  return out;
}

Poly psi(int k) { return cyclotomic(k); }

}  // namespace

TEST_CASE("block generating functions") {
  const BlockGFs& b = blocks();
  auto ts = b.block.series(4);
  for (const auto& c : ts) CHECK(c.substitute({Rat(0), 0, 0}).is_zero());
  // [s t] T = (1 + x)/(1 - x), from a symbolic expansion of the bracket sum
  auto s_coeffs = ts[1].series_s(2);
  CHECK(s_coeffs[0].is_zero());
  CHECK(s_coeffs[1] == RationalFunction(Poly({1, 1}), Poly({1, -1})));
  auto cs = b.cap.series(3);
  CHECK(cs[0].is_zero());
  CHECK(cs[1] == BiRationalFunction(BiPoly(Poly({1, 1}))));
  CHECK(b.seed == BiRationalFunction(BiPoly::monomial({Rat(1), 1, 1}), BiPoly(std::vector<Poly>{Poly({1}), Poly({0, -1})})));
}

TEST_CASE("printed coefficients reproduce the bracket sum") {
  CHECK(printed_block_pf(printed_block_coefficients()).recombine() == block_from_brackets());
  auto c = printed_block_coefficients();
  c[3] += BiRationalFunction::x();
  CHECK_FALSE(printed_block_pf(c).recombine() == block_from_brackets());
}

TEST_CASE("first steps of the recurrence") {
  const BlockGFs& b = blocks();
  UncappedGF u1 = seed_gf(b);
  UncappedGF u2 = step(b, u1);
  CHECK(u2.value.substitute({Rat(0), 0, 0}).is_zero());
  CHECK(u2.value.den_cyclo() == std::map<int, int>{{1, 3}, {2, 2}});
  REQUIRE(u2.value.den_atoms().size() == 2);
  CHECK(u2.value.den_atoms()[0].poly.to_string() == "1 - s*x");
  CHECK(u2.value.den_atoms()[0].mult == 2);
  CHECK(u2.value.den_atoms()[1].poly.to_string() == "1 - s*x^2");
  CHECK(u2.value.den_atoms()[1].mult == 1);
  CHECK(step_hadamard(b, u1) == step_recurrence(b, u1));
}

TEST_CASE("f_n closed forms") {
  auto f = f_list(3);
  CHECK(f[0] == RationalFunction(Poly({0, 1, 1, -1}), psi(1).pow(2) * psi(2)));
  CHECK(f[1] == RationalFunction(Poly({0, 1, 4, 7, 7, 0, -5, -4, 1, 1}), psi(1).pow(5) * psi(2).pow(3) * psi(3)));
  CHECK(f[2].den_cyclo() == std::map<int, int>{{1, 8}, {2, 5}, {3, 3}, {4, 1}});
  CHECK(series_of(f[0], 5).coeffs == std::vector<Rat>{0, 1, 2, 2, 3, 3});
  for (const auto& fn : f) CHECK(fn.eval(Rat(0)) == 0);
}

TEST_CASE("degenerate recurrences") {
  const BlockGFs& b = blocks();
  UncappedGF u1 = seed_gf(b);
  UncappedGF u2 = step(b, u1);
  Specialization sp = specialize_and_check(u1, u2);
  CHECK(sp.at_one_ok);
  CHECK(sp.at_x_ok);
  // the typeset forms differ from the true limits
  CHECK_FALSE(sp.printed_at_one_ok);
  CHECK_FALSE(sp.printed_at_x_ok);

  UncappedGF zero = make_uncapped(1, BiRationalFunction());
  UncappedGF next = step(b, zero);
  CHECK(next.value.is_zero());
  Specialization z = specialize_and_check(zero, next);
  CHECK(z.at_one.is_zero());
  CHECK(z.at_x.is_zero());
}

TEST_CASE("structure of the uncapped generating function") {
  const BlockGFs& b = blocks();
  CHECK(verify_structure(1, b.seed).pass());
  CHECK(verify_structure(1, b.seed).strict_ok);
  UncappedGF u = seed_gf(b);
  for (int n = 2; n <= 4; ++n) {
    u = step(b, u);
    StructureReport r = verify_structure(n, u.value);
    CHECK(r.pass());
    CHECK(r.violations.empty());
  }
  BiRationalFunction s = BiRationalFunction::s();
  BiRationalFunction planted = b.seed / (BiRationalFunction(1) - s);
  StructureReport bad = verify_structure(1, planted);
  CHECK_FALSE(bad.pass());
  CHECK_FALSE(bad.no_one_minus_s);
}

TEST_CASE("c5 on the unit circle") {
  C5Entry e1 = c5_unit_circle_entry(1, 1e-9);
  CHECK(e1.mult_one == 2);
  CHECK(e1.mult_minus == 1);
  CHECK(e1.cofactor == Poly::one());
  // c_5(x; x) = x/(1 - x)^2
  CHECK(printed_block_coefficients()[5].substitute({Rat(1), 0, 1}) == RationalFunction(Poly::x(), psi(1).pow(2)));
  C5Entry e2 = c5_unit_circle_entry(2, 1e-9);
  CHECK(e2.mult_one == 1);
  CHECK(e2.mult_minus == 0);
  for (const auto& e : c5_unit_circle(30)) {
    CHECK(e.pass);
    CHECK(e.min_distance > 1e-9);
  }
}

TEST_CASE("root finder") {
  // (x - 2)(x^2 + 1)
  auto roots = polynomial_roots(Poly({-2, 1, -2, 1}));
  REQUIRE(roots.size() == 3);
  int found = 0;
  for (auto [re, im] : roots) {
    if (std::abs(re - 2) < 1e-12 && std::abs(im) < 1e-12) ++found;
    if (std::abs(re) < 1e-12 && std::abs(std::abs(im) - 1) < 1e-12) ++found;
  }
  CHECK(found == 3);
}

TEST_CASE("pole certificates") {
  const BlockGFs& b = blocks();
  UncappedGF u = seed_gf(b);
  PoleCertificate c1 = psi_pole_certificate(u, cap_off(u));
  CHECK(c1.psi_multiplicity == 1);
  CHECK(c1.pass());
  u = step(b, u);
  PoleCertificate c2 = psi_pole_certificate(u, cap_off(u));
  CHECK(c2.psi_multiplicity == 1);
  CHECK(c2.pass());
  RationalFunction doubled = cap_off(u) / RationalFunction(psi(3));
  CHECK_FALSE(psi_pole_certificate(u, doubled).pass());
}
