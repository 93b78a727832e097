#include "dba/temperley/temperley.hpp"

#include "dba/algebra/cyclotomic.hpp"
#include "dba/error.hpp"

namespace dba::temperley {

namespace {

using BRF = BiRationalFunction;

BRF mono(long c, int sp, int xp) { return BRF::from_monomial({Rat(c), sp, xp}); }

const Monomial kOne{Rat(1), 0, 0};
const Monomial kS{Rat(1), 1, 0};
const Monomial kX{Rat(1), 0, 1};
const Monomial kSX{Rat(1), 1, 1};

// <m> for a monomial in s, t, x; t enters as a pole, everything else as a coefficient.
PoleRational bracket_t(int t_pow, const Monomial& rest) {
  if (t_pow == 0) return PoleRational::constant(bracket(rest));
  return PoleRational::geometric(rest);
}

}  // namespace

BRF bracket(const Monomial& m) {
  BRF f = BRF::from_monomial(m);
  return f / (BRF(1) - f);
}

PoleRational block_from_brackets() {
  const PoleRational stx = bracket_t(1, kSX);
  const PoleRational st = bracket_t(1, kS);
  const PoleRational tx = bracket_t(1, kX);
  const PoleRational t = bracket_t(1, kOne);
  const PoleRational sx = bracket_t(0, kSX);
  const PoleRational x = bracket_t(0, kX);
  const PoleRational a = stx + st + stx * st;
  const PoleRational b = tx + t + tx * t;
  return a + stx * b + a * sx + tx * a + tx * stx * b + tx * a * sx + b * sx + b * x * sx;
}

std::array<BRF, 6> printed_block_coefficients() {
  const BRF s = BRF::s();
  const BRF x = BRF::x();
  const BRF one(1);
  const BRF omx = one - x;
  const BRF oms = one - s;
  const BRF omsx = one - s * x;
  const BRF smx = s - x;
  std::array<BRF, 6> c;
  c[0] = -(s * x) / (omx * omsx);
  c[1] = BRF(2) * s * x / (omx.pow(2) * omsx);
  c[2] = s / (omx * omsx * smx);
  BRF n3 = (s - one) * s - (s - BRF(2)) * (s * s - s + one) * s * x - (s * s - s + BRF(3)) * s * s * x * x +
           (BRF(2) * s * s + one) * s * x.pow(3) - s * s * x.pow(4);
  c[3] = n3 / (omx.pow(2) * oms.pow(2) * omsx * smx);
  c[4] = -(s * x * x) / (omx * oms);
  c[5] = s * (one - (one + x - x * x) * s) / (omx * oms.pow(2) * omsx);
  return c;
}

PartialFractionForm printed_block_pf(const std::array<BRF, 6>& c) {
  // t / (1 - x t)^2 = (1/x) (1/(1 - x t)^2 - 1/(1 - x t))
  const BRF inv_x = mono(1, 0, -1);
  PartialFractionForm pf;
  pf.poly = {c[0]};
  pf.terms.push_back({c[1], kOne, 1});
  pf.terms.push_back({c[2], kS, 1});
  pf.terms.push_back({c[3] - c[4] * inv_x, kX, 1});
  pf.terms.push_back({c[4] * inv_x, kX, 2});
  pf.terms.push_back({c[5], kSX, 1});
  return pf;
}

BlockGFs build_block_gfs() {
  BlockGFs b;
  b.seed = bracket(kSX);
  const BRF x = BRF::x();
  b.cap = PoleRational({BRF(), BRF(1) + x, -x}, {{kOne, 1}, {kX, 1}});
  b.cap_pf = partial_fractions_t(b.cap);
  const BRF omx = BRF(1) - x;
  PartialFractionForm cap_printed;
  cap_printed.poly = {BRF(-1)};
  cap_printed.terms = {{omx.inverse(), kOne, 1}, {-(x / omx), kX, 1}};
  if (!(cap_printed.recombine() == b.cap)) throw ConsistencyError("cap partial fraction identity does not hold");

  b.block = block_from_brackets();
  b.block_pf = partial_fractions_t(b.block);
  b.c = printed_block_coefficients();
  const PartialFractionForm printed = printed_block_pf(b.c);
  if (!(printed.recombine() == b.block)) {
    std::string what;
    const char* names[] = {"c_1", "c_2", "c_3 - c_4/x", "c_4/x", "c_5"};
    if (b.block_pf.poly.size() != 1 || !(b.block_pf.poly[0] == b.c[0])) what += " c_0";
    for (std::size_t i = 0; i < printed.terms.size(); ++i) {
      const auto& term = printed.terms[i];
      const BRF* got = b.block_pf.find(term.alpha, term.j);
      if (got == nullptr || !(*got == term.coef)) what += std::string(" ") + names[i];
    }
    throw ConsistencyError("printed block coefficients disagree with the bracket sum:" + what);
  }
  return b;
}

UncappedGF make_uncapped(int n, BRF value) {
  UncappedGF u;
  u.n = n;
  u.value = std::move(value);
  u.at_one = u.value.substitute(kOne);
  u.at_x = u.value.substitute(kX);
  BRF d1 = u.value.derivative_s();
  u.d1_at_x = d1.substitute(kX);
  u.d2_at_x = d1.derivative_s().substitute(kX);
  u.at_x2 = u.value.substitute({Rat(1), 0, 2});
  return u;
}

UncappedGF seed_gf(const BlockGFs& b) { return make_uncapped(1, b.seed); }

BRF step_recurrence(const BlockGFs& b, const UncappedGF& u) {
  BRF r = b.c[1] * BRF(u.at_one);
  r += b.c[2] * u.value;
  r += b.c[3] * BRF(u.at_x);
  r += b.c[4] * BRF(u.d1_at_x);
  r += b.c[5] * u.value.substitute_s(kSX);
  return r;
}

BRF step_hadamard(const BlockGFs& b, const UncappedGF& u) { return hadamard(u.value, b.block_pf); }

UncappedGF step(const BlockGFs& b, const UncappedGF& u, bool check) {
  BRF next = step_recurrence(b, u);
  if (check) {
    BRF other = step_hadamard(b, u);
    if (!(other == next)) {
      throw ConsistencyError("recurrence and Hadamard routes disagree at n = " + std::to_string(u.n + 1));
    }
  }
  return make_uncapped(u.n + 1, std::move(next));
}

Specialization specialize_and_check(const UncappedGF& u, const UncappedGF& next) {
  using RF = RationalFunction;
  const Poly one = Poly::one();
  const Poly x = Poly::x();
  const Poly omx({1, -1});
  const Poly opx({1, 1});
  const Poly omx2({1, 0, -1});
  Specialization sp;
  RF third = RF(x.pow(3), Poly::constant(Rat(2)) * omx);
  sp.at_one = RF(Poly({1, 2}), omx.pow(3)) * u.at_one - RF(Poly({1, 1, 1}), omx.pow(3)) * u.at_x -
              RF(x * opx, omx.pow(2)) * u.d1_at_x - third * u.d2_at_x;
  sp.at_x = RF(Poly({0, 0, 2}), omx.pow(2) * omx2) * u.at_one - RF(x, omx.pow(3)) * u.at_x +
            RF(x * Poly({1, 0, -1, -1}), omx * omx2) * u.d1_at_x + RF(x, omx.pow(2)) * u.at_x2;
  sp.at_one_ok = sp.at_one == next.at_one;
  sp.at_x_ok = sp.at_x == next.at_x;

  RF printed_one = RF(Poly({1, 2}), omx.pow(2)) * u.at_one - RF(Poly({1, 1, 1}), omx.pow(2)) * u.at_x -
                   RF(x * opx, omx.pow(2)) * u.d1_at_x - third * u.d2_at_x;
  RF printed_x = RF(Poly({0, 0, 2}), omx.pow(2) * omx2) * u.at_one - RF(x, omx.pow(3)) * u.at_x -
                 RF(x * Poly({1, 0, -1, -1}), omx * omx2) * u.d1_at_x + RF(x, omx.pow(2)) * u.at_x2;
  sp.printed_at_one_ok = printed_one == next.at_one;
  sp.printed_at_x_ok = printed_x == next.at_x;
  return sp;
}

RationalFunction cap_off(const UncappedGF& u) {
  return (u.at_one - RationalFunction(Poly::x()) * u.at_x) / RationalFunction(Poly({1, -1}));
}

StructureReport verify_structure(int n, const BRF& value) {
  StructureReport r;
  r.n = n;
  r.denominator = value.den_string();
  try {
    r.vanishes_at_zero = value.substitute({Rat(0), 0, 0}).is_zero();
  } catch (const PoleError&) {
    r.vanishes_at_zero = false;
    r.violations.push_back("pole at s = 0");
  }
  if (!r.vanishes_at_zero) r.violations.push_back("f(0;x) != 0");
  r.no_one_minus_s = true;
  r.relaxed_ok = true;
  r.strict_ok = true;
  int top_mult = 0;
  for (const auto& a : value.den_atoms()) {
    const BiPoly& p = a.poly;
    int k = -1;
    if (p.degree_s() == 1 && p.coeff(0) == Poly::one() && p.coeff(1).degree() >= 0 &&
        p.coeff(1) == Poly::monomial(Rat(-1), static_cast<std::size_t>(p.coeff(1).degree()))) {
      k = p.coeff(1).degree();
    }
    if (k == 0) {
      r.no_one_minus_s = false;
      r.violations.push_back("factor (1 - s)");
    } else if (k < 0 || k > n) {
      r.relaxed_ok = false;
      r.violations.push_back("unexpected factor (" + p.to_string() + ")");
    } else if (k == n) {
      top_mult = a.mult;
    } else if (k > n - 1) {
      r.strict_ok = false;
    }
  }
  r.top_atom_simple = top_mult == 1;
  if (!r.top_atom_simple) r.violations.push_back("(1 - s x^n) multiplicity " + std::to_string(top_mult));
  if (value.den_x_remainder().degree() > 0) {
    r.relaxed_ok = false;
    r.violations.push_back("non-cyclotomic x factor (" + value.den_x_remainder().to_string() + ")");
  }
  for (const auto& [k, m] : value.den_cyclo()) {
    if (k > n) {
      r.relaxed_ok = false;
      r.violations.push_back("unexpected factor " + cyclotomic_label(k));
    } else if (k > n - 1) {
      r.strict_ok = false;
    }
  }
  r.strict_ok = r.strict_ok && r.relaxed_ok && r.no_one_minus_s;
  return r;
}

PoleCertificate psi_pole_certificate(const UncappedGF& u, const RationalFunction& f_n) {
  PoleCertificate c;
  c.n = u.n;
  c.den = f_n.den_factorization();
  const int k = u.n + 1;
  auto it = c.den.factors.find(k);
  c.psi_multiplicity = it == c.den.factors.end() ? 0 : it->second;
  c.numerator_coprime = gcd(f_n.num(), cyclotomic(k)).degree() == 0;
  c.at_one_regular = u.at_one.den_cyclo().count(k) == 0 && gcd(u.at_one.den_remainder(), cyclotomic(k)).degree() == 0;
  return c;
}

}  // namespace dba::temperley
