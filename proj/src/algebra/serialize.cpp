#include "dba/algebra/serialize.hpp"

namespace dba {

Json to_json(const Rat& r) { return to_string(r); }

Json to_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

Json to_json(const CycloFactorization& f) {
  Json factors = Json::array();
  for (const auto& [k, m] : f.factors) factors.push_back({k, m});
  return {{"factors", factors}, {"remainder", to_json(f.remainder)}};
}

Json to_json(const RationalFunction& f) {
  Json factors = Json::array();
  for (const auto& [k, m] : f.den_cyclo()) factors.push_back({k, m});
  return {{"num", to_json(f.num())}, {"den_cyclo_factors", factors}, {"den_remainder", to_json(f.den_remainder())}};
}

Json to_json(const BiPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

Json to_json(const BiRationalFunction& f) {
  Json factors = Json::array();
  for (const auto& [k, m] : f.den_cyclo()) factors.push_back({k, m});
  Json atoms = Json::array();
  for (const auto& a : f.den_atoms()) atoms.push_back({to_json(a.poly), a.mult});
  return {{"num", to_json(f.num())},
          {"den_cyclo_factors", factors},
          {"den_remainder", to_json(f.den_x_remainder())},
          {"den_s_factors", atoms}};
}

Rat rat_from_json(const Json& j) { return parse_rat(j.get<std::string>()); }

Poly poly_from_json(const Json& j) {
  std::vector<Rat> c;
  for (const auto& e : j) c.push_back(rat_from_json(e));
  return Poly(std::move(c));
}

namespace {

std::map<int, int> factors_from_json(const Json& j) {
  std::map<int, int> f;
  for (const auto& e : j) f[e.at(0).get<int>()] += e.at(1).get<int>();
  return f;
}

}  // namespace

RationalFunction rational_function_from_json(const Json& j) {
  return RationalFunction::from_factored(poly_from_json(j.at("num")), factors_from_json(j.at("den_cyclo_factors")),
                                         poly_from_json(j.at("den_remainder")));
}

BiPoly bipoly_from_json(const Json& j) {
  std::vector<Poly> c;
  for (const auto& e : j) c.push_back(poly_from_json(e));
  return BiPoly(std::move(c));
}

BiRationalFunction bi_rational_from_json(const Json& j) {
  BiRationalFunction f(bipoly_from_json(j.at("num")));
  BiRationalFunction d(RationalFunction::from_factored(Poly::one(), factors_from_json(j.at("den_cyclo_factors")),
                                                       poly_from_json(j.at("den_remainder"))));
  f *= d;
  if (j.contains("den_s_factors")) {
    for (const auto& a : j.at("den_s_factors")) {
      BiRationalFunction atom(bipoly_from_json(a.at(0)));
      f /= atom.pow(a.at(1).get<unsigned>());
    }
  }
  return f;
}

}  // namespace dba
