#pragma once

#include "json.hpp"

#include "dba/algebra/bi_rational.hpp"
#include "dba/algebra/rational_function.hpp"

namespace dba {

using Json = nlohmann::json;

Json to_json(const Rat& r);
Json to_json(const Poly& p);
Json to_json(const CycloFactorization& f);
// {num, den_cyclo_factors: [[k, mult]...], den_remainder}
Json to_json(const RationalFunction& f);
Json to_json(const BiPoly& p);
Json to_json(const BiRationalFunction& f);

Rat rat_from_json(const Json& j);
Poly poly_from_json(const Json& j);
RationalFunction rational_function_from_json(const Json& j);
BiPoly bipoly_from_json(const Json& j);
BiRationalFunction bi_rational_from_json(const Json& j);

}  // namespace dba
