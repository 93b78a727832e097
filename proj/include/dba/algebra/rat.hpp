#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dba {

// Exact rational; gmp keeps it canonical (gcd 1, positive denominator).
using Rat = mpq_class;
using Int = mpz_class;

// "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

Rat parse_rat(std::string_view text);
Int parse_int(std::string_view text);

}  // namespace dba
