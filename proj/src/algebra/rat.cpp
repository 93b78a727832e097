#include "dba/algebra/rat.hpp"

#include <stdexcept>

namespace dba {

std::string to_string(const Rat& r) { return r.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

Rat parse_rat(std::string_view text) {
  Rat r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
  r.canonicalize();
  return r;
}

Int parse_int(std::string_view text) {
  Int z;
  if (text.empty() || z.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
  }
  return z;
}

}  // namespace dba
