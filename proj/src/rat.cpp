#include "regal/rat.hpp"

#include "regal/errors.hpp"

namespace regal {

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) fail("ParseError", "empty rational literal");
  try {
    Rat r(s);
    if (r.get_den() == 0) fail("ParseError", "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    fail("ParseError", "bad rational literal '" + s + "'");
  }
}

}  // namespace regal
