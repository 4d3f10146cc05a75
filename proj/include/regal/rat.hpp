#ifndef REGAL_RAT_HPP
#define REGAL_RAT_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace regal {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& s);  // "a" or "a/b"

// 0, 1, -1, 2, -2, ... — the canonical specialization-point enumeration.
inline Int canonical_int(std::size_t index) {
  if (index == 0) return 0;
  Int k((index + 1) / 2);
  return (index % 2 == 1) ? k : -k;
}

}  // namespace regal

#endif
