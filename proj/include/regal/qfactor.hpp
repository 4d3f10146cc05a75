#ifndef REGAL_QFACTOR_HPP
#define REGAL_QFACTOR_HPP

#include <utility>
#include <vector>

#include "regal/qpoly.hpp"

namespace regal {

/// unit * prod factors[i]^mult[i] == input, factors monic irreducible over Q,
/// sorted by (degree, coefficients from the leading term down).
struct QFactorList {
  Rat unit = 1;
  std::vector<std::pair<QPoly, int>> factors;

  QPoly product() const;
};

inline constexpr int kFactorDegreeCap = 128;

/// Squarefree decomposition (Yun): f = lc * prod parts[i].first^parts[i].second
/// with the parts monic, squarefree, and pairwise coprime.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f);

/// Complete factorization into irreducibles over Q. Zassenhaus: squarefree
/// split, factorization mod a small prime, Hensel lifting, recombination.
QFactorList factor_over_Q(const QPoly& f);

bool is_irreducible_over_Q(const QPoly& f);
bool is_squarefree_over_Q(const QPoly& f);

/// True iff r is a square of a rational.
bool rat_is_square(const Rat& r);

}  // namespace regal

#endif
