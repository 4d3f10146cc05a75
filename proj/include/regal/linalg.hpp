#ifndef REGAL_LINALG_HPP
#define REGAL_LINALG_HPP

#include <optional>
#include <vector>

#include "regal/rat.hpp"

namespace regal {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row major

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(RatMat& m);

int rank(RatMat m);

/// One solution of A x = b, or nullopt if inconsistent.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

/// Basis of the nullspace of A (each vector has size = column count).
std::vector<RatVec> nullspace(const RatMat& a);

}  // namespace regal

#endif
