#include "regal/linalg.hpp"

#include <algorithm>

namespace regal {

std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Rat inv = Rat(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
  if (a.empty()) {
    for (const Rat& v : b)
      if (v != 0) return std::nullopt;
    return RatVec{};
  }
  std::size_t rows = a.size(), cols = a[0].size();
  RatMat aug = a;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  std::vector<int> piv = rref(aug);
  if (!piv.empty() && piv.back() == static_cast<int>(cols)) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (std::size_t i = 0; i < piv.size(); ++i)
    x[static_cast<std::size_t>(piv[i])] = aug[i][cols];
  return x;
}

std::vector<RatVec> nullspace(const RatMat& a) {
  if (a.empty()) return {};
  std::size_t cols = a[0].size();
  RatMat m = a;
  std::vector<int> piv = rref(m);
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    RatVec v(cols, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i)
      v[static_cast<std::size_t>(piv[i])] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace regal
