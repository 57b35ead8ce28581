#include "hetoda/rational_linalg.hpp"

#include <cstddef>

namespace hetoda {

namespace {

// Row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> echelon(RatMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    const Rat inv = m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(RatMat m) { return static_cast<int>(echelon(m).size()); }

std::optional<RatVec> solve_square(RatMat a, RatVec b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw ShapeError("solve_square: matrix not square");
    a[i].push_back(b[i]);
  }
  auto pivots = echelon(a);
  if (pivots.size() != n) return std::nullopt;
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = a[i][n];
  return x;
}

std::vector<RatVec> kernel_basis(RatMat a) {
  if (a.empty()) return {};
  const std::size_t cols = a[0].size();
  auto pivots = echelon(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    basis.push_back(normalize_coprime(v));
  }
  return basis;
}

}  // namespace hetoda
