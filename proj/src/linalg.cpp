#include "syzstab/linalg.hpp"

#include <algorithm>

namespace syzstab {

std::vector<int> rref(RationalMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t pivot_row = row;
    while (pivot_row < m.size() && m[pivot_row][col] == 0) ++pivot_row;
    if (pivot_row == m.size()) continue;
    std::swap(m[row], m[pivot_row]);
    const Rational inv = m[row][col];
    for (size_t c = col; c < cols; ++c) m[row][c] /= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  m.resize(row);
  return pivots;
}

int matrix_rank(RationalMatrix m) { return static_cast<int>(rref(m).size()); }

RationalMatrix nullspace(const RationalMatrix& mat) {
  RationalMatrix m = mat;
  if (m.empty()) return {};
  const size_t cols = m[0].size();
  const std::vector<int> pivots = rref(m);

  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;

  RationalMatrix basis;
  for (size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RationalVector v(cols, 0);
    v[free_col] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      v[static_cast<size_t>(pivots[r])] = -m[r][free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_rowspace(const RationalMatrix& rref_rows, const std::vector<int>& pivots,
                 RationalVector v) {
  for (size_t r = 0; r < rref_rows.size(); ++r) {
    const Rational c = v[static_cast<size_t>(pivots[r])];
    if (c == 0) continue;
    for (size_t i = 0; i < v.size(); ++i) v[i] -= c * rref_rows[r][i];
  }
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace syzstab
