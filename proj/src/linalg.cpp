#include "prm/linalg.hpp"

#include <algorithm>

namespace prm {

namespace {

// Row-reduces m in place and returns the number of pivot rows, which end
// up as m[0..rank).
std::size_t eliminate(const Field& field, Matrix& m, bool full) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    Vec& prow = m[rank];
    const Elem scale = field.inv(prow[c]);
    for (std::size_t j = c; j < cols; ++j) prow[j] = field.mul(prow[j], scale);
    for (std::size_t r = full ? 0 : rank + 1; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Elem f = field.neg(m[r][c]);
      for (std::size_t j = c; j < cols; ++j) {
        m[r][j] = field.add(m[r][j], field.mul(f, prow[j]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Matrix rref(const Field& field, Matrix m) {
  const std::size_t rank = eliminate(field, m, true);
  m.resize(rank);
  return m;
}

std::size_t rank_gf(const Field& field, Matrix m) {
  return eliminate(field, m, false);
}

void reduce_against(const Field& field, const Matrix& basis, Vec& v) {
  for (const Vec& row : basis) {
    const std::size_t c = leading_index(row);
    if (c >= v.size() || v[c] == 0) continue;
    const Elem f = field.neg(v[c]);
    for (std::size_t j = c; j < v.size(); ++j) {
      v[j] = field.add(v[j], field.mul(f, row[j]));
    }
  }
}

std::size_t leading_index(const Vec& row) noexcept {
  const auto it = std::find_if(row.begin(), row.end(),
                               [](Elem x) { return x != 0; });
  return static_cast<std::size_t>(it - row.begin());
}

bool is_zero(const Vec& v) noexcept {
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

}  // namespace prm
