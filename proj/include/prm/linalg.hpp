#pragma once

#include <cstddef>
#include <vector>

#include "prm/gf.hpp"

namespace prm {

using Vec = std::vector<Elem>;
using Matrix = std::vector<Vec>;

// Reduced row echelon form with zero rows dropped. Pivots are chosen
// column by column, left to right, taking the first nonzero entry from the
// top among the rows not yet used.
Matrix rref(const Field& field, Matrix m);

// Rank by Gaussian elimination, same pivot rule as rref.
std::size_t rank_gf(const Field& field, Matrix m);

// Reduces v against an RREF basis (in place). Result is zero iff v lies in
// the row space.
void reduce_against(const Field& field, const Matrix& basis, Vec& v);

// Column index of the first nonzero entry, or row.size() if none.
std::size_t leading_index(const Vec& row) noexcept;

bool is_zero(const Vec& v) noexcept;

}  // namespace prm
