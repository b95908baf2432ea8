#pragma once

#include "syzstab/rational.hpp"

#include <vector>

namespace syzstab {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Reduced row echelon form in place (least-index pivots, pivot entries 1,
/// zero rows dropped). Returns the pivot column of each remaining row.
std::vector<int> rref(RationalMatrix& m);

int matrix_rank(RationalMatrix m);

/// Basis of the right nullspace {x : m x = 0}, one vector per free column,
/// each normalized with a 1 in its free slot.
RationalMatrix nullspace(const RationalMatrix& m);

/// Whether v lies in the row space described by an rref matrix and its
/// pivot columns.
bool in_rowspace(const RationalMatrix& rref_rows, const std::vector<int>& pivots,
                 RationalVector v);

}  // namespace syzstab
