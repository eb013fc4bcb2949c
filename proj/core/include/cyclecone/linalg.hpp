#pragma once

// Dense exact linear algebra over the rationals, shared by the Miller basis
// construction, cone rank computations and lattice span comparisons.

#include <cstddef>
#include <vector>

#include "cyclecone/rational.hpp"

namespace cyclecone {

using RationalMatrix = std::vector<std::vector<ExactRational>>;

/// Reduces `rows` in place to reduced row echelon form and returns the pivot
/// column of each nonzero row. Zero rows are moved to the bottom. All rows
/// must have the same length.
std::vector<std::size_t> reduce_to_echelon(RationalMatrix& rows);

std::size_t rank(RationalMatrix rows);

/// Row-reduced echelon form with zero rows removed; two row sets span the
/// same subspace iff these agree.
RationalMatrix echelon_basis(RationalMatrix rows);

}  // namespace cyclecone
