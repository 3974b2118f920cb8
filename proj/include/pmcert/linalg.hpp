#pragma once

#include <cstdint>

#include "pmcert/field.hpp"
#include "pmcert/poly_matrix.hpp"

namespace pmcert {

// Row echelon form by Gaussian elimination with first-nonzero pivoting.
std::size_t rank(const PrimeField& f, const ConstMatrix& a);

// Product of the pivots, negated once per row swap. Throws NotSquare.
FieldElem determinant(const PrimeField& f, const ConstMatrix& a);

// Worst-case field operation count of rank() on a rows x cols matrix:
//   sum_{k < min(rows, cols)} [1 + (rows-k-1) * (1 + 2*(cols-k-1))]
// (one inversion per pivot, one multiplier and an axpy per eliminated row).
std::uint64_t elimination_op_bound(std::uint64_t rows, std::uint64_t cols);

// Worst-case count for determinant(): elimination plus the pivot product and
// the sign fix-up.
std::uint64_t determinant_op_bound(std::uint64_t m);

}  // namespace pmcert
