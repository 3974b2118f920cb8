#include "pmcert/linalg.hpp"

#include <algorithm>
#include <utility>

namespace pmcert {

namespace {

struct Echelon {
  std::size_t rank = 0;
  bool odd_swaps = false;
  FieldElem pivot_product;
};

// Reduces a in place below each pivot. When track_product is set the pivots
// are multiplied together (used by determinant()).
Echelon eliminate(const PrimeField& f, ConstMatrix& a, bool track_product) {
  Echelon e;
  e.pivot_product = f.one();
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(row).begin());
      e.odd_swaps = !e.odd_swaps;
    }
    if (track_product) e.pivot_product = f.mul(e.pivot_product, a(row, col));
    const FieldElem inv = f.inv(a(row, col));
    for (std::size_t i = row + 1; i < a.rows(); ++i) {
      if (a(i, col).is_zero()) continue;
      const FieldElem factor = f.mul(a(i, col), inv);
      a(i, col) = FieldElem{};
      for (std::size_t j = col + 1; j < a.cols(); ++j) {
        a(i, j) = f.sub(a(i, j), f.mul(factor, a(row, j)));
      }
    }
    ++row;
  }
  e.rank = row;
  return e;
}

}  // namespace

std::size_t rank(const PrimeField& f, const ConstMatrix& a) {
  ConstMatrix work = a;
  return eliminate(f, work, false).rank;
}

FieldElem determinant(const PrimeField& f, const ConstMatrix& a) {
  if (a.rows() != a.cols()) throw NotSquare("determinant of a non-square matrix");
  if (a.rows() == 0) return f.one();
  ConstMatrix work = a;
  const Echelon e = eliminate(f, work, true);
  if (e.rank < a.rows()) return f.zero();
  return e.odd_swaps ? f.neg(e.pivot_product) : e.pivot_product;
}

std::uint64_t elimination_op_bound(std::uint64_t rows, std::uint64_t cols) {
  std::uint64_t total = 0;
  for (std::uint64_t k = 0; k < std::min(rows, cols); ++k) {
    total += 1 + (rows - k - 1) * (1 + 2 * (cols - k - 1));
  }
  return total;
}

std::uint64_t determinant_op_bound(std::uint64_t m) { return elimination_op_bound(m, m) + m + 1; }

}  // namespace pmcert
