#include "pmcert/exact_checks.hpp"

#include <bit>
#include <cstdint>
#include <vector>

#include "pmcert/linalg.hpp"

namespace pmcert {

namespace {

Poly det_by_subsets(const PrimeField& f, const PolyMatrix& p) {
  const std::size_t m = p.rows();
  if (m > 20) throw InvalidArgument("cofactor expansion limited to m <= 20");
  std::vector<Poly> dp(std::size_t{1} << m);
  dp[0] = Poly::constant(f.one());
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask].is_zero()) continue;
    const auto i = static_cast<std::size_t>(std::popcount(mask));
    if (i == m) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if ((mask >> j) & 1U) continue;
      if (p(i, j).is_zero()) continue;
      const int above = std::popcount(mask >> (j + 1));
      Poly term = poly_mul(f, dp[mask], p(i, j));
      auto& slot = dp[mask | (std::size_t{1} << j)];
      slot = above % 2 == 0 ? poly_add(f, slot, term) : poly_sub(f, slot, term);
    }
  }
  return dp.back();
}

// Newton interpolation through (k, y_k), k = 0..N.
Poly interpolate_at_naturals(const PrimeField& f, std::vector<FieldElem> y) {
  const std::size_t n = y.size();
  for (std::size_t level = 1; level < n; ++level) {
    const FieldElem inv_gap = f.inv(f.from_u64(level));
    for (std::size_t k = n - 1; k >= level; --k) {
      y[k] = f.mul(f.sub(y[k], y[k - 1]), inv_gap);
    }
  }
  Poly acc;
  for (std::size_t k = n; k-- > 0;) {
    // acc = acc * (x - k) + y_k
    const Poly shifted = poly_shift(acc, 1);
    acc = poly_sub(f, shifted, poly_scale(f, acc, f.from_u64(k)));
    acc = poly_add(f, acc, Poly::constant(y[k]));
  }
  return acc;
}

}  // namespace

Poly poly_matrix_determinant(const PrimeField& f, const PolyMatrix& p) {
  if (p.rows() != p.cols()) throw NotSquare("determinant of a non-square polynomial matrix");
  if (p.rows() == 0) return Poly::constant(f.one());
  std::uint64_t bound = 0;
  for (const Degree& d : row_degrees(p)) {
    if (d.is_neg_inf()) return Poly{};
    bound += static_cast<std::uint64_t>(d.value());
  }
  if (bound + 1 > f.modulus()) return det_by_subsets(f, p);
  std::vector<FieldElem> y(bound + 1);
  for (std::uint64_t k = 0; k <= bound; ++k) y[k] = determinant(f, evaluate(f, p, f.from_u64(k)));
  return interpolate_at_naturals(f, std::move(y));
}

bool is_nonzero_monomial(const Poly& a) {
  if (a.is_zero()) return false;
  const auto c = a.coeffs();
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    if (!c[k].is_zero()) return false;
  }
  return true;
}

std::optional<FailedCondition> ExactConditions::first_failure() const {
  if (!reduced) return FailedCondition::not_reduced;
  if (!full_rank) return FailedCondition::rank_deficient;
  if (!det_monomial) return FailedCondition::det_not_monomial;
  if (!product_identity) return FailedCondition::product_mismatch;
  return std::nullopt;
}

bool recompute_product_check(const PrimeField& f, const Instance& inst, const PolyMatrix& p,
                             const ConstMatrix& c) {
  return mul_rem_orders(f, p, inst.f, order_plus_one(inst.sigma)) == times_x_powers(c, inst.sigma);
}

ExactConditions exact_conditions(const PrimeField& f, const Instance& inst, const PolyMatrix& p,
                                 const ConstMatrix& c) {
  const std::size_t m = inst.m();
  if (p.rows() != m || p.cols() != m || c.rows() != m || c.cols() != inst.n()) {
    throw DimensionMismatch("exact conditions: P must be m x m and C m x n");
  }
  ExactConditions out;
  out.reduced = rank(f, s_leading_matrix(p, inst.shift)) == m;
  out.full_rank = rank(f, hconcat(coefficient(p, 0), c)) == m;
  out.det_monomial = is_nonzero_monomial(poly_matrix_determinant(f, p));
  out.product_identity = recompute_product_check(f, inst, p, c);
  return out;
}

}  // namespace pmcert
