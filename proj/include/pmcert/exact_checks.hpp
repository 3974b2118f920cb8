#pragma once

#include <optional>

#include "pmcert/certifier.hpp"
#include "pmcert/field.hpp"
#include "pmcert/instance.hpp"
#include "pmcert/poly_matrix.hpp"

namespace pmcert {

// Determinant of a square polynomial matrix. Uses evaluation at
// deg-bound + 1 points and interpolation when the field is large enough,
// and cofactor expansion over column subsets otherwise (small m only).
Poly poly_matrix_determinant(const PrimeField& f, const PolyMatrix& p);

bool is_nonzero_monomial(const Poly& a);

// The four conditions decided without randomness.
struct ExactConditions {
  bool reduced = false;           // s-leading matrix invertible
  bool full_rank = false;         // rank [P(0) C] = m
  bool det_monomial = false;      // det P = c x^k with c != 0
  bool product_identity = false;  // P F == C X^sigma mod X^{sigma+1}

  bool all() const { return reduced && full_rank && det_monomial && product_identity; }
  // First violated condition in certification order.
  std::optional<FailedCondition> first_failure() const;
};

// P F == C X^sigma mod X^{sigma+1}, decided by recomputing the truncated
// product. This is the baseline a verifier without randomness would run.
bool recompute_product_check(const PrimeField& f, const Instance& inst, const PolyMatrix& p,
                             const ConstMatrix& c);

ExactConditions exact_conditions(const PrimeField& f, const Instance& inst, const PolyMatrix& p,
                                 const ConstMatrix& c);

}  // namespace pmcert
