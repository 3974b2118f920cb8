#pragma once

#include <cstdint>
#include <vector>

#include "pmcert/field.hpp"
#include "pmcert/poly_matrix.hpp"

namespace pmcert {

// The certificate of a basis P for (sigma, F) is the constant m x n matrix
// C whose column j is the coefficient of degree sigma_j of column j of P*F,
// i.e. the constant term of P * F * X^{-sigma}.

// One iteration k of the sparse loop: sizes of the index sets and of the
// blocks multiplied.
struct CertificateStep {
  std::int64_t k = 0;
  std::size_t index_set = 0;  // #R_k (row variant) or #C_k (column variant)
  std::size_t order_set = 0;  // #O_k = #{j : sigma_j >= k}
  std::size_t a_rows = 0;
  std::size_t a_cols = 0;
  std::size_t b_cols = 0;
};

struct CertificateTrace {
  std::vector<CertificateStep> steps;
  std::int64_t degree_sum = 0;  // sum of rdeg(P) or cdeg(P), zero rows/columns excluded
  std::int64_t gamma = 0;       // ceil(degree_sum / D), at least 1
};

// C_ij = sum_{k=1}^{min(r_i, sigma_j)} P_{i,*,k} . F_{*,j,sigma_j-k}, with
// r = rdeg(P). O(m^2 D) operations. No bound on deg(P) is required.
ConstMatrix compute_certificate_naive(const PrimeField& f, const Order& sigma, const PolyMatrix& fmat,
                                      const PolyMatrix& p);

// Sparse loop over k = 1..max(sigma) restricted to the rows of P of degree
// >= k and the columns of F with sigma_j >= k. Requires deg(P) <= max(sigma)
// (DegreeTooLarge otherwise).
ConstMatrix compute_certificate_rowdeg(const PrimeField& f, const Order& sigma, const PolyMatrix& fmat,
                                       const PolyMatrix& p, CertificateTrace* trace = nullptr);

// Same loop restricted to the columns of P of degree >= k (and the matching
// rows of F).
ConstMatrix compute_certificate_coldeg(const PrimeField& f, const Order& sigma, const PolyMatrix& fmat,
                                       const PolyMatrix& p, CertificateTrace* trace = nullptr);

enum class CertificateVariant { rowdeg, coldeg };

// Variant picked by compute_certificate for the (already truncated) P:
// rowdeg when sum max(0, rdeg) <= sum max(0, cdeg), coldeg otherwise.
CertificateVariant choose_certificate_variant(const PolyMatrix& p);

// Truncates P to degree <= max(sigma), then dispatches.
ConstMatrix compute_certificate(const PrimeField& f, const Order& sigma, const PolyMatrix& fmat,
                                const PolyMatrix& p, CertificateTrace* trace = nullptr);

}  // namespace pmcert
