#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "pmcert/field.hpp"
#include "pmcert/poly_matrix.hpp"
#include "pmcert/rng.hpp"

namespace pmcert {

enum class ChallengeMode {
  independent,     // u has m independent uniform entries
  powers_of_zeta,  // u = [1, zeta, ..., zeta^(m-1)] from one draw
};

// Sampling set S = {0, 1, ..., size - 1} inside F_p.
struct SamplingSet {
  std::uint64_t size = 0;

  static SamplingSet full(const PrimeField& f) { return {f.modulus()}; }
};

// Random data of one run of the truncated-product check.
struct Challenge {
  FieldElem alpha;  // nonzero evaluation point
  ConstMatrix u;    // 1 x m projection row
  ChallengeMode mode = ChallengeMode::independent;
  std::optional<FieldElem> zeta;
  std::uint64_t seed = 0;  // seed of the generator the draws came from
  std::uint64_t draws = 0;

  // Draws alpha from S \ {0}, then either u_1..u_m or zeta from S.
  static Challenge draw(const PrimeField& f, SeededRng& rng, std::size_t m, SamplingSet s,
                        ChallengeMode mode);
  // Builds u = [1, zeta, ..., zeta^(m-1)].
  static ConstMatrix zeta_row(const PrimeField& f, FieldElem zeta, std::size_t m);
};

// h_k = sum_{i=0..k} v_{k-i} alpha^{-i} for 0 <= k < d_max, i.e. Horner on
// the reversal of v rem x^{k+1} at alpha^{-1}, keeping every intermediate.
// One inversion plus 2m(d_max - 1) operations. v is a 1 x m row.
std::vector<ConstMatrix> horner_truncated_evals(const PrimeField& f, const PolyMatrix& v, FieldElem alpha,
                                                std::size_t d_max);

// (v * fcol rem x^d)(alpha) = alpha^(d-1) * sum_k h_{d-1-k} . f_k, where
// v is the row the h-vectors were built from. Coefficients of fcol of
// degree >= d are ignored.
FieldElem eval_truncated_column(const PrimeField& f, const std::vector<ConstMatrix>& h,
                                const PolyMatrix& fcol, std::size_t d, FieldElem alpha);

// e_j = (g_j rem x^{d_j})(alpha) for a 1 x n row g.
std::vector<FieldElem> rhs_eval_general(const PrimeField& f, const PolyMatrix& g, const TruncOrder& d,
                                        FieldElem alpha);

// e_j = (u . C_{*,j}) * alpha^{sigma_j}: the right-hand side u*C*X^sigma
// evaluated at alpha, via repeated squaring.
std::vector<FieldElem> rhs_eval_monomial(const PrimeField& f, const ConstMatrix& c, const ConstMatrix& u,
                                         const Order& sigma, FieldElem alpha);

// Right-hand side G: either explicit, or C * X^sigma (with d = sigma + 1).
struct MonomialRhs {
  ConstMatrix c;
  Order sigma;
};
using RhsSpec = std::variant<PolyMatrix, MonomialRhs>;

struct TruncProductReport {
  bool holds = true;
  std::vector<FieldElem> rhs;  // e_j
  std::vector<FieldElem> lhs;  // e'_j
  std::optional<std::size_t> first_mismatch;
};

// False-biased Monte-Carlo test of P * F == G mod X^d.
//
// A false answer proves the congruence fails. When it fails, a true answer
// happens with probability below d_max / (#S - 1) over the challenge.
// Coefficients of P of degree >= d_max and of F, G beyond their truncation
// orders cannot affect the congruence and are skipped.
TruncProductReport verify_truncated_product(const PrimeField& f, const TruncOrder& d, const PolyMatrix& p,
                                            const PolyMatrix& fmat, const RhsSpec& g, const Challenge& ch);

}  // namespace pmcert
