#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "pmcert/field.hpp"
#include "pmcert/instance.hpp"
#include "pmcert/poly_matrix.hpp"
#include "pmcert/rng.hpp"
#include "pmcert/truncated_product.hpp"

namespace pmcert {

// The four checks of the certification procedure, in execution order.
enum class FailedCondition {
  not_reduced,       // s-leading matrix singular
  rank_deficient,    // rank [P(0) C] < m
  det_not_monomial,  // det(P(a)) != det(P(1)) a^Delta
  product_mismatch,  // P F != C X^sigma mod X^{sigma+1}
};

std::string_view to_string(FailedCondition c);
std::optional<FailedCondition> failed_condition_from_string(std::string_view s);

// Random draws of one certify() call, in canonical order: alpha_det,
// alpha_prod, then u_1..u_m (or zeta).
struct Transcript {
  std::uint64_t seed = 0;
  std::uint64_t sampling_set_size = 0;
  FieldElem alpha_det;
  Challenge product;
  std::uint64_t draws = 0;
};

struct Verdict {
  bool accepted = false;
  std::optional<FailedCondition> failed_condition;
  std::optional<std::int64_t> delta;  // set once the reducedness check passed
  Transcript transcript;
  std::optional<TruncProductReport> product_report;
  OpTally ops;
};

struct StepResult {
  bool pass = false;
  ConstMatrix leading;  // filled by check_s_reduced
  std::int64_t delta = 0;  // filled by check_det_monomial
};

// Pass iff the s-leading matrix is invertible.
StepResult check_s_reduced(const PrimeField& f, const PolyMatrix& p, const Shift& s);

// Pass iff [P(0) C] has rank m.
StepResult check_rank_p0_c(const PrimeField& f, const PolyMatrix& p, const ConstMatrix& c);

// With Delta = |rdeg_s(P)| - |s|, pass iff det(P(a)) == det(P(1)) * a^Delta.
// Meant to run after check_s_reduced passed; a negative Delta then signals
// an inconsistent input and raises NegativeDelta.
StepResult check_det_monomial(const PrimeField& f, const PolyMatrix& p, const Shift& s, FieldElem alpha_det);

struct CertifyOptions {
  std::optional<std::uint64_t> sampling_set_size;  // default: the whole field
  ChallengeMode mode = ChallengeMode::independent;
};

// Smallest admissible sampling set for total order D: 2(D + 1).
std::uint64_t min_sampling_set_size(std::int64_t total_order);

// Monte-Carlo decision whether P is an s-minimal basis of the approximants
// of (sigma, F) with certificate C. A rejection is always correct. An
// invalid (P, C) is accepted with probability below (D + 1) / (#S - 1).
//
// Draws its m + 2 random elements (3 in powers_of_zeta mode) up front, then
// runs the four checks in order and stops at the first failure. Throws
// FieldTooSmall when #S < 2(D + 1) or p < 2(D + 1) + 1.
Verdict certify(const PrimeField& f, const Instance& inst, const PolyMatrix& p, const ConstMatrix& c,
                SeededRng& rng, const CertifyOptions& opts = {});

}  // namespace pmcert
