#include "pmcert/certifier.hpp"

#include <string>

#include "pmcert/linalg.hpp"

namespace pmcert {

std::string_view to_string(FailedCondition c) {
  switch (c) {
    case FailedCondition::not_reduced:
      return "not_reduced";
    case FailedCondition::rank_deficient:
      return "rank_deficient";
    case FailedCondition::det_not_monomial:
      return "det_not_monomial";
    case FailedCondition::product_mismatch:
      return "product_mismatch";
  }
  return "unknown";
}

std::optional<FailedCondition> failed_condition_from_string(std::string_view s) {
  for (auto c : {FailedCondition::not_reduced, FailedCondition::rank_deficient,
                 FailedCondition::det_not_monomial, FailedCondition::product_mismatch}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

StepResult check_s_reduced(const PrimeField& f, const PolyMatrix& p, const Shift& s) {
  if (p.rows() != p.cols()) throw DimensionMismatch("basis must be square");
  StepResult r;
  r.leading = s_leading_matrix(p, s);
  r.pass = rank(f, r.leading) == p.rows();
  return r;
}

StepResult check_rank_p0_c(const PrimeField& f, const PolyMatrix& p, const ConstMatrix& c) {
  if (p.rows() != p.cols() || c.rows() != p.rows()) {
    throw DimensionMismatch("[P(0) C] needs P m x m and C with m rows");
  }
  StepResult r;
  r.pass = rank(f, hconcat(coefficient(p, 0), c)) == p.rows();
  return r;
}

StepResult check_det_monomial(const PrimeField& f, const PolyMatrix& p, const Shift& s, FieldElem alpha_det) {
  if (p.rows() != p.cols()) throw DimensionMismatch("basis must be square");
  StepResult r;
  std::int64_t delta = -s.total();
  for (const Degree& d : shifted_row_degree(p, s)) {
    if (d.is_neg_inf()) throw NegativeDelta("zero row: the determinant degree is undefined");
    delta += d.value();
  }
  if (delta < 0) throw NegativeDelta("|rdeg_s(P)| - |s| = " + std::to_string(delta));
  r.delta = delta;
  const FieldElem at_alpha = determinant(f, evaluate(f, p, alpha_det));
  const FieldElem at_one = determinant(f, evaluate(f, p, f.one()));
  r.pass = at_alpha == f.mul(at_one, f.pow(alpha_det, static_cast<std::uint64_t>(delta)));
  return r;
}

std::uint64_t min_sampling_set_size(std::int64_t total_order) {
  return 2 * (static_cast<std::uint64_t>(total_order) + 1);
}

Verdict certify(const PrimeField& f, const Instance& inst, const PolyMatrix& p, const ConstMatrix& c,
                SeededRng& rng, const CertifyOptions& opts) {
  inst.validate();
  if (inst.modulus != f.modulus()) {
    throw ModulusMismatch("instance over F_" + std::to_string(inst.modulus) + " checked in F_" +
                          std::to_string(f.modulus()));
  }
  const std::size_t m = inst.m();
  if (p.rows() != m || p.cols() != m) throw DimensionMismatch("basis must be m x m");
  if (c.rows() != m || c.cols() != inst.n()) throw DimensionMismatch("certificate must be m x n");

  const std::int64_t total_order = inst.sigma.total();
  const std::uint64_t needed = min_sampling_set_size(total_order);
  if (f.modulus() < needed + 1) {
    throw FieldTooSmall("p = " + std::to_string(f.modulus()) + " but the order sum D = " +
                        std::to_string(total_order) + " needs p >= " + std::to_string(needed + 1));
  }
  const std::uint64_t set_size = opts.sampling_set_size.value_or(f.modulus());
  if (set_size < needed || set_size > f.modulus()) {
    throw FieldTooSmall("sampling set of size " + std::to_string(set_size) + " outside [" +
                        std::to_string(needed) + ", p]");
  }

  const OpTally start = f.tally();
  Verdict v;
  v.transcript.seed = rng.seed();
  v.transcript.sampling_set_size = set_size;
  v.transcript.alpha_det = f.sample_from(rng, set_size, false);
  v.transcript.product = Challenge::draw(f, rng, m, SamplingSet{set_size}, opts.mode);
  v.transcript.draws = 1 + v.transcript.product.draws;

  auto finish = [&](std::optional<FailedCondition> failed) {
    v.failed_condition = failed;
    v.accepted = !failed.has_value();
    v.ops = f.tally() - start;
    return v;
  };

  if (!check_s_reduced(f, p, inst.shift).pass) return finish(FailedCondition::not_reduced);
  if (!check_rank_p0_c(f, p, c).pass) return finish(FailedCondition::rank_deficient);
  const StepResult det = check_det_monomial(f, p, inst.shift, v.transcript.alpha_det);
  v.delta = det.delta;
  if (!det.pass) return finish(FailedCondition::det_not_monomial);

  v.product_report = verify_truncated_product(f, order_plus_one(inst.sigma), p, inst.f,
                                              MonomialRhs{c, inst.sigma}, v.transcript.product);
  if (!v.product_report->holds) return finish(FailedCondition::product_mismatch);
  return finish(std::nullopt);
}

}  // namespace pmcert
