#include "pmcert/truncated_product.hpp"

#include <algorithm>
#include <string>

namespace pmcert {

namespace {

// Column j of fmat against the h-vectors, truncated at d.
FieldElem eval_column(const PrimeField& f, const std::vector<ConstMatrix>& h, const PolyMatrix& fmat,
                      std::size_t j, std::size_t d, FieldElem alpha) {
  if (d == 0) return FieldElem{};
  if (h.size() < d) throw DimensionMismatch("fewer h-vectors than the truncation order");
  FieldElem acc;
  bool any = false;
  for (std::size_t l = 0; l < fmat.rows(); ++l) {
    const auto c = fmat(l, j).coeffs();
    const std::size_t kmax = std::min(c.size(), d);
    for (std::size_t k = 0; k < kmax; ++k) {
      const FieldElem term = f.mul(h[d - 1 - k](0, l), c[k]);
      acc = any ? f.add(acc, term) : term;
      any = true;
    }
  }
  if (!any) return FieldElem{};
  return f.mul(f.pow(alpha, d - 1), acc);
}

}  // namespace

Challenge Challenge::draw(const PrimeField& f, SeededRng& rng, std::size_t m, SamplingSet s,
                          ChallengeMode mode) {
  Challenge ch;
  ch.seed = rng.seed();
  ch.mode = mode;
  ch.alpha = f.sample_from(rng, s.size, true);
  ch.draws = 1;
  if (mode == ChallengeMode::independent) {
    ch.u = ConstMatrix(1, m);
    for (std::size_t i = 0; i < m; ++i) {
      ch.u(0, i) = f.sample_from(rng, s.size, false);
      ++ch.draws;
    }
  } else {
    ch.zeta = f.sample_from(rng, s.size, false);
    ++ch.draws;
    ch.u = zeta_row(f, *ch.zeta, m);
  }
  return ch;
}

ConstMatrix Challenge::zeta_row(const PrimeField& f, FieldElem zeta, std::size_t m) {
  ConstMatrix u(1, m);
  FieldElem power = f.one();
  for (std::size_t i = 0; i < m; ++i) {
    u(0, i) = power;
    if (i + 1 < m) power = f.mul(power, zeta);
  }
  return u;
}

std::vector<ConstMatrix> horner_truncated_evals(const PrimeField& f, const PolyMatrix& v, FieldElem alpha,
                                                std::size_t d_max) {
  if (alpha.is_zero()) throw ZeroAlpha();
  if (v.rows() != 1) throw DimensionMismatch("h-vectors need a single row");
  const std::size_t m = v.cols();
  std::vector<ConstMatrix> h;
  h.reserve(d_max);
  if (d_max == 0) return h;
  const FieldElem beta = f.inv(alpha);
  h.push_back(coefficient(v, 0));
  for (std::size_t k = 1; k < d_max; ++k) {
    ConstMatrix next(1, m);
    const ConstMatrix& prev = h.back();
    for (std::size_t l = 0; l < m; ++l) next(0, l) = f.mul_add(v(0, l).coeff(k), beta, prev(0, l));
    h.push_back(std::move(next));
  }
  return h;
}

FieldElem eval_truncated_column(const PrimeField& f, const std::vector<ConstMatrix>& h,
                                const PolyMatrix& fcol, std::size_t d, FieldElem alpha) {
  if (fcol.cols() != 1) throw DimensionMismatch("expected a single column");
  if (!h.empty() && h.front().cols() != fcol.rows()) {
    throw DimensionMismatch("h-vector length does not match the column");
  }
  return eval_column(f, h, fcol, 0, d, alpha);
}

std::vector<FieldElem> rhs_eval_general(const PrimeField& f, const PolyMatrix& g, const TruncOrder& d,
                                        FieldElem alpha) {
  if (g.rows() != 1 || g.cols() != d.size()) {
    throw DimensionMismatch("right-hand side row does not match the truncation order");
  }
  std::vector<FieldElem> e(g.cols());
  for (std::size_t j = 0; j < g.cols(); ++j) {
    e[j] = poly_eval(f, g(0, j).truncated(static_cast<std::size_t>(d[j])), alpha);
  }
  return e;
}

std::vector<FieldElem> rhs_eval_monomial(const PrimeField& f, const ConstMatrix& c, const ConstMatrix& u,
                                         const Order& sigma, FieldElem alpha) {
  if (u.rows() != 1 || u.cols() != c.rows() || sigma.size() != c.cols()) {
    throw DimensionMismatch("monomial right-hand side dimensions disagree");
  }
  std::vector<FieldElem> e(c.cols());
  for (std::size_t j = 0; j < c.cols(); ++j) {
    FieldElem dot;
    for (std::size_t i = 0; i < c.rows(); ++i) {
      const FieldElem term = f.mul(u(0, i), c(i, j));
      dot = i == 0 ? term : f.add(dot, term);
    }
    e[j] = f.mul(dot, f.pow(alpha, static_cast<std::uint64_t>(sigma[j])));
  }
  return e;
}

TruncProductReport verify_truncated_product(const PrimeField& f, const TruncOrder& d, const PolyMatrix& p,
                                            const PolyMatrix& fmat, const RhsSpec& g, const Challenge& ch) {
  const std::size_t m = p.rows();
  const std::size_t n = fmat.cols();
  if (p.cols() != m || fmat.rows() != m || d.size() != n) {
    throw DimensionMismatch("truncated product: P must be m x m, F m x n, d of length n");
  }
  if (ch.u.rows() != 1 || ch.u.cols() != m) throw DimensionMismatch("challenge vector has wrong length");
  if (ch.alpha.is_zero()) throw ZeroAlpha();

  TruncProductReport report;
  if (n == 0) return report;
  const std::size_t d_max = static_cast<std::size_t>(d.max());

  // Right-hand side u*G(alpha).
  if (const auto* mono = std::get_if<MonomialRhs>(&g)) {
    if (mono->c.rows() != m || mono->c.cols() != n) throw DimensionMismatch("certificate must be m x n");
    if (!(order_plus_one(mono->sigma) == d)) {
      throw DimensionMismatch("monomial right-hand side requires d = sigma + 1");
    }
    report.rhs = rhs_eval_monomial(f, mono->c, ch.u, mono->sigma, ch.alpha);
  } else {
    const auto& gm = std::get<PolyMatrix>(g);
    if (gm.rows() != m || gm.cols() != n) throw DimensionMismatch("right-hand side must be m x n");
    const PolyMatrix urow = left_vec_mul(f, ch.u, gm, d_max);
    report.rhs = rhs_eval_general(f, urow, d, ch.alpha);
  }

  // Left-hand side (u*P*F rem X^d)(alpha).
  const PolyMatrix v = left_vec_mul(f, ch.u, p, d_max);
  const auto h = horner_truncated_evals(f, v, ch.alpha, d_max);
  report.lhs.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    report.lhs[j] = eval_column(f, h, fmat, j, static_cast<std::size_t>(d[j]), ch.alpha);
  }

  for (std::size_t j = 0; j < n; ++j) {
    if (report.lhs[j] != report.rhs[j]) {
      report.holds = false;
      report.first_mismatch = j;
      break;
    }
  }
  return report;
}

}  // namespace pmcert
