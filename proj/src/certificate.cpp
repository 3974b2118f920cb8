#include "pmcert/certificate.hpp"

#include <algorithm>
#include <string>

#include "pmcert/errors.hpp"

namespace pmcert {

namespace {

void check_shapes(const Order& sigma, const PolyMatrix& fmat, const PolyMatrix& p) {
  if (p.rows() != p.cols()) throw DimensionMismatch("basis must be square");
  if (fmat.rows() != p.cols()) throw DimensionMismatch("F must have as many rows as the basis");
  if (sigma.size() != fmat.cols()) throw DimensionMismatch("order length must equal the columns of F");
}

void check_degree(const Order& sigma, const PolyMatrix& p) {
  const Degree d = p.degree();
  if (!d.is_neg_inf() && d.value() > sigma.max()) {
    throw DegreeTooLarge("deg(P) = " + std::to_string(d.value()) + " exceeds max(sigma) = " +
                         std::to_string(sigma.max()));
  }
}

std::int64_t clamped_sum(const std::vector<Degree>& degs) {
  std::int64_t s = 0;
  for (const Degree& d : degs) s += d.clamped();
  return s;
}

void start_trace(CertificateTrace* trace, std::int64_t degree_sum, std::int64_t total_order) {
  if (trace == nullptr) return;
  trace->steps.clear();
  trace->degree_sum = degree_sum;
  trace->gamma = 1;
  if (total_order > 0) {
    const std::int64_t g = (degree_sum + total_order - 1) / total_order;
    if (g > 1) trace->gamma = g;
  }
}

std::vector<std::size_t> large_orders(const Order& sigma, std::int64_t k) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    if (sigma[j] >= k) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> at_least(const std::vector<Degree>& degs, std::int64_t k) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degs.size(); ++i) {
    if (degs[i] >= Degree(k)) out.push_back(i);
  }
  return out;
}

}  // namespace

ConstMatrix compute_certificate_naive(const PrimeField& f, const Order& sigma, const PolyMatrix& fmat,
                                      const PolyMatrix& p) {
  check_shapes(sigma, fmat, p);
  const std::size_t m = p.rows();
  const std::size_t n = fmat.cols();
  const auto r = row_degrees(p);
  ConstMatrix c(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    if (r[i].is_neg_inf()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t top = std::min(r[i].value(), sigma[j]);
      FieldElem acc;
      for (std::int64_t k = 1; k <= top; ++k) {
        const auto fk = static_cast<std::size_t>(sigma[j] - k);
        for (std::size_t l = 0; l < m; ++l) {
          acc = f.mul_add(acc, p(i, l).coeff(static_cast<std::size_t>(k)), fmat(l, j).coeff(fk));
        }
      }
      c(i, j) = acc;
    }
  }
  return c;
}

ConstMatrix compute_certificate_rowdeg(const PrimeField& f, const Order& sigma, const PolyMatrix& fmat,
                                       const PolyMatrix& p, CertificateTrace* trace) {
  check_shapes(sigma, fmat, p);
  const std::size_t m = p.rows();
  ConstMatrix c(m, fmat.cols());
  if (fmat.cols() == 0) return c;
  check_degree(sigma, p);

  const auto r = row_degrees(p);
  start_trace(trace, clamped_sum(r), sigma.total());
  for (std::int64_t k = 1; k <= sigma.max(); ++k) {
    const auto rows = at_least(r, k);
    const auto cols = large_orders(sigma, k);
    const auto kk = static_cast<std::size_t>(k);
    // A = coefficient k of P_{rows,*}; B_{l,t} = coefficient sigma_{c_t} - k of F_{l,c_t}.
    for (std::size_t i : rows) {
      for (std::size_t j : cols) {
        const auto fk = static_cast<std::size_t>(sigma[j] - k);
        FieldElem acc;
        for (std::size_t l = 0; l < m; ++l) {
          const FieldElem term = f.mul(p(i, l).coeff(kk), fmat(l, j).coeff(fk));
          acc = l == 0 ? term : f.add(acc, term);
        }
        c(i, j) = f.add(c(i, j), acc);
      }
    }
    if (trace != nullptr) {
      trace->steps.push_back({k, rows.size(), cols.size(), rows.size(), m, cols.size()});
    }
  }
  return c;
}

ConstMatrix compute_certificate_coldeg(const PrimeField& f, const Order& sigma, const PolyMatrix& fmat,
                                       const PolyMatrix& p, CertificateTrace* trace) {
  check_shapes(sigma, fmat, p);
  const std::size_t m = p.rows();
  ConstMatrix c(m, fmat.cols());
  if (fmat.cols() == 0) return c;
  check_degree(sigma, p);

  const auto cd = column_degrees(p);
  start_trace(trace, clamped_sum(cd), sigma.total());
  for (std::int64_t k = 1; k <= sigma.max(); ++k) {
    const auto inner = at_least(cd, k);
    const auto cols = large_orders(sigma, k);
    const auto kk = static_cast<std::size_t>(k);
    // A = coefficient k of P_{*,inner}; B_{l,t} = coefficient sigma_{c_t} - k of F_{l,c_t}, l in inner.
    if (!inner.empty()) {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j : cols) {
          const auto fk = static_cast<std::size_t>(sigma[j] - k);
          FieldElem acc;
          bool first = true;
          for (std::size_t l : inner) {
            const FieldElem term = f.mul(p(i, l).coeff(kk), fmat(l, j).coeff(fk));
            acc = first ? term : f.add(acc, term);
            first = false;
          }
          c(i, j) = f.add(c(i, j), acc);
        }
      }
    }
    if (trace != nullptr) {
      trace->steps.push_back({k, inner.size(), cols.size(), m, inner.size(), cols.size()});
    }
  }
  return c;
}

CertificateVariant choose_certificate_variant(const PolyMatrix& p) {
  return clamped_sum(row_degrees(p)) <= clamped_sum(column_degrees(p)) ? CertificateVariant::rowdeg
                                                                       : CertificateVariant::coldeg;
}

ConstMatrix compute_certificate(const PrimeField& f, const Order& sigma, const PolyMatrix& fmat,
                                const PolyMatrix& p, CertificateTrace* trace) {
  check_shapes(sigma, fmat, p);
  const PolyMatrix pt = truncate(p, static_cast<std::size_t>(sigma.max()) + 1);
  if (choose_certificate_variant(pt) == CertificateVariant::rowdeg) {
    return compute_certificate_rowdeg(f, sigma, fmat, pt, trace);
  }
  return compute_certificate_coldeg(f, sigma, fmat, pt, trace);
}

}  // namespace pmcert
