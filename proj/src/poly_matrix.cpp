#include "pmcert/poly_matrix.hpp"

#include <algorithm>
#include <string>

namespace pmcert {

namespace {

std::string dims(const char* what, std::size_t r, std::size_t c) {
  return std::string(what) + " " + std::to_string(r) + "x" + std::to_string(c);
}

void require_inner(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("product of " + dims("", a.rows(), a.cols()) + " by " +
                            dims("", b.rows(), b.cols()));
  }
}

void require_same_shape(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("shapes differ: " + dims("", a.rows(), a.cols()) + " vs " +
                            dims("", b.rows(), b.cols()));
  }
}

// acc[k + t] += a[k] * b[t] for k + t < limit.
void accumulate_product(const PrimeField& f, std::vector<FieldElem>& acc, const Poly& a,
                        const Poly& b, std::size_t limit) {
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  for (std::size_t k = 0; k < ac.size() && k < limit; ++k) {
    const std::size_t tmax = std::min(bc.size(), limit - k);
    for (std::size_t t = 0; t < tmax; ++t) {
      acc[k + t] = f.mul_add(acc[k + t], ac[k], bc[t]);
    }
  }
}

PolyMatrix product_with_limits(const PrimeField& f, const PolyMatrix& a, const PolyMatrix& b,
                               const std::vector<std::size_t>& col_limit) {
  require_inner(a, b);
  PolyMatrix out(a.rows(), b.cols());
  std::vector<FieldElem> acc;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::size_t len = 0;
      for (std::size_t l = 0; l < a.cols(); ++l) {
        const Poly& x = a(i, l);
        const Poly& y = b(l, j);
        if (!x.is_zero() && !y.is_zero()) len = std::max(len, x.length() + y.length() - 1);
      }
      len = std::min(len, col_limit[j]);
      acc.assign(len, FieldElem{});
      for (std::size_t l = 0; l < a.cols(); ++l) {
        accumulate_product(f, acc, a(i, l), b(l, j), len);
      }
      out(i, j) = Poly(std::move(acc));
      acc = {};
    }
  }
  return out;
}

}  // namespace

Poly::Poly(std::vector<FieldElem> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly Poly::constant(FieldElem c) { return Poly(std::vector<FieldElem>{c}); }

Poly Poly::monomial(FieldElem c, std::size_t k) {
  if (c.is_zero()) return Poly();
  std::vector<FieldElem> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::set_coeff(std::size_t k, FieldElem c) {
  if (k >= coeffs_.size()) {
    if (c.is_zero()) return;
    coeffs_.resize(k + 1);
  }
  coeffs_[k] = c;
  normalize();
}

Poly Poly::truncated(std::size_t len) const {
  if (len >= coeffs_.size()) return *this;
  return Poly(std::vector<FieldElem>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(len)));
}

Poly poly_add(const PrimeField& f, const Poly& a, const Poly& b) {
  std::vector<FieldElem> out(std::max(a.length(), b.length()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k >= a.length()) {
      out[k] = b.coeff(k);
    } else if (k >= b.length()) {
      out[k] = a.coeff(k);
    } else {
      out[k] = f.add(a.coeff(k), b.coeff(k));
    }
  }
  return Poly(std::move(out));
}

Poly poly_sub(const PrimeField& f, const Poly& a, const Poly& b) {
  std::vector<FieldElem> out(std::max(a.length(), b.length()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k >= b.length()) {
      out[k] = a.coeff(k);
    } else {
      out[k] = f.sub(a.coeff(k), b.coeff(k));
    }
  }
  return Poly(std::move(out));
}

Poly poly_mul(const PrimeField& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<FieldElem> acc(a.length() + b.length() - 1);
  accumulate_product(f, acc, a, b, acc.size());
  return Poly(std::move(acc));
}

Poly poly_scale(const PrimeField& f, const Poly& a, FieldElem c) {
  std::vector<FieldElem> out(a.length());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = f.mul(a.coeff(k), c);
  return Poly(std::move(out));
}

Poly poly_shift(const Poly& a, std::size_t k) {
  if (a.is_zero()) return a;
  std::vector<FieldElem> out(k, FieldElem{});
  out.insert(out.end(), a.coeffs().begin(), a.coeffs().end());
  return Poly(std::move(out));
}

FieldElem poly_eval(const PrimeField& f, const Poly& a, FieldElem x) {
  if (a.is_zero()) return FieldElem{};
  const auto c = a.coeffs();
  FieldElem acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = f.mul_add(c[k], acc, x);
  return acc;
}

PolyDivRem poly_divrem(const PrimeField& f, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ZeroInversion();
  if (a.length() < b.length()) return {Poly(), a};
  std::vector<FieldElem> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<FieldElem> quo(a.length() - b.length() + 1);
  const FieldElem lead_inv = f.inv(b.coeffs().back());
  const std::size_t db = b.length() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    const FieldElem q = f.mul(rem[k + db], lead_inv);
    quo[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t t = 0; t <= db; ++t) rem[k + t] = f.sub(rem[k + t], f.mul(q, b.coeff(t)));
  }
  rem.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

PolyMatrix PolyMatrix::identity(std::size_t m) {
  PolyMatrix id(m, m);
  for (std::size_t i = 0; i < m; ++i) id(i, i) = Poly::constant(FieldElem::from_canonical(1));
  return id;
}

Degree PolyMatrix::degree() const {
  Degree d;
  for (const Poly& e : entries_) d = std::max(d, e.degree());
  return d;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& e) { return e.is_zero(); });
}

ConstMatrix ConstMatrix::identity(std::size_t m) {
  ConstMatrix id(m, m);
  for (std::size_t i = 0; i < m; ++i) id(i, i) = FieldElem::from_canonical(1);
  return id;
}

bool ConstMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](FieldElem e) { return e.is_zero(); });
}

TruncOrder order_plus_one(const Order& sigma) {
  std::vector<std::int64_t> d(sigma.entries().begin(), sigma.entries().end());
  for (auto& e : d) ++e;
  return TruncOrder(std::move(d));
}

std::int64_t Shift::total() const {
  std::int64_t t = 0;
  for (std::int64_t e : entries_) t += e;
  return t;
}

PolyMatrix mul_naive(const PrimeField& f, const PolyMatrix& a, const PolyMatrix& b) {
  return product_with_limits(f, a, b, std::vector<std::size_t>(b.cols(), SIZE_MAX));
}

PolyMatrix mul_rem_orders(const PrimeField& f, const PolyMatrix& a, const PolyMatrix& b,
                          const TruncOrder& d) {
  if (d.size() != b.cols()) {
    throw DimensionMismatch("truncation order length " + std::to_string(d.size()) + " for " +
                            std::to_string(b.cols()) + " columns");
  }
  std::vector<std::size_t> limits(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) limits[j] = static_cast<std::size_t>(d[j]);
  return product_with_limits(f, a, b, limits);
}

PolyMatrix truncate_columns(const PolyMatrix& a, const TruncOrder& d) {
  if (d.size() != a.cols()) throw DimensionMismatch("truncation order length does not match columns");
  PolyMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).truncated(static_cast<std::size_t>(d[j]));
  }
  return out;
}

PolyMatrix truncate(const PolyMatrix& a, std::size_t len) {
  PolyMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).truncated(len);
  }
  return out;
}

PolyMatrix poly_matrix_add(const PrimeField& f, const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  PolyMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = poly_add(f, a(i, j), b(i, j));
  }
  return out;
}

PolyMatrix poly_matrix_sub(const PrimeField& f, const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  PolyMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = poly_sub(f, a(i, j), b(i, j));
  }
  return out;
}

PolyMatrix times_x_powers(const ConstMatrix& c, const Order& sigma) {
  if (sigma.size() != c.cols()) throw DimensionMismatch("order length does not match columns");
  PolyMatrix out(c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      out(i, j) = Poly::monomial(c(i, j), static_cast<std::size_t>(sigma[j]));
    }
  }
  return out;
}

PolyMatrix to_poly_matrix(const ConstMatrix& c) {
  PolyMatrix out(c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) out(i, j) = Poly::monomial(c(i, j), 0);
  }
  return out;
}

ConstMatrix coefficient(const PolyMatrix& a, std::size_t k) {
  ConstMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).coeff(k);
  }
  return out;
}

ConstMatrix evaluate(const PrimeField& f, const PolyMatrix& a, FieldElem x) {
  if (x.is_zero()) return coefficient(a, 0);
  ConstMatrix out(a.rows(), a.cols());
  const bool at_one = x == f.one();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Poly& e = a(i, j);
      if (e.is_zero()) continue;
      if (at_one) {
        const auto c = e.coeffs();
        FieldElem acc = c[0];
        for (std::size_t k = 1; k < c.size(); ++k) acc = f.add(acc, c[k]);
        out(i, j) = acc;
      } else {
        out(i, j) = poly_eval(f, e, x);
      }
    }
  }
  return out;
}

std::vector<Degree> row_degrees(const PolyMatrix& a) {
  std::vector<Degree> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] = std::max(out[i], a(i, j).degree());
  }
  return out;
}

std::vector<Degree> column_degrees(const PolyMatrix& a) {
  std::vector<Degree> out(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] = std::max(out[j], a(i, j).degree());
  }
  return out;
}

std::vector<Degree> shifted_row_degree(const PolyMatrix& a, const Shift& s) {
  if (s.size() != a.cols()) {
    throw DimensionMismatch("shift length " + std::to_string(s.size()) + " for " +
                            std::to_string(a.cols()) + " columns");
  }
  std::vector<Degree> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Degree d = a(i, j).degree();
      if (d.is_neg_inf()) continue;
      out[i] = std::max(out[i], Degree(d.value() + s[j]));
    }
  }
  return out;
}

ConstMatrix s_leading_matrix(const PolyMatrix& p, const Shift& s) {
  if (p.rows() != p.cols()) throw DimensionMismatch("s-leading matrix needs a square matrix");
  const auto r = shifted_row_degree(p, s);
  ConstMatrix lead(p.rows(), p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    if (r[i].is_neg_inf()) continue;
    for (std::size_t j = 0; j < p.cols(); ++j) {
      const std::int64_t k = r[i].value() - s[j];
      if (k >= 0) lead(i, j) = p(i, j).coeff(static_cast<std::size_t>(k));
    }
  }
  return lead;
}

std::int64_t size_measure(const PolyMatrix& a) {
  std::int64_t total = static_cast<std::int64_t>(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) total += a(i, j).degree().clamped();
  }
  return total;
}

PolyMatrix left_vec_mul(const PrimeField& f, const ConstMatrix& u, const PolyMatrix& a,
                        std::optional<std::size_t> trunc_len) {
  if (u.rows() != 1 || u.cols() != a.rows()) {
    throw DimensionMismatch("left vector " + dims("", u.rows(), u.cols()) + " against " +
                            dims("matrix", a.rows(), a.cols()));
  }
  const std::size_t cap = trunc_len.value_or(SIZE_MAX);
  PolyMatrix out(1, a.cols());
  std::vector<FieldElem> acc;
  for (std::size_t l = 0; l < a.cols(); ++l) {
    std::size_t len = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) len = std::max(len, a(i, l).length());
    acc.assign(std::min(len, cap), FieldElem{});
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const auto c = a(i, l).coeffs();
      const std::size_t kmax = std::min(c.size(), acc.size());
      for (std::size_t k = 0; k < kmax; ++k) acc[k] = f.mul_add(acc[k], u(0, i), c[k]);
    }
    out(0, l) = Poly(std::move(acc));
    acc = {};
  }
  return out;
}

ConstMatrix const_mul(const PrimeField& f, const ConstMatrix& a, const ConstMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("constant product inner dimensions differ");
  ConstMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      FieldElem acc;
      for (std::size_t l = 0; l < a.cols(); ++l) acc = f.mul_add(acc, a(i, l), b(l, j));
      out(i, j) = acc;
    }
  }
  return out;
}

ConstMatrix transpose(const ConstMatrix& a) {
  ConstMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

ConstMatrix hconcat(const ConstMatrix& a, const ConstMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("horizontal concatenation needs equal row counts");
  ConstMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

}  // namespace pmcert
