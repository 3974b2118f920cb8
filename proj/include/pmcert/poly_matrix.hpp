#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pmcert/errors.hpp"
#include "pmcert/field.hpp"

namespace pmcert {

// Degree of a polynomial, row or column. The zero polynomial has degree
// "minus infinity", which orders below every integer. Arithmetic on the
// sentinel is refused: value() throws.
class Degree {
 public:
  constexpr Degree() = default;  // minus infinity
  constexpr explicit Degree(std::int64_t d) : value_(d) {}

  static constexpr Degree neg_inf() { return Degree{}; }

  constexpr bool is_neg_inf() const { return value_ == kNegInf; }
  std::int64_t value() const {
    if (is_neg_inf()) throw InvalidArgument("degree of zero has no integer value");
    return value_;
  }
  // max(0, deg), the contribution of an entry to the size measure.
  constexpr std::int64_t clamped() const { return value_ > 0 ? value_ : 0; }

  friend constexpr auto operator<=>(Degree, Degree) = default;
  friend constexpr bool operator==(Degree, Degree) = default;

 private:
  static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
  std::int64_t value_ = kNegInf;
};

// Dense univariate polynomial. Coefficient k multiplies x^k; the vector never
// carries trailing zeros, so the zero polynomial is the empty vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<FieldElem> coeffs);

  static Poly constant(FieldElem c);
  static Poly monomial(FieldElem c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  Degree degree() const {
    return is_zero() ? Degree::neg_inf() : Degree(static_cast<std::int64_t>(coeffs_.size()) - 1);
  }
  // Number of stored coefficients (degree + 1, or 0).
  std::size_t length() const { return coeffs_.size(); }
  FieldElem coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : FieldElem{}; }
  std::span<const FieldElem> coeffs() const { return coeffs_; }

  void set_coeff(std::size_t k, FieldElem c);

  // P rem x^len.
  Poly truncated(std::size_t len) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void normalize();
  std::vector<FieldElem> coeffs_;
};

Poly poly_add(const PrimeField& f, const Poly& a, const Poly& b);
Poly poly_sub(const PrimeField& f, const Poly& a, const Poly& b);
Poly poly_mul(const PrimeField& f, const Poly& a, const Poly& b);
Poly poly_scale(const PrimeField& f, const Poly& a, FieldElem c);
Poly poly_shift(const Poly& a, std::size_t k);  // x^k * a
FieldElem poly_eval(const PrimeField& f, const Poly& a, FieldElem x);

struct PolyDivRem {
  Poly quotient;
  Poly remainder;
};
PolyDivRem poly_divrem(const PrimeField& f, const Poly& a, const Poly& b);

// m x n matrix over F_p[x], row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static PolyMatrix identity(std::size_t m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Poly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Poly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  // Largest entry degree (minus infinity for the zero matrix).
  Degree degree() const;
  bool is_zero() const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> entries_;
};

// m x n matrix over F_p, row-major.
class ConstMatrix {
 public:
  ConstMatrix() = default;
  ConstMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static ConstMatrix identity(std::size_t m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElem operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  FieldElem& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::span<const FieldElem> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
  std::span<FieldElem> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }

  bool is_zero() const;

  friend bool operator==(const ConstMatrix&, const ConstMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElem> entries_;
};

namespace detail {
struct OrderTag {};
struct TruncOrderTag {};
}  // namespace detail

// Tuple of positive integers with cached sum and maximum. Instantiated as
// Order (the approximation order sigma, sum D) and TruncOrder (truncation
// orders d of a product, sum |d|). Empty tuples are allowed; their sum and
// maximum are 0.
template <class Tag>
class PositiveTuple {
 public:
  PositiveTuple() = default;
  explicit PositiveTuple(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
    for (std::int64_t e : entries_) {
      if (e < 1) throw InvalidArgument("order entries must be positive");
      total_ += e;
      if (e > max_) max_ = e;
    }
  }

  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t j) const { return entries_[j]; }
  std::span<const std::int64_t> entries() const { return entries_; }
  std::int64_t total() const { return total_; }
  std::int64_t max() const { return max_; }

  friend bool operator==(const PositiveTuple& a, const PositiveTuple& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<std::int64_t> entries_;
  std::int64_t total_ = 0;
  std::int64_t max_ = 0;
};

using Order = PositiveTuple<detail::OrderTag>;
using TruncOrder = PositiveTuple<detail::TruncOrderTag>;

// sigma + 1 componentwise.
TruncOrder order_plus_one(const Order& sigma);

// Integer column weights.
class Shift {
 public:
  Shift() = default;
  explicit Shift(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}
  static Shift zero(std::size_t m) { return Shift(std::vector<std::int64_t>(m, 0)); }

  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t j) const { return entries_[j]; }
  std::span<const std::int64_t> entries() const { return entries_; }
  std::int64_t total() const;

  friend bool operator==(const Shift&, const Shift&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

PolyMatrix mul_naive(const PrimeField& f, const PolyMatrix& a, const PolyMatrix& b);

// (A * B) rem X^d: column j of the product reduced modulo x^{d_j}. Terms of
// degree >= d_j are never formed.
PolyMatrix mul_rem_orders(const PrimeField& f, const PolyMatrix& a, const PolyMatrix& b,
                          const TruncOrder& d);

PolyMatrix truncate_columns(const PolyMatrix& a, const TruncOrder& d);
PolyMatrix truncate(const PolyMatrix& a, std::size_t len);  // every entry rem x^len

PolyMatrix poly_matrix_add(const PrimeField& f, const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix poly_matrix_sub(const PrimeField& f, const PolyMatrix& a, const PolyMatrix& b);
// C * X^sigma as a polynomial matrix.
PolyMatrix times_x_powers(const ConstMatrix& c, const Order& sigma);
PolyMatrix to_poly_matrix(const ConstMatrix& c);

ConstMatrix coefficient(const PolyMatrix& a, std::size_t k);

// Entrywise Horner evaluation: at most 2 * (|A| - m*n) operations. At x = 0
// the constant coefficients are read off; at x = 1 only additions are used.
ConstMatrix evaluate(const PrimeField& f, const PolyMatrix& a, FieldElem x);

std::vector<Degree> row_degrees(const PolyMatrix& a);
std::vector<Degree> column_degrees(const PolyMatrix& a);

// r_i = max_j (deg a_ij + s_j) over the nonzero entries of row i.
std::vector<Degree> shifted_row_degree(const PolyMatrix& a, const Shift& s);

// L_ij = coefficient of degree r_i - s_j of a_ij, with r = rdeg_s(a).
ConstMatrix s_leading_matrix(const PolyMatrix& p, const Shift& s);

// m*n + sum max(0, deg a_ij).
std::int64_t size_measure(const PolyMatrix& a);

// u * A for a 1 x m constant row u. When trunc_len is set, only the
// coefficients of degree < trunc_len are formed (result is (u*A) rem x^len).
PolyMatrix left_vec_mul(const PrimeField& f, const ConstMatrix& u, const PolyMatrix& a,
                        std::optional<std::size_t> trunc_len = std::nullopt);

ConstMatrix const_mul(const PrimeField& f, const ConstMatrix& a, const ConstMatrix& b);
ConstMatrix transpose(const ConstMatrix& a);
ConstMatrix hconcat(const ConstMatrix& a, const ConstMatrix& b);

}  // namespace pmcert
