#pragma once

#include <compare>
#include <cstdint>

#include "pmcert/errors.hpp"
#include "pmcert/rng.hpp"

namespace pmcert {

__extension__ using uint128 = unsigned __int128;

// A canonical residue in [0, p). Only PrimeField produces these from raw
// integers, so a FieldElem in hand is always reduced.
class FieldElem {
 public:
  constexpr FieldElem() = default;

  // The caller vouches that value < p for the field in use.
  static constexpr FieldElem from_canonical(std::uint64_t value) {
    FieldElem e;
    e.value_ = value;
    return e;
  }

  constexpr std::uint64_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;

 private:
  std::uint64_t value_ = 0;
};

// Field-operation counters. add_like covers add, sub and neg.
struct OpTally {
  std::uint64_t add_like = 0;
  std::uint64_t mul = 0;
  std::uint64_t inv = 0;

  std::uint64_t total() const { return add_like + mul + inv; }

  friend OpTally operator-(const OpTally& a, const OpTally& b) {
    return {a.add_like - b.add_like, a.mul - b.mul, a.inv - b.inv};
  }
  friend OpTally operator+(const OpTally& a, const OpTally& b) {
    return {a.add_like + b.add_like, a.mul + b.mul, a.inv + b.inv};
  }
  friend bool operator==(const OpTally&, const OpTally&) = default;
};

bool is_prime_u64(std::uint64_t n);

// Arithmetic in F_p for a prime 2 < p < 2^62.
//
// The context is immutable apart from the operation tally, which is only
// meaningful when a single thread drives the context.
class PrimeField {
 public:
  static constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

  explicit PrimeField(std::uint64_t p = kMersenne61, bool count_ops = false);

  std::uint64_t modulus() const { return p_; }

  FieldElem zero() const { return FieldElem{}; }
  FieldElem one() const { return FieldElem::from_canonical(1); }
  FieldElem from_u64(std::uint64_t v) const { return FieldElem::from_canonical(v % p_); }
  FieldElem from_i64(std::int64_t v) const;
  bool is_canonical(std::uint64_t v) const { return v < p_; }

  FieldElem add(FieldElem a, FieldElem b) const {
    tick_add();
    std::uint64_t s = a.value() + b.value();
    if (s >= p_) s -= p_;
    return FieldElem::from_canonical(s);
  }

  FieldElem sub(FieldElem a, FieldElem b) const {
    tick_add();
    const std::uint64_t s =
        a.value() >= b.value() ? a.value() - b.value() : a.value() + p_ - b.value();
    return FieldElem::from_canonical(s);
  }

  FieldElem neg(FieldElem a) const {
    tick_add();
    return FieldElem::from_canonical(a.is_zero() ? 0 : p_ - a.value());
  }

  FieldElem mul(FieldElem a, FieldElem b) const {
    if (counting_) ++tally_.mul;
    return FieldElem::from_canonical(mulmod(a.value(), b.value()));
  }

  // Fused a + b*c, counted as one multiplication and one addition.
  FieldElem mul_add(FieldElem a, FieldElem b, FieldElem c) const { return add(a, mul(b, c)); }

  FieldElem inv(FieldElem a) const;

  // Left-to-right square-and-multiply. With e having bit length L and
  // popcount w, exactly (L - 1) + (w - 1) multiplications are performed
  // (none for e <= 1), hence at most 2*floor(log2 e) <= 2*log2(e) + 1.
  // pow(0, 0) = 1.
  FieldElem pow(FieldElem a, std::uint64_t e) const;

  // Uniform over [0, p), or [1, p) when exclude_zero is set.
  FieldElem sample(SeededRng& rng, bool exclude_zero) const { return sample_from(rng, p_, exclude_zero); }

  // Uniform over S = {0, ..., set_size - 1} (minus 0 when exclude_zero).
  // One call consumes exactly one rng.uniform_below() draw.
  FieldElem sample_from(SeededRng& rng, std::uint64_t set_size, bool exclude_zero) const;

  bool counting() const { return counting_; }
  void set_counting(bool on) { counting_ = on; }
  const OpTally& tally() const { return tally_; }
  void reset_tally() const { tally_ = {}; }

 private:
  void tick_add() const {
    if (counting_) ++tally_.add_like;
  }

  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const {
    const uint128 prod = static_cast<uint128>(a) * b;
    if (mersenne_) {
      // 2^61 == 1 (mod p): fold the high part onto the low part twice.
      std::uint64_t r = static_cast<std::uint64_t>(prod & kMersenne61) +
                        static_cast<std::uint64_t>(prod >> 61);
      r = (r & kMersenne61) + (r >> 61);
      return r >= kMersenne61 ? r - kMersenne61 : r;
    }
    return static_cast<std::uint64_t>(prod % p_);
  }

  std::uint64_t p_;
  bool mersenne_;
  bool counting_;
  mutable OpTally tally_;
};

}  // namespace pmcert
