#include "pmcert/field.hpp"

#include <bit>
#include <string>

namespace pmcert {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin; the first twelve prime bases are sufficient for
// every n < 3.3e24, which covers all 64-bit integers.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : kBases) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p, bool count_ops)
    : p_(p), mersenne_(p == kMersenne61), counting_(count_ops) {
  if (p <= 2 || p >= kMaxModulus) {
    throw InvalidArgument("modulus must satisfy 2 < p < 2^62, got " + std::to_string(p));
  }
  if (!is_prime_u64(p)) {
    throw InvalidArgument("modulus is not prime: " + std::to_string(p));
  }
}

FieldElem PrimeField::from_i64(std::int64_t v) const {
  if (v >= 0) return from_u64(static_cast<std::uint64_t>(v));
  // -(v + 1) avoids overflow at INT64_MIN.
  const std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
  const std::uint64_t r = mag % p_;
  return FieldElem::from_canonical(r == 0 ? 0 : p_ - r);
}

FieldElem PrimeField::inv(FieldElem a) const {
  if (a.is_zero()) throw ZeroInversion();
  if (counting_) ++tally_.inv;
  // Extended Euclid on (a, p) with signed Bezout coefficient for a.
  std::int64_t t = 0;
  std::int64_t new_t = 1;
  std::uint64_t r = p_;
  std::uint64_t new_r = a.value();
  while (new_r != 0) {
    const std::uint64_t q = r / new_r;
    const std::int64_t next_t = t - static_cast<std::int64_t>(q) * new_t;
    t = new_t;
    new_t = next_t;
    const std::uint64_t next_r = r - q * new_r;
    r = new_r;
    new_r = next_r;
  }
  return from_i64(t);
}

FieldElem PrimeField::pow(FieldElem a, std::uint64_t e) const {
  if (e == 0) return one();
  FieldElem result = a;
  for (int bit = std::bit_width(e) - 2; bit >= 0; --bit) {
    result = mul(result, result);
    if ((e >> bit) & 1) result = mul(result, a);
  }
  return result;
}

FieldElem PrimeField::sample_from(SeededRng& rng, std::uint64_t set_size, bool exclude_zero) const {
  if (set_size > p_) {
    throw InvalidArgument("sampling set larger than the field");
  }
  if (exclude_zero) {
    if (set_size < 2) throw InvalidArgument("sampling set has no nonzero element");
    return FieldElem::from_canonical(1 + rng.uniform_below(set_size - 1));
  }
  if (set_size < 1) throw InvalidArgument("empty sampling set");
  return FieldElem::from_canonical(rng.uniform_below(set_size));
}

}  // namespace pmcert
