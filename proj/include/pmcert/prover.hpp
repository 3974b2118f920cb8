#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pmcert/certifier.hpp"
#include "pmcert/field.hpp"
#include "pmcert/instance.hpp"
#include "pmcert/poly_matrix.hpp"
#include "pmcert/rng.hpp"

namespace pmcert {

// Order-by-order approximant basis. Starts from P = I with working degrees
// t = s; columns are processed left to right, orders upwards. At each step
// the residual of column j at degree k is read from P * F_{*,j} (kept up to
// date under the row operations), the pivot is the row of smallest t among
// those with a nonzero residual (smallest index on ties), the other such
// rows are cleared with it, then the pivot row is multiplied by x.
//
// The result is an s-reduced basis of the approximants with rdeg_s(P) = t.
PolyMatrix iterative_appbas(const PrimeField& f, const Instance& inst);

struct SigmaProfile {
  enum class Kind { uniform, random_max, skewed };
  Kind kind = Kind::uniform;
  std::int64_t param = 1;  // sigma_0, max sigma, or D

  static SigmaProfile uniform(std::int64_t sigma0) { return {Kind::uniform, sigma0}; }
  static SigmaProfile random_max(std::int64_t max) { return {Kind::random_max, max}; }
  // (D - (n-1), 1, ..., 1)
  static SigmaProfile skewed(std::int64_t total) { return {Kind::skewed, total}; }
};

struct ShiftProfile {
  enum class Kind { zero, uniform_range, staircase };
  Kind kind = Kind::zero;
  std::int64_t a = 0;
  std::int64_t b = 0;

  static ShiftProfile zero() { return {}; }
  // each s_i uniform in [lo, hi]
  static ShiftProfile uniform_range(std::int64_t lo, std::int64_t hi) { return {Kind::uniform_range, lo, hi}; }
  // (0, h, 2h, ...)
  static ShiftProfile staircase(std::int64_t h) { return {Kind::staircase, h, 0}; }
};

// Text forms used on the command line: "uniform:4", "random_max:6",
// "skewed:20"; "zero", "range:-2:3", "staircase:2".
SigmaProfile parse_sigma_profile(std::string_view text);
ShiftProfile parse_shift_profile(std::string_view text);
std::string to_string(const SigmaProfile& p);
std::string to_string(const ShiftProfile& p);

// Draw order: sigma entries (random_max only), shift entries (uniform_range
// only), then the coefficients of F row-major, low degree first.
Instance gen_random_instance(const PrimeField& f, std::size_t m, std::size_t n, const SigmaProfile& sigma,
                             const ShiftProfile& shift, std::uint64_t seed);

enum class TamperTarget { basis_coeff, certificate_entry, swap_rows, scale_row };

std::string_view to_string(TamperTarget t);
std::optional<TamperTarget> tamper_target_from_string(std::string_view s);

struct TamperSpec {
  TamperTarget target = TamperTarget::basis_coeff;
  // Location: row / column / degree of the entry, or the second row for
  // swap_rows. Unset fields are drawn at random.
  std::optional<std::size_t> row;
  std::optional<std::size_t> col;
  std::optional<std::size_t> degree;
  std::optional<std::size_t> other_row;
  // Added value (basis_coeff, certificate_entry) or factor (scale_row).
  std::optional<FieldElem> value;
  // basis_coeff only: touch a coefficient of degree >= 1 strictly below the
  // s-leading position, so L and P(0) are unchanged.
  bool preserve_cheap_checks = false;
};

struct TamperResult {
  PolyMatrix basis;
  ConstMatrix certificate;
  // First condition the exact oracle finds violated, if any.
  std::optional<FailedCondition> tag;
};

// Mutates a copy of (P, C). When the location is not fully specified,
// random locations are retried until the mutation differs from the input
// and violates one of the four conditions; NoValidLocation is raised when
// that fails or no admissible location exists.
TamperResult tamper(const PrimeField& f, const Instance& inst, const PolyMatrix& p, const ConstMatrix& c,
                    const TamperSpec& spec, SeededRng& rng);

}  // namespace pmcert
