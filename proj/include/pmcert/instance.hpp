#pragma once

#include <cstdint>

#include "pmcert/poly_matrix.hpp"

namespace pmcert {

// Input of the approximant basis problem: order sigma, an m x n matrix F
// with cdeg(F) < sigma, and a shift s of length m, over F_p.
struct Instance {
  std::uint64_t modulus = 0;
  Order sigma;
  PolyMatrix f;
  Shift shift;

  std::size_t m() const { return f.rows(); }
  std::size_t n() const { return f.cols(); }

  // Throws DimensionMismatch / InvalidArgument when an invariant is broken.
  void validate() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

}  // namespace pmcert
