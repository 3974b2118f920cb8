#include "pmcert/instance.hpp"

#include <string>

namespace pmcert {

void Instance::validate() const {
  if (sigma.size() != f.cols()) {
    throw DimensionMismatch("order has " + std::to_string(sigma.size()) + " entries for " +
                            std::to_string(f.cols()) + " columns");
  }
  if (shift.size() != f.rows()) {
    throw DimensionMismatch("shift has " + std::to_string(shift.size()) + " entries for " +
                            std::to_string(f.rows()) + " rows");
  }
  if (f.rows() == 0) throw InvalidArgument("instance needs at least one row");
  const auto cdeg = column_degrees(f);
  for (std::size_t j = 0; j < f.cols(); ++j) {
    if (cdeg[j] >= Degree(sigma[j])) {
      throw InvalidArgument("column " + std::to_string(j) + " of F has degree >= sigma_j = " +
                            std::to_string(sigma[j]));
    }
  }
}

}  // namespace pmcert
