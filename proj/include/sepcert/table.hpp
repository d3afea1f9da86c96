#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sepcert/rational.hpp"
#include "sepcert/types.hpp"

namespace sepcert {

/// One row of the critical-value table: either an exact value (lo == hi) or a
/// bracket.  Rational rows carry exact fractions alongside the decimals.
struct TableEntry {
  std::string name;
  bool exact = false;
  double lo = 0.0;
  double hi = 0.0;
  std::optional<Rational> lo_rational;
  std::optional<Rational> hi_rational;
};

/// Regenerates every closed-form threshold for the given dims: the constant L,
/// the minimal-eigenvalue threshold, the partial-sum critical values C[k], the
/// purity critical value (with its improved section lower bound where the
/// sharp value is known), and the entropy bracket.
std::vector<TableEntry> critical_table(const CompositeDims& dims);

}  // namespace sepcert
