#pragma once

#include <string>
#include <vector>

#include "klr/element.hpp"

namespace klr {

struct RelationReport {
  int checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// All label sequences of length n (the full I^n).
std::vector<std::vector<int>> all_sequences(int rank, int n);

/// Checks every defining relation family on every sequence of I^n by
/// moving each relation to one side and straightening to normal form.
RelationReport relation_suite(const KLRContext& ctx, int n);

/// The same families checked as operator identities of the polynomial
/// representation, composing generator actions directly (no straightening
/// involved), on monomial probe vectors with exponents <= 2.
RelationReport polyrep_relation_suite(const KLRContext& ctx, int n);

} // namespace klr
