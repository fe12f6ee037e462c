#pragma once

#include <map>
#include <string>
#include <vector>

#include "klr/element.hpp"

namespace klr {

struct MackeyReport {
  bool ok = true;
  int max_degree = 0;
  std::vector<std::string> failures;
  std::map<int, int> target_dims;  // dim e(beta,i)R(beta+a_i)e(beta,i) per degree
};

/// Degreewise check (all degrees <= D, exact rank) that
///   R(beta)e(beta-a_i,i) (x)_{R(beta-a_i)} k tau_n (x) e(beta-a_i,i)R(beta)
///     (+) k[x_{n+1}] (x) R(beta)
/// maps bijectively onto e(beta,i)R(beta+a_i)e(beta,i) via
/// a (x) tau_n (x) b -> a tau_n b and f (x) r -> f(x_{n+1}) r.  The first
/// summand is zero when beta - a_i leaves Q^+.  The tensor factor is made
/// explicit by certifying degreewise that R(beta)e(beta-a_i,i) is free as a
/// right R(beta-a_i)-module on the coset monomials x_j^t tau_j...tau_{n-1}.
MackeyReport verify_mackey(const KLRContext& ctx, const RootVector& beta,
                           int i, int D);

} // namespace klr
