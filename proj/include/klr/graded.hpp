#pragma once

#include <utility>
#include <vector>

#include "klr/element.hpp"

namespace klr {

/// Exponent vectors a >= 0 with sum_k a_k wt_k == target (all wt_k > 0).
std::vector<std::vector<int>> weighted_exps(const std::vector<int>& wt,
                                            int target);

/// All normal-form monomials x^a tau_w e(nu), nu in `seqs`, of degree d.
std::vector<Monomial> monomials_of_degree(
    const KLRContext& ctx, const std::vector<std::vector<int>>& seqs, int d);

/// (min, max) of deg(tau_w e(nu)) over all w and nu in `seqs`; (0, 0) when
/// empty.  Every monomial degree is >= the minimum.
std::pair<int, int> tau_degree_range(const KLRContext& ctx,
                                     const std::vector<std::vector<int>>& seqs);

} // namespace klr
