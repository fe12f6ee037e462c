#include "klr/graded.hpp"

#include <algorithm>

namespace klr {

namespace {

void enum_weighted(const std::vector<int>& wt, std::size_t pos, int target,
                   std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (pos == wt.size()) {
    if (target == 0) out.push_back(cur);
    return;
  }
  for (int a = 0; a * wt[pos] <= target; ++a) {
    cur.push_back(a);
    enum_weighted(wt, pos + 1, target - a * wt[pos], cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<std::vector<int>> weighted_exps(const std::vector<int>& wt,
                                            int target) {
  std::vector<std::vector<int>> out;
  if (target < 0) return out;
  std::vector<int> cur;
  enum_weighted(wt, 0, target, cur, out);
  return out;
}

std::vector<Monomial> monomials_of_degree(
    const KLRContext& ctx, const std::vector<std::vector<int>>& seqs, int d) {
  std::vector<Monomial> out;
  if (seqs.empty()) return out;
  const int n = static_cast<int>(seqs[0].size());
  if (n == 0) {
    if (d == 0) out.push_back({{}, Perm::identity(0), {}});
    return out;
  }
  const auto perms = all_perms(n);
  const std::vector<int> zeros(n, 0);
  for (const auto& nu : seqs)
    for (const auto& w : perms) {
      const int td = ctx.degree(Monomial{zeros, w, nu});
      const auto mu = w.apply(nu);
      std::vector<int> wt(n);
      for (int k = 0; k < n; ++k) wt[k] = ctx.datum().bilinear(mu[k], mu[k]);
      for (const auto& a : weighted_exps(wt, d - td))
        out.push_back({a, w, nu});
    }
  return out;
}

std::pair<int, int> tau_degree_range(
    const KLRContext& ctx, const std::vector<std::vector<int>>& seqs) {
  int lo = 0, hi = 0;
  if (seqs.empty()) return {0, 0};
  const int n = static_cast<int>(seqs[0].size());
  const std::vector<int> zeros(n, 0);
  for (const auto& nu : seqs)
    for (const auto& w : all_perms(n)) {
      const int td = ctx.degree(Monomial{zeros, w, nu});
      lo = std::min(lo, td);
      hi = std::max(hi, td);
    }
  return {lo, hi};
}

} // namespace klr
