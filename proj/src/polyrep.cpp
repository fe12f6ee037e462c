#include "klr/polyrep.hpp"

#include <random>
#include <set>

namespace klr {

void PolyVector::add(const std::vector<int>& nu, const Poly& p) {
  if (p.is_zero()) return;
  auto [it, fresh] = comps.emplace(nu, p);
  if (!fresh) {
    it->second += p;
    if (it->second.is_zero()) comps.erase(it);
  }
}

bool PolyVector::is_zero() const { return comps.empty(); }

PolyVector act(const KLRContext& ctx, const KLRElement& e,
               const PolyVector& v) {
  PolyVector out;
  for (const auto& [m, c] : e.terms()) {
    auto it = v.comps.find(m.nu);
    if (it == v.comps.end()) continue;
    const int n = m.n();
    std::vector<int> seq = m.nu;
    Poly g = it->second;
    const auto cw = m.w.canonical_word();
    for (int p = static_cast<int>(cw.size()) - 1; p >= 0; --p) {
      const int l = cw[p];
      if (seq.at(l) == seq.at(l + 1)) {
        g = g.divided_difference(l, l + 1);
      } else {
        Poly twisted = g.swap_vars(l, l + 1);
        if (seq[l] > seq[l + 1])
          twisted = twisted * ctx.q_poly(seq[l], seq[l + 1], l + 1, l, n);
        g = std::move(twisted);
        std::swap(seq[l], seq[l + 1]);
      }
      if (g.is_zero()) break;
    }
    if (g.is_zero()) continue;
    Poly::Expo ex(m.xexp);
    out.add(seq, g * Poly::monomial(ex, c));
  }
  return out;
}

namespace {

std::vector<int> content_of(const std::vector<int>& nu, std::size_t rank) {
  std::vector<int> c(rank, 0);
  for (int i : nu) ++c.at(i);
  return c;
}

void enumerate_exponents(int n, int bound, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= bound; ++v) {
    cur.push_back(v);
    enumerate_exponents(n, bound, cur, out);
    cur.pop_back();
  }
}

} // namespace

bool oracle_equal(const KLRContext& ctx, const KLRElement& a,
                  const KLRElement& b, int random_trials,
                  unsigned long long seed) {
  std::set<std::vector<int>> contents;
  int n = -1;
  for (const auto* e : {&a, &b})
    for (const auto& [m, c] : e->terms()) {
      contents.insert(content_of(m.nu, ctx.datum().rank()));
      n = m.n();
    }
  if (n < 0) return a == b;  // both zero

  std::vector<std::vector<int>> seqs;
  for (const auto& c : contents) {
    auto these = enumerate_Ibeta(ctx.datum(), RootVector(c));
    seqs.insert(seqs.end(), these.begin(), these.end());
  }
  std::vector<std::vector<int>> exps;
  {
    std::vector<int> cur;
    enumerate_exponents(n, 2, cur, exps);
  }
  for (const auto& nu : seqs)
    for (const auto& ex : exps) {
      PolyVector v;
      v.add(nu, Poly::monomial(ex, Rational(1)));
      if (!(act(ctx, a, v) == act(ctx, b, v))) return false;
    }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<std::size_t> pick_exp(0, exps.size() - 1);
  for (int t = 0; t < random_trials; ++t) {
    PolyVector v;
    for (const auto& nu : seqs) {
      Poly p(n);
      for (int k = 0; k < 3; ++k)
        p.add_term(exps[pick_exp(rng)], Rational(coef(rng)));
      v.add(nu, p);
    }
    if (!(act(ctx, a, v) == act(ctx, b, v))) return false;
  }
  return true;
}

} // namespace klr
