#include "klr/relations.hpp"

#include <sstream>

#include "klr/polyrep.hpp"

namespace klr {

std::vector<std::vector<int>> all_sequences(int rank, int n) {
  std::vector<std::vector<int>> out{{}};
  for (int k = 0; k < n; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& s : out)
      for (int i = 0; i < rank; ++i) {
        auto t = s;
        t.push_back(i);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

namespace {

void expect_zero(const KLRContext& ctx, const KLRElement& e,
                 const std::string& what, RelationReport* rep) {
  ++rep->checked;
  if (!e.is_zero())
    rep->violations.push_back(what + " -> " + ctx.str(e));
}

} // namespace

RelationReport relation_suite(const KLRContext& ctx, int n) {
  RelationReport rep;
  const int rank = static_cast<int>(ctx.datum().rank());
  const auto seqs = all_sequences(rank, n);
  auto tag = [&](const std::string& rel, const std::vector<int>& nu,
                 int a = -1, int b = -1) {
    std::ostringstream os;
    os << rel << " nu=(";
    for (std::size_t k = 0; k < nu.size(); ++k)
      os << (k ? "," : "") << ctx.datum().labels().at(nu[k]);
    os << ")";
    if (a >= 0) os << " a=" << a + 1;
    if (b >= 0) os << " b=" << b + 1;
    return os.str();
  };

  for (const auto& nu : seqs) {
    const auto e = idempotent(nu);
    for (const auto& nu2 : seqs) {
      KLRElement p = ctx.multiply(e, idempotent(nu2));
      if (nu == nu2) p -= e;
      expect_zero(ctx, p, tag("e(nu)e(nu')", nu), &rep);
    }
    for (int k = 0; k < n; ++k) {
      for (int m = k + 1; m < n; ++m)
        expect_zero(ctx,
                    ctx.multiply(x_gen(k, nu), x_gen(m, nu)) -
                        ctx.multiply(x_gen(m, nu), x_gen(k, nu)),
                    tag("x_k x_m commute", nu, k, m), &rep);
      expect_zero(ctx,
                  ctx.multiply(idempotent(nu), x_gen(k, nu)) - x_gen(k, nu),
                  tag("x_k e(nu) = e(nu) x_k", nu, k), &rep);
    }
    for (int l = 0; l + 1 < n; ++l) {
      auto snu = nu;
      std::swap(snu[l], snu[l + 1]);
      expect_zero(ctx,
                  ctx.multiply(idempotent(snu), tau_gen(l, nu)) -
                      tau_gen(l, nu),
                  tag("tau_l e(nu) = e(s_l nu) tau_l", nu, l), &rep);
      // tau_l^2 e(nu) = Q_{nu_l, nu_{l+1}}(x_l, x_{l+1}) e(nu)
      expect_zero(ctx,
                  ctx.multiply(tau_gen(l, snu), tau_gen(l, nu)) -
                      ctx.q_element(l, l + 1, {nu}),
                  tag("tau^2 = Q", nu, l), &rep);
      for (int m = 0; m < n; ++m) {
        const int sm = (m == l) ? l + 1 : (m == l + 1 ? l : m);
        KLRElement lhs = ctx.multiply(tau_gen(l, nu), x_gen(m, nu)) -
                         ctx.multiply(x_gen(sm, snu), tau_gen(l, nu));
        if (nu[l] == nu[l + 1]) {
          if (m == l) lhs += idempotent(nu);
          if (m == l + 1) lhs -= idempotent(nu);
        }
        expect_zero(ctx, lhs, tag("tau_l x_m twist", nu, l, m), &rep);
      }
      for (int l2 = l + 2; l2 + 1 < n; ++l2) {
        auto s2nu = nu;
        std::swap(s2nu[l2], s2nu[l2 + 1]);
        expect_zero(ctx,
                    ctx.multiply(tau_gen(l, s2nu), tau_gen(l2, nu)) -
                        ctx.multiply(tau_gen(l2, snu), tau_gen(l, nu)),
                    tag("far tau commute", nu, l, l2), &rep);
      }
    }
    for (int l = 0; l + 2 < n; ++l) {
      // letters l, l+1: tau_{l+2} tau_{l+1} tau_{l+2} vs shifted, 1-based
      auto chain = [&](std::initializer_list<int> letters) {
        KLRElement cur = idempotent(nu);
        std::vector<int> ls(letters);
        for (auto it = ls.rbegin(); it != ls.rend(); ++it)
          cur = ctx.lmul_tau(*it, cur);
        return cur;
      };
      KLRElement lhs = chain({l + 1, l, l + 1}) - chain({l, l + 1, l});
      KLRElement rhs = ctx.qbar_element(l, l + 1, l + 2, {nu});
      expect_zero(ctx, lhs - rhs, tag("braid + Qbar", nu, l), &rep);
    }
  }
  // Sum of idempotents is a two-sided unit on generators.
  KLRElement unit = idempotent_sum(seqs);
  expect_zero(ctx, ctx.multiply(unit, unit) - unit, "unit idempotent", &rep);
  for (int k = 0; k < n; ++k) {
    KLRElement xk;
    for (const auto& nu : seqs) xk += x_gen(k, nu);
    expect_zero(ctx, ctx.multiply(unit, xk) - xk, "unit absorbs x", &rep);
    expect_zero(ctx, ctx.multiply(xk, unit) - xk, "x absorbs unit", &rep);
  }
  return rep;
}

namespace {

PolyVector act_gen_chain(const KLRContext& ctx,
                         const std::vector<KLRElement>& gens,
                         const PolyVector& v) {
  PolyVector cur = v;
  for (auto it = gens.rbegin(); it != gens.rend(); ++it)
    cur = act(ctx, *it, cur);
  return cur;
}

} // namespace

RelationReport polyrep_relation_suite(const KLRContext& ctx, int n) {
  RelationReport rep;
  const int rank = static_cast<int>(ctx.datum().rank());
  const auto seqs = all_sequences(rank, n);

  std::vector<std::vector<int>> exps{{}};
  for (int k = 0; k < n; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& s : exps)
      for (int v = 0; v <= 2; ++v) {
        auto t = s;
        t.push_back(v);
        next.push_back(std::move(t));
      }
    exps = std::move(next);
  }

  std::vector<PolyVector> probes;
  for (const auto& nu : seqs)
    for (const auto& ex : exps) {
      PolyVector v;
      v.add(nu, Poly::monomial(ex, Rational(1)));
      probes.push_back(std::move(v));
    }

  auto check = [&](const std::vector<KLRElement>& lhs_chain,
                   const std::vector<KLRElement>& rhs_chain,
                   const KLRElement& extra, const std::string& what) {
    for (const auto& v : probes) {
      ++rep.checked;
      PolyVector a = act_gen_chain(ctx, lhs_chain, v);
      PolyVector b =
          rhs_chain.empty() ? PolyVector{} : act_gen_chain(ctx, rhs_chain, v);
      if (!extra.is_zero()) {
        PolyVector c = act(ctx, extra, v);
        for (const auto& [nu, p] : c.comps) b.add(nu, p);
      }
      if (!(a == b)) {
        rep.violations.push_back(what);
        return;
      }
    }
  };

  KLRElement zero;
  for (const auto& nu : seqs) {
    for (int l = 0; l + 1 < n; ++l) {
      auto snu = nu;
      std::swap(snu[l], snu[l + 1]);
      check({tau_gen(l, snu), tau_gen(l, nu)}, {}, ctx.q_element(l, l + 1, {nu}),
            "polyrep tau^2 = Q");
      for (int m = 0; m < n; ++m) {
        const int sm = (m == l) ? l + 1 : (m == l + 1 ? l : m);
        KLRElement extra;
        if (nu[l] == nu[l + 1]) {
          if (m == l) extra -= idempotent(nu);
          if (m == l + 1) extra += idempotent(nu);
        }
        check({tau_gen(l, nu), x_gen(m, nu)}, {x_gen(sm, snu), tau_gen(l, nu)},
              extra, "polyrep tau x twist");
      }
    }
    for (int l = 0; l + 2 < n; ++l) {
      auto s = [&](std::vector<int> word) {
        std::vector<KLRElement> chain;
        auto cur = nu;
        std::vector<std::vector<int>> seqs_along;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
          seqs_along.push_back(cur);
          std::swap(cur[*it], cur[*it + 1]);
        }
        for (std::size_t k = 0; k < word.size(); ++k)
          chain.push_back(
              tau_gen(word[k], seqs_along[word.size() - 1 - k]));
        return chain;
      };
      check(s({l + 1, l, l + 1}), s({l, l + 1, l}),
            ctx.qbar_element(l, l + 1, l + 2, {nu}), "polyrep braid + Qbar");
    }
  }
  return rep;
}

} // namespace klr
