#include "klr/mackey.hpp"

#include <map>
#include <sstream>

#include "klr/exactla.hpp"
#include "klr/graded.hpp"

namespace klr {

namespace {

// Monomials of degree d grouped by left sequence, with an optional filter on
// the right sequence's last label.
using ByLeftSeq = std::map<std::vector<int>, std::vector<Monomial>>;

ByLeftSeq group_by_left(const KLRContext& ctx,
                        const std::vector<std::vector<int>>& seqs, int d,
                        int right_last) {
  ByLeftSeq out;
  for (auto& m : monomials_of_degree(ctx, seqs, d)) {
    if (right_last >= 0 && (m.nu.empty() || m.nu.back() != right_last))
      continue;
    out[m.left_seq()].push_back(m);
  }
  return out;
}

} // namespace

MackeyReport verify_mackey(const KLRContext& ctx, const RootVector& beta,
                           int i, int D) {
  MackeyReport rep;
  rep.max_degree = D;
  const auto& dat = ctx.datum();
  const int n = beta.height();
  const int wi = dat.bilinear(i, i);

  const auto seqsT = enumerate_Ibeta(dat, beta.plus_alpha(i));
  const auto seqsR = enumerate_Ibeta(dat, beta);
  const auto bm = beta.minus_alpha(i);

  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.failures.push_back(msg);
  };

  const int dminR = tau_degree_range(ctx, seqsR).first;
  const int dminT = tau_degree_range(ctx, seqsT).first;

  // Coset generators a_{j,t,mu} = x_j^t tau_{j}..tau_{n-1} e(mu,i), 1-based
  // j in 1..n: the minimal representatives u_j with u_j(n) = j.  Their last
  // x-strand colour is i, so deg a = t (a_i|a_i) + deg tau_{u_j} e(mu,i).
  std::vector<std::vector<int>> uword(n + 1);
  std::vector<Perm> uperm(n + 1, Perm::identity(n));
  for (int j = 1; j <= n; ++j) {
    for (int l = j - 1; l <= n - 2; ++l) uword[j].push_back(l);
    uperm[j] = Perm::from_word(n, uword[j]);
  }
  const std::vector<int> zeros(n, 0);
  auto tdeg = [&](int j, const std::vector<int>& nu) {
    return ctx.degree(Monomial{zeros, uperm[j], nu});
  };
  std::map<std::tuple<int, int, std::vector<int>>, KLRElement> acache;
  auto coset_gen = [&](int j, int t, const std::vector<int>& nu) -> const KLRElement& {
    auto key = std::make_tuple(j, t, nu);
    auto it = acache.find(key);
    if (it != acache.end()) return it->second;
    KLRElement el = idempotent(nu);
    for (auto w = uword[j].rbegin(); w != uword[j].rend(); ++w)
      el = ctx.lmul_tau(*w, el);
    if (t > 0) el = ctx.lmul_x(j - 1, el, t);
    return acache.emplace(key, std::move(el)).first->second;
  };

  std::vector<std::vector<int>> seqsB;
  int dminB = 0, mintdeg = 0;
  if (bm && n >= 1) {
    seqsB = enumerate_Ibeta(dat, *bm);
    dminB = tau_degree_range(ctx, seqsB).first;
    for (int j = 1; j <= n; ++j)
      for (const auto& mu : seqsB) {
        auto nu = mu;
        nu.push_back(i);
        mintdeg = std::min(mintdeg, tdeg(j, nu));
      }

    // Freeness certificate: in every degree feeding the check below, the
    // products a_{j,t,mu} c over a basis of R(beta - a_i) count and span
    // R(beta) e(beta - a_i, i) exactly, so that module is free on the a's.
    const int DM = D + wi - dminR;
    for (int dM = dminR; dM <= DM; ++dM) {
      std::map<Monomial, int> col;
      for (auto& m : monomials_of_degree(ctx, seqsR, dM))
        if (m.nu.back() == i) col.emplace(m, static_cast<int>(col.size()));
      Echelon ech;
      int count = 0;
      std::map<int, ByLeftSeq> bmons;
      for (int j = 1; j <= n; ++j)
        for (int t = 0; t * wi + mintdeg + dminB <= dM; ++t)
          for (const auto& mu : seqsB) {
            auto nu = mu;
            nu.push_back(i);
            const int dC = dM - t * wi - tdeg(j, nu);
            if (dC < dminB) continue;
            auto bit = bmons.find(dC);
            if (bit == bmons.end())
              bit = bmons.emplace(dC, group_by_left(ctx, seqsB, dC, -1)).first;
            auto cit = bit->second.find(mu);
            if (cit == bit->second.end()) continue;
            for (const auto& c : cit->second) {
              ++count;
              auto prod = ctx.multiply(coset_gen(j, t, nu),
                                       embed_append(KLRElement::single(c), {i}));
              SparseVec v;
              for (const auto& [m, cf] : prod.terms()) v[col.at(m)] = cf;
              ech.insert(std::move(v));
            }
          }
      const int dim = static_cast<int>(col.size());
      if (count != dim || ech.rank() != dim) {
        std::ostringstream os;
        os << "freeness of the left factor fails in degree " << dM << ": "
           << count << " products of rank " << ech.rank() << " against dimension "
           << dim;
        fail(os.str());
      }
    }
  }

  // Main check: in each degree d <= D the images of the direct-sum basis
  // (coset generator) tau_n b  and  x_{n+1}^m r  count and span the slice
  // e(beta,i) R(beta + a_i) e(beta,i) exactly.
  for (int d = dminT; d <= D; ++d) {
    std::map<Monomial, int> col;
    for (auto& m : monomials_of_degree(ctx, seqsT, d))
      if (m.nu.back() == i && m.left_seq().back() == i)
        col.emplace(m, static_cast<int>(col.size()));
    const int dim = static_cast<int>(col.size());
    rep.target_dims[d] = dim;
    Echelon ech;
    int count = 0;
    auto push = [&](const KLRElement& el) {
      ++count;
      SparseVec v;
      for (const auto& [m, cf] : el.terms()) v[col.at(m)] = cf;
      ech.insert(std::move(v));
    };

    // Polynomial summand k[x_{n+1}] (x) R(beta).
    for (int mexp = 0; d - mexp * wi >= dminR; ++mexp)
      for (auto& r : monomials_of_degree(ctx, seqsR, d - mexp * wi)) {
        auto el = embed_append(KLRElement::single(r), {i});
        if (mexp > 0) el = ctx.lmul_x(n, el, mexp);
        push(el);
      }

    // Crossing summand a_{j,t} tau_n b over b in e(beta - a_i, i) R(beta).
    if (bm && n >= 1) {
      std::map<int, ByLeftSeq> nmons;
      std::map<Monomial, KLRElement> tbcache;
      for (int j = 1; j <= n; ++j)
        for (int t = 0; t * wi + mintdeg - wi + dminR <= d; ++t)
          for (const auto& mu : seqsB) {
            auto nu = mu;
            nu.push_back(i);
            const int db = d + wi - t * wi - tdeg(j, nu);
            if (db < dminR) continue;
            auto bit = nmons.find(db);
            if (bit == nmons.end())
              bit = nmons.emplace(db, group_by_left(ctx, seqsR, db, -1)).first;
            auto lit = bit->second.find(nu);
            if (lit == bit->second.end()) continue;
            const auto a_emb = embed_append(coset_gen(j, t, nu), {i});
            for (const auto& b : lit->second) {
              auto tit = tbcache.find(b);
              if (tit == tbcache.end())
                tit = tbcache
                          .emplace(b, ctx.lmul_tau(
                                          n - 1,
                                          embed_append(KLRElement::single(b), {i})))
                          .first;
              push(ctx.multiply(a_emb, tit->second));
            }
          }
    }

    if (count != dim || ech.rank() != dim) {
      std::ostringstream os;
      os << "degree " << d << ": " << count << " basis images of rank "
         << ech.rank() << " against slice dimension " << dim;
      fail(os.str());
    }
  }

  return rep;
}

} // namespace klr
