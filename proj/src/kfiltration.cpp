#include "klr/kfiltration.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "klr/graded.hpp"

namespace klr {

namespace {

// e(beta,i^2) truncation: keep terms whose left sequence ends in (i,i).
KLRElement corner(const KLRElement& e, int i) {
  KLRElement out;
  for (const auto& [m, c] : e.terms()) {
    const auto L = m.left_seq();
    const int n2 = m.n();
    if (n2 >= 2 && L[n2 - 2] == i && L[n2 - 1] == i) out.add_term(m, c);
  }
  return out;
}

KLRElement emb1(const KLRElement& e, int i) { return embed_append(e, {i}); }
KLRElement emb2(const KLRElement& e, int i) { return embed_append(e, {i, i}); }

void add_to(KElem& out, const std::pair<int, int>& key, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = out.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

void axpy_elem(KElem& out, const Rational& c, const KElem& v) {
  for (const auto& [key, t] : v) add_to(out, key, c * t);
}

// The full crossing chain tau_{n+1}..tau_1 x^La tau_1..tau_{n+1} e(beta,i^2)
// as an element of the corner, summed over I^beta.
KLRElement crossing_chain(const KModule& K) {
  const auto& ctx = K.tower().ctx();
  const int n = K.strands();
  const int i = K.color();
  const auto seqs2 =
      enumerate_Ibeta(ctx.datum(), K.beta().plus_alpha(i, 2));
  const KLRElement seed = cyclotomic_seed(ctx, K.tower().lambda(), seqs2);
  KLRElement total;
  for (const auto& nu : enumerate_Ibeta(ctx.datum(), K.beta())) {
    std::vector<int> s = nu;
    s.push_back(i);
    s.push_back(i);
    KLRElement c = idempotent(s);
    for (int a = n + 1; a >= 1; --a) c = ctx.lmul_tau(a - 1, c);
    c = ctx.multiply(seed, c);
    for (int l = 1; l <= n + 1; ++l) c = ctx.lmul_tau(l - 1, c);
    total += c;
  }
  return corner(total, i);
}

} // namespace

KModule::KModule(const AlgebraTower& tower, RootVector beta, int i, int trunc)
    : tower_(&tower), beta_(std::move(beta)), i_(i) {
  const auto& ctx = tower.ctx();
  n_ = beta_.height();
  lam_ = tower.lambda_i(beta_, i_);
  p_ = beta_.coeff.at(i_);
  trunc_ = trunc >= 0 ? trunc : lam_ + 2 * p_ + 4;
  wi_ = ctx.datum().bilinear(i_, i_);
  ap_ = &tower.at(beta_.plus_alpha(i_));
  seqs2_ = enumerate_Ibeta(ctx.datum(), beta_.plus_alpha(i_, 2));
  for (const auto& nu : seqs2_) xlast_ += x_gen(n_ + 1, nu);
  apmin_ = tau_degree_range(ctx, ap_->sequences()).first;
}

int KModule::gen_index(int j, int t, const std::vector<int>& mu) const {
  auto key = std::make_tuple(j, t, mu);
  auto it = gen_idx_.find(key);
  if (it != gen_idx_.end()) return it->second;
  const int summand = j <= n_ ? 1 : (j == n_ + 1 ? 2 : 3);
  const int id = static_cast<int>(gens_.size());
  gens_.push_back({j, t, mu, summand, deg0(j, mu) + t * wi_});
  gen_idx_.emplace(std::move(key), id);
  return id;
}

int KModule::deg0(int j, const std::vector<int>& mu) const {
  auto key = std::make_pair(j, mu);
  auto it = deg0_.find(key);
  if (it != deg0_.end()) return it->second;
  std::vector<int> cur = mu;
  cur.push_back(i_);
  const auto& dat = tower_->ctx().datum();
  int d = 0;
  for (int l = n_ + 1; l >= j; --l) {
    d -= dat.bilinear(cur[l - 1], cur[l]);
    std::swap(cur[l - 1], cur[l]);
  }
  deg0_.emplace(std::move(key), d);
  return d;
}

KLRElement KModule::gen_element(int g) const {
  auto it = gen_elem_.find(g);
  if (it != gen_elem_.end()) return it->second;
  const auto& ctx = tower_->ctx();
  const KGen& gn = gens_.at(g);
  std::vector<int> s = gn.mu;
  s.push_back(i_);
  KLRElement e = idempotent(s);
  for (int l = n_ + 1; l >= gn.j; --l) e = ctx.lmul_tau(l - 1, e);
  if (gn.t > 0) e = ctx.lmul_x(gn.j - 1, e, gn.t);
  e = corner(e, i_);
  if (e.is_zero())
    throw std::logic_error("generator element vanished in the corner");
  gen_elem_.emplace(g, e);
  return e;
}

const KModule::DegData& KModule::degree_data(int d) const {
  auto found = by_deg_.find(d);
  if (found != by_deg_.end()) return found->second;
  const auto& ctx = tower_->ctx();
  DegData& dd = by_deg_[d];
  for (const auto& m : monomials_of_degree(ctx, seqs2_, d)) {
    if (m.nu[n_ + 1] != i_) continue;
    const auto L = m.left_seq();
    if (L[n_] != i_ || L[n_ + 1] != i_) continue;
    dd.col_of[m] = static_cast<int>(dd.cols.size());
    dd.cols.push_back(m);
  }
  for (const auto& mu : ap_->sequences()) {
    if (mu[n_] != i_) continue;
    const bool ends_ii = n_ >= 1 && mu[n_ - 1] == i_;
    for (int j = 1; j <= n_ + 2; ++j) {
      if (j <= n_ && !ends_ii) continue;
      const int d0 = deg0(j, mu);
      for (int t = 0;; ++t) {
        const int dm = d - d0 - t * wi_;
        if (dm < apmin_) break;
        auto mi = ap_monos_.find(dm);
        if (mi == ap_monos_.end())
          mi = ap_monos_
                   .emplace(dm, monomials_of_degree(ctx, ap_->sequences(), dm))
                   .first;
        for (const auto& m : mi->second) {
          if (m.left_seq() != mu) continue;
          dd.pgen.push_back(gen_index(j, t, mu));
          dd.pmono.push_back(m);
        }
      }
    }
  }
  for (std::size_t k = 0; k < dd.pgen.size(); ++k) {
    const KLRElement prod = ctx.multiply(
        gen_element(dd.pgen[k]), emb1(KLRElement::single(dd.pmono[k]), i_));
    SparseVec v;
    for (const auto& [m, c] : prod.terms()) v[dd.col_of.at(m)] = c;
    if (dd.ech.insert(std::move(v)) < 0)
      throw std::runtime_error(
          "free decomposition certificate failed: dependent products at "
          "degree " +
          std::to_string(d));
  }
  if (dd.ech.rank() != static_cast<int>(dd.cols.size()))
    throw std::runtime_error(
        "free decomposition certificate failed: products do not span degree " +
        std::to_string(d));
  return dd;
}

const DenseVec& KModule::class_of(const Monomial& m) const {
  auto it = class_cache_.find(m);
  if (it != class_cache_.end()) return it->second;
  return class_cache_.emplace(m, ap_->reduce(KLRElement::single(m)))
      .first->second;
}

KElem KModule::decompose(const KLRElement& w) const {
  const auto& ctx = tower_->ctx();
  std::map<int, KLRElement> byd;
  for (const auto& [m, c] : w.terms()) byd[ctx.degree(m)].add_term(m, c);
  KElem out;
  for (const auto& [d, piece] : byd) {
    const DegData& dd = degree_data(d);
    SparseVec v;
    for (const auto& [m, c] : piece.terms()) {
      auto it = dd.col_of.find(m);
      if (it == dd.col_of.end())
        throw std::runtime_error("element escapes the two-sided column");
      v[it->second] = c;
    }
    std::map<int, Rational> combo;
    const SparseVec r = dd.ech.reduce(v, &combo);
    if (!r.empty())
      throw std::logic_error("certified spanning left a residual");
    for (const auto& [k, c] : combo) {
      const DenseVec& cls = class_of(dd.pmono[k]);
      const int g = dd.pgen[k];
      for (std::size_t s = 0; s < cls.size(); ++s)
        add_to(out, {g, static_cast<int>(s)}, c * cls[s]);
    }
  }
  return out;
}

KLRElement KModule::rep(const std::pair<int, int>& key) const {
  return tower_->ctx().multiply(gen_element(key.first),
                                emb1(ap_->basis_rep(key.second), i_));
}

KLRElement KModule::element(const KElem& v) const {
  KLRElement out;
  for (const auto& [key, c] : v) out += rep(key) * c;
  return out;
}

int KModule::layer(const std::pair<int, int>& key) const {
  const KGen& g = gens_.at(key.first);
  if (g.summand == 1) return -1;
  return g.summand == 2 ? g.t - 1 : g.t;
}

int KModule::min_layer(const KElem& v) const {
  int m = -2;
  for (const auto& [key, c] : v) m = std::max(m, layer(key));
  return m;
}

std::vector<std::pair<int, int>> KModule::block(int summand, int t) const {
  std::vector<std::pair<int, int>> out;
  if (t < 0) return out;
  const int j = summand == 2 ? n_ + 1 : n_ + 2;
  for (const auto& mu : ap_->sequences()) {
    if (mu[n_] != i_) continue;
    const int g = gen_index(j, t, mu);
    for (int s = 0; s < ap_->dim(); ++s)
      if (ap_->basis()[s].left_seq() == mu) out.emplace_back(g, s);
  }
  return out;
}

std::vector<std::pair<int, int>> KModule::s_block(int tcap) const {
  std::vector<std::pair<int, int>> out;
  for (int t = 0; t <= tcap; ++t)
    for (int j = 1; j <= n_; ++j)
      for (const auto& mu : ap_->sequences()) {
        if (mu[n_] != i_ || n_ < 1 || mu[n_ - 1] != i_) continue;
        const int g = gen_index(j, t, mu);
        for (int s = 0; s < ap_->dim(); ++s)
          if (ap_->basis()[s].left_seq() == mu) out.emplace_back(g, s);
      }
  return out;
}

std::vector<std::pair<int, int>> KModule::fil_keys(int k, int tcap) const {
  std::vector<std::pair<int, int>> out;
  if (k < -1) return out;
  out = s_block(tcap);
  for (int t = 0; t <= k + 1; ++t)
    for (const auto& key : block(2, t)) out.push_back(key);
  for (int t = 0; t <= k; ++t)
    for (const auto& key : block(3, t)) out.push_back(key);
  return out;
}

const KElem& KModule::right_x(const std::pair<int, int>& key) const {
  auto it = rx_cache_.find(key);
  if (it != rx_cache_.end()) return it->second;
  const KElem v = decompose(tower_->ctx().multiply(rep(key), xlast_));
  return rx_cache_.emplace(key, v).first->second;
}

KElem KModule::right_x(const KElem& v) const {
  KElem out;
  for (const auto& [key, c] : v) axpy_elem(out, c, right_x(key));
  return out;
}

KElem KModule::right_x_pow(const KElem& v, int k) const {
  KElem out = v;
  for (int j = 0; j < k; ++j) out = right_x(out);
  return out;
}

KElem KModule::left_mul(const KLRElement& g,
                        const std::pair<int, int>& key) const {
  return decompose(tower_->ctx().multiply(emb2(g, i_), rep(key)));
}

// ----------------------------------------------------------- filtration

GrinReport verify_grin(const KModule& K, int cap) {
  GrinReport r;
  if (K.zero()) {
    r.bimodule_ok = r.shift_ok = r.forms_agree = r.graded_iso_ok =
        r.kernel_ok = r.ok = true;
    r.detail = "zero module: all layers vanish";
    return r;
  }
  if (cap + 2 > K.trunc())
    throw std::runtime_error("truncation too small for the requested cap");
  const auto& ctx = K.tower().ctx();
  const int n = K.strands();
  const int i = K.color();

  std::vector<std::pair<int, int>> samples = K.s_block(std::min(cap, 2));
  for (int t = 0; t <= cap + 1; ++t)
    for (const auto& key : K.block(2, t)) samples.push_back(key);
  for (int t = 0; t <= cap; ++t)
    for (const auto& key : K.block(3, t)) samples.push_back(key);

  // Layer stability under the left action of the algebra at beta.
  std::vector<KLRElement> lgens;
  const auto seqs0 = enumerate_Ibeta(ctx.datum(), K.beta());
  for (int k = 0; k < n; ++k) {
    KLRElement g;
    for (const auto& nu : seqs0) g += x_gen(k, nu);
    lgens.push_back(g);
  }
  for (int l = 0; l + 1 < n; ++l) {
    KLRElement g;
    for (const auto& nu : seqs0) g += tau_gen(l, nu);
    lgens.push_back(g);
  }
  r.bimodule_ok = true;
  for (const auto& g : lgens)
    for (const auto& key : samples)
      r.bimodule_ok &= K.min_layer(K.left_mul(g, key)) <= K.layer(key);

  r.shift_ok = true;
  for (const auto& key : samples)
    r.shift_ok &= K.min_layer(K.right_x(key)) <= K.layer(key) + 1;

  // The two presentations of a layer agree: the single crossing times the
  // (k+1)-st last-strand power stays in layer k.
  r.forms_agree = true;
  for (int k = -1; k <= cap; ++k)
    for (const auto& mu : K.up().sequences()) {
      if (mu[n] != i) continue;
      std::vector<int> s = mu;
      s.push_back(i);
      KLRElement head = ctx.lmul_tau(n, x_gen(n + 1, s, k + 1));
      head = corner(head, i);
      for (int slot = 0; slot < K.up().dim(); ++slot) {
        if (K.up().basis()[slot].left_seq() != mu) continue;
        const KLRElement w = ctx.multiply(
            head, embed_append(K.up().basis_rep(slot), {i}));
        r.forms_agree &= K.min_layer(K.decompose(w)) <= k;
      }
    }

  // Right multiplication is bijective between consecutive graded pieces.
  r.graded_iso_ok = true;
  for (int k = 0; k + 1 <= cap && r.graded_iso_ok; ++k) {
    auto dom = K.block(3, k);
    for (const auto& key : K.block(2, k + 1)) dom.push_back(key);
    auto cod = K.block(3, k + 1);
    for (const auto& key : K.block(2, k + 2)) cod.push_back(key);
    if (dom.size() != cod.size()) {
      r.graded_iso_ok = false;
      r.detail = "graded pieces differ in size at layer " + std::to_string(k);
      break;
    }
    std::map<std::pair<int, int>, int> idx;
    for (std::size_t a = 0; a < cod.size(); ++a)
      idx[cod[a]] = static_cast<int>(a);
    Echelon ech;
    int rank = 0;
    for (const auto& key : dom) {
      SparseVec col;
      for (const auto& [kk, c] : K.right_x(key)) {
        if (K.layer(kk) <= k) continue;
        auto it = idx.find(kk);
        if (it == idx.end()) {
          r.graded_iso_ok = false;
          r.detail = "layer jump above the expected piece";
          break;
        }
        col[it->second] = c;
      }
      if (!r.graded_iso_ok) break;
      if (ech.insert(std::move(col)) >= 0) ++rank;
    }
    r.graded_iso_ok &= rank == static_cast<int>(dom.size());
  }

  // The kernel of the shift out of layer -1 lies inside the doubly-crossed
  // summand.  The shift of that summand escapes layer -1 only through the
  // power-zero polynomial block (the crossing-shift identity trades the
  // last crossing pair for a lower crossing acting through the quotient),
  // so it suffices that the single-crossing part of layer -1 injects into
  // the graded piece through its power-one single-crossing components.
  r.kernel_ok = true;
  for (const auto& key : K.s_block(std::min(cap, 2)))
    for (const auto& [kk, c] : K.right_x(key))
      if (K.layer(kk) > -1)
        r.kernel_ok &= K.gen(kk.first).summand == 3 && K.gen(kk.first).t == 0;
  {
    const auto b21 = K.block(2, 1);
    std::map<std::pair<int, int>, int> idx;
    for (std::size_t a = 0; a < b21.size(); ++a)
      idx[b21[a]] = static_cast<int>(a);
    Echelon ech;
    int rank = 0;
    for (const auto& key : K.block(2, 0)) {
      SparseVec col;
      for (const auto& [kk, c] : K.right_x(key)) {
        auto it = idx.find(kk);
        if (it != idx.end()) col[it->second] = c;
      }
      if (ech.insert(std::move(col)) >= 0) ++rank;
    }
    r.kernel_ok &= rank == static_cast<int>(K.block(2, 0).size());
  }

  r.ok = r.bimodule_ok && r.shift_ok && r.forms_agree && r.graded_iso_ok &&
         r.kernel_ok;
  if (r.ok) r.detail = "layers 0.." + std::to_string(cap);
  return r;
}

bool check_grind(const KModule& K, int cap, int nrandom, unsigned seed) {
  if (K.zero()) return true;
  std::vector<KElem> us;
  std::vector<std::pair<int, int>> pool;
  for (int k = -1; k <= cap; ++k) {
    std::vector<std::pair<int, int>> keys;
    if (k == -1) {
      keys = K.s_block(2);
      for (const auto& key : K.block(2, 0)) keys.push_back(key);
    } else {
      keys = K.block(3, k);
      for (const auto& key : K.block(2, k + 1)) keys.push_back(key);
    }
    for (const auto& key : keys) {
      us.push_back({{key, Rational(1)}});
      pool.push_back(key);
    }
  }
  std::mt19937 rng(seed);
  if (!pool.empty()) {
    std::uniform_int_distribution<int> pick(
        0, static_cast<int>(pool.size()) - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int a = 0; a < nrandom; ++a) {
      KElem u;
      const int nterms = 2 + a % 3;
      for (int b = 0; b < nterms; ++b) {
        int c = coef(rng);
        if (c == 0) c = 1;
        add_to(u, pool[pick(rng)], Rational(c));
      }
      if (!u.empty()) us.push_back(std::move(u));
    }
  }
  std::uniform_int_distribution<int> fc(-2, 2);
  for (const auto& u : us)
    for (int rdeg = 1; rdeg <= 2; ++rdeg) {
      KElem uf = K.right_x_pow(u, rdeg);
      for (int j = 0; j < rdeg; ++j)
        axpy_elem(uf, Rational(fc(rng)), K.right_x_pow(u, j));
      const int m = K.min_layer(uf);
      if (m >= rdeg - 1 && K.min_layer(u) > m - rdeg) return false;
    }
  return true;
}

CongruenceReport check_intertwiner_congruence(const KModule& K) {
  CongruenceReport rep;
  const auto& ctx = K.tower().ctx();
  const int n = K.strands();
  const int i = K.color();
  const auto seqs2 = enumerate_Ibeta(ctx.datum(), K.beta().plus_alpha(i, 2));
  const KLRElement seed = cyclotomic_seed(ctx, K.tower().lambda(), seqs2);
  std::vector<KLRElement> phis;
  for (int l = 0; l <= n; ++l) phis.push_back(ctx.intertwiner(l, seqs2));
  const int ell_i = K.tower().lambda().ell.at(i);
  rep.first_ok = rep.second_ok = true;
  for (const auto& nu : enumerate_Ibeta(ctx.datum(), K.beta())) {
    std::vector<int> s = nu;
    s.push_back(i);
    s.push_back(i);
    KLRElement base = idempotent(s);
    for (int a = n + 1; a >= 1; --a) base = ctx.multiply(phis[a - 1], base);
    base = ctx.multiply(seed, base);
    for (int l = 1; l <= n + 1; ++l) base = ctx.lmul_tau(l - 1, base);
    base = corner(base, i);

    KLRElement lhs = base;
    for (int a = 1; a <= n; ++a)
      if (nu[a - 1] == i)
        lhs = ctx.multiply(lhs, x_gen(a - 1, s) - x_gen(n + 1, s));
    KLRElement rhs = idempotent(s);
    for (int a = 1; a <= n; ++a)
      if (nu[a - 1] != i)
        rhs = ctx.multiply(rhs, ctx.q_element(n + 1, a - 1, {s}));
    if (ell_i > 0) rhs = ctx.lmul_x(n + 1, rhs, ell_i);
    rhs = corner(ctx.lmul_tau(n, rhs), i);
    // congruence: lhs == -rhs modulo the bottom layer
    rep.first_ok &= K.min_layer(K.decompose(lhs + rhs)) <= -1;

    KLRElement chain = idempotent(s);
    for (int a = n + 1; a >= 1; --a) chain = ctx.lmul_tau(a - 1, chain);
    chain = ctx.multiply(seed, chain);
    for (int l = 1; l <= n + 1; ++l) chain = ctx.lmul_tau(l - 1, chain);
    chain = corner(chain, i);
    KLRElement rhs2 = chain;
    for (int k = 1; k <= n + 1; ++k)
      if (k == n + 1 || nu[k - 1] == i)
        rhs2 = ctx.multiply(rhs2, x_gen(n + 1, s) - x_gen(k - 1, s));
    rep.second_ok &= K.decompose(base - corner(rhs2, i)).empty();
  }
  rep.detail =
      "elements read inside the two-sided corner; the chained product "
      "factor is taken in the last-strand variable";
  return rep;
}

PropMainReport verify_prop_main(const KModule& K) {
  PropMainReport r;
  const int lam = K.lambda_i(), p = K.pcount();
  r.applicable = lam + 2 * p >= 0;
  if (!r.applicable) {
    r.detail = "needs lambda_i + 2p >= 0";
    return r;
  }
  if (K.zero()) {
    r.ok = true;
    r.c = 1;
    r.detail = "zero module: congruence vacuous";
    return r;
  }
  const auto& ctx = K.tower().ctx();
  const int n = K.strands(), i = K.color();
  KLRElement lhs;
  KLRElement xpow;
  for (const auto& nu : enumerate_Ibeta(ctx.datum(), K.beta())) {
    std::vector<int> s = nu;
    s.push_back(i);
    s.push_back(i);
    lhs += ctx.lmul_tau(n, x_gen(n + 1, s, lam + 2 * p + 1));
    xpow += x_gen(n + 1, s, 2 * p + 2);
  }
  const KLRElement rhs = ctx.multiply(crossing_chain(K), xpow);
  const KElem dl = K.decompose(corner(lhs, i));
  const KElem dr = K.decompose(corner(rhs, i));
  const int threshold = lam + 2 * p - 1;
  KElem dlh, drh;
  for (const auto& [key, c] : dl)
    if (K.layer(key) > threshold) dlh[key] = c;
  for (const auto& [key, c] : dr)
    if (K.layer(key) > threshold) drh[key] = c;
  if (drh.empty() && dlh.empty()) {
    // both sides already lie in the modulus; any nonzero scalar works
    r.ok = true;
    r.c = 1;
    r.detail = "both sides vanish above the cut";
    return r;
  }
  if (drh.empty() || dlh.empty()) {
    r.detail = "one side vanishes above the cut; no nonzero scalar exists";
    return r;
  }
  const auto& [key0, v0] = *drh.begin();
  r.c = dlh.count(key0) ? dlh.at(key0) / v0 : Rational(0);
  if (r.c == 0) {
    r.detail = "sides have disjoint support above the cut";
    return r;
  }
  KElem diff = dlh;
  axpy_elem(diff, -r.c, drh);
  r.ok = diff.empty();
  r.detail = r.ok ? "scalar read as a nonzero rational (ground field Q)"
                  : "supports above the cut are not proportional";
  return r;
}

PEReport check_PE(const KModule& K, int tcap) {
  PEReport r;
  const auto& ctx = K.tower().ctx();
  const int n = K.strands(), i = K.color();
  const auto& ap = K.up();

  // Projection two steps up kills the full crossing chain.
  const auto& app = K.tower().at(K.beta().plus_alpha(i, 2));
  {
    const DenseVec v = app.reduce(crossing_chain(K));
    r.p_vanishes = std::all_of(v.begin(), v.end(),
                               [](const Rational& c) { return c == 0; });
  }

  const auto bm = K.beta().minus_alpha(i);
  r.applicable = bm.has_value() && !K.zero();
  if (!r.applicable) {
    r.ok = r.p_vanishes;
    r.detail = "source module vanishes";
    return r;
  }

  // Domain: free generators of the algebra column at beta over the one
  // below, paired with basis slots one step up whose left sequence matches.
  struct DomElem {
    KLRElement u;
    int slot;
  };
  std::vector<DomElem> dom;
  for (const auto& mup : enumerate_Ibeta(ctx.datum(), *bm)) {
    std::vector<int> target = mup;
    target.push_back(i);
    target.push_back(i);
    for (int j = 1; j <= n; ++j)
      for (int t = 0; t <= tcap; ++t) {
        std::vector<int> s = mup;
        s.push_back(i);
        KLRElement u = idempotent(s);
        for (int l = n - 1; l >= j; --l) u = ctx.lmul_tau(l - 1, u);
        if (t > 0) u = ctx.lmul_x(j - 1, u, t);
        for (int slot = 0; slot < ap.dim(); ++slot)
          if (ap.basis()[slot].left_seq() == target)
            dom.push_back({u, slot});
      }
  }

  std::vector<KElem> pcols;
  r.image_ok = true;
  for (const auto& z : dom) {
    const KLRElement w = ctx.multiply(
        emb2(z.u, i),
        ctx.lmul_tau(n - 1,
                     ctx.lmul_tau(n, emb1(ap.basis_rep(z.slot), i))));
    KElem pz = K.decompose(w);
    for (const auto& [key, c] : pz)
      r.image_ok &= K.gen(key.first).summand == 1;
    pcols.push_back(std::move(pz));
  }

  std::map<std::pair<int, int>, int> sidx;
  auto index_of = [&](const std::pair<int, int>& key) {
    return sidx.emplace(key, static_cast<int>(sidx.size())).first->second;
  };
  Echelon span;
  int rank = 0;
  for (const auto& col : pcols) {
    SparseVec v;
    for (const auto& [key, c] : col) v[index_of(key)] = c;
    if (span.insert(std::move(v)) >= 0) ++rank;
  }
  r.injective = rank == static_cast<int>(dom.size());

  r.span_ok = true;
  for (const auto& key : K.s_block(std::max(0, tcap - 1))) {
    auto it = sidx.find(key);
    if (it == sidx.end()) {
      r.span_ok = false;
      break;
    }
    r.span_ok &= span.contains({{it->second, Rational(1)}});
  }

  // P(z) x = P(z (x (x) 1)) + single crossing of the product class + the
  // polynomial part of the crossed product class, on every basis tensor.
  KLRElement xr;
  for (const auto& rho : enumerate_Ibeta(ctx.datum(), *bm)) {
    std::vector<int> s = rho;
    s.push_back(i);
    xr += x_gen(n - 1, s);
  }
  r.derivative_ok = true;
  std::vector<DenseVec> etau;  // multiplication after the inner crossing
  for (std::size_t a = 0; a < dom.size(); ++a) {
    const auto& z = dom[a];
    const KElem lhs = K.right_x(pcols[a]);
    const KLRElement up = ctx.multiply(z.u, xr);
    KElem rhsv = K.decompose(ctx.multiply(
        emb2(up, i),
        ctx.lmul_tau(n - 1,
                     ctx.lmul_tau(n, emb1(ap.basis_rep(z.slot), i)))));
    const DenseVec ez =
        ap.reduce(ctx.multiply(emb1(z.u, i), ap.basis_rep(z.slot)));
    for (std::size_t s2 = 0; s2 < ez.size(); ++s2) {
      if (ez[s2] == 0) continue;
      const auto L = ap.basis()[s2].left_seq();
      if (L[n] != i) continue;  // dies in the corner
      add_to(rhsv, {K.gen_index(n + 1, 0, L), static_cast<int>(s2)}, ez[s2]);
    }
    const DenseVec et = ap.reduce(ctx.multiply(
        emb1(z.u, i), ctx.lmul_tau(n - 1, ap.basis_rep(z.slot))));
    etau.push_back(et);
    for (std::size_t s2 = 0; s2 < et.size(); ++s2) {
      if (et[s2] == 0) continue;
      const auto L = ap.basis()[s2].left_seq();
      if (L[n] != i) continue;
      add_to(rhsv, {K.gen_index(n + 2, 0, L), static_cast<int>(s2)}, et[s2]);
    }
    r.derivative_ok &= lhs == rhsv;
  }

  // Kernel of z -> (P(z) x mod the bottom layer) kills the crossed product.
  std::map<std::pair<int, int>, int> hidx;
  std::vector<SparseVec> hcols;
  for (std::size_t a = 0; a < dom.size(); ++a) {
    SparseVec col;
    for (const auto& [key, c] : K.right_x(pcols[a])) {
      if (K.layer(key) <= -1) continue;
      col[hidx.emplace(key, static_cast<int>(hidx.size())).first->second] = c;
    }
    hcols.push_back(std::move(col));
  }
  r.kernel_counit_ok = true;
  for (const auto& kvec : column_kernel(hcols)) {
    DenseVec acc(ap.dim(), Rational(0));
    for (std::size_t a = 0; a < dom.size(); ++a)
      if (kvec[a] != 0)
        for (int s2 = 0; s2 < ap.dim(); ++s2)
          acc[s2] += kvec[a] * etau[a][s2];
    for (int s2 = 0; s2 < ap.dim(); ++s2)
      if (ap.basis()[s2].left_seq()[n] == i)
        r.kernel_counit_ok &= acc[s2] == 0;
  }

  r.ok = r.injective && r.image_ok && r.span_ok && r.derivative_ok &&
         r.kernel_counit_ok && r.p_vanishes;
  std::ostringstream os;
  os << "window: source powers <= " << tcap << ", spanning checked to "
     << std::max(0, tcap - 1);
  r.detail = os.str();
  return r;
}

bool check_eq10(const KLRContext& ctx, const RootVector& beta, int i) {
  const int n = beta.height();
  const auto bm = beta.minus_alpha(i);
  if (n < 1 || !bm) return true;
  for (const auto& nup : enumerate_Ibeta(ctx.datum(), *bm)) {
    std::vector<int> s = nup;
    s.push_back(i);
    s.push_back(i);
    s.push_back(i);
    const KLRElement e = idempotent(s);
    const KLRElement lhs =
        ctx.lmul_tau(n - 1, ctx.lmul_tau(n, x_gen(n + 1, s)));
    KLRElement rhs =
        ctx.lmul_x(n - 1, ctx.lmul_tau(n - 1, ctx.lmul_tau(n, e)));
    rhs += ctx.lmul_tau(n, e);
    rhs += ctx.lmul_tau(n - 1, e);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

} // namespace klr
