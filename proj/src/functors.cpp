#include "klr/functors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klr {

namespace {

KLRElement emb1(const KLRElement& e, int i) { return embed_append(e, {i}); }
KLRElement emb2(const KLRElement& e, int i) {
  return embed_append(e, {i, i});
}

DenseVec unit_vec(int n, int k) {
  DenseVec v(n, Rational(0));
  v[k] = 1;
  return v;
}

/// Keeps the monomials whose left sequence ends with the given suffix.
KLRElement left_suffix_filter(const KLRElement& e,
                              const std::vector<int>& suffix) {
  KLRElement out;
  for (const auto& [m, c] : e.terms()) {
    const auto ls = m.left_seq();
    if (ls.size() < suffix.size()) continue;
    bool ok = true;
    for (std::size_t k = 0; k < suffix.size(); ++k)
      if (ls[ls.size() - suffix.size() + k] != suffix[k]) ok = false;
    if (ok) out.add_term(m, c);
  }
  return out;
}

std::optional<DenseMat> invert(const DenseMat& m) {
  const int n = static_cast<int>(m.size());
  for (const auto& col : m)
    if (static_cast<int>(col.size()) != n) return std::nullopt;
  // rows of [m | I], eliminated in place
  std::vector<DenseVec> a(n, DenseVec(2 * n, Rational(0)));
  for (int j = 0; j < n; ++j)
    for (int r = 0; r < n; ++r) a[r][j] = m[j][r];
  for (int r = 0; r < n; ++r) a[r][n + r] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) { piv = r; break; }
    if (piv < 0) return std::nullopt;
    std::swap(a[col], a[piv]);
    const Rational inv = Rational(1) / a[col][col];
    for (auto& c : a[col]) c *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (int j = col; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  DenseMat out(n, DenseVec(n));
  for (int j = 0; j < n; ++j)
    for (int r = 0; r < n; ++r) out[j][r] = a[r][n + j];
  return out;
}

std::vector<KLRElement> algebra_generators(const CyclotomicAlgebra& a) {
  std::vector<KLRElement> gens;
  const int n = a.strands();
  for (const auto& nu : a.sequences()) gens.push_back(idempotent(nu));
  for (int k = 0; k < n; ++k) {
    KLRElement e;
    for (const auto& nu : a.sequences()) e += x_gen(k, nu);
    gens.push_back(e);
  }
  for (int l = 0; l + 1 < n; ++l) {
    KLRElement e;
    for (const auto& nu : a.sequences()) e += tau_gen(l, nu);
    gens.push_back(e);
  }
  return gens;
}

DenseMat restrict_matrix(const DenseMat& m, const Slice& s) {
  DenseMat out;
  for (int j : s.slots) {
    DenseVec col;
    col.reserve(s.slots.size());
    const DenseVec& full = m[j];
    // strictness: a slice-preserving operator may not leak outside
    for (int r = 0; r < static_cast<int>(full.size()); ++r)
      if (full[r] != 0 && !s.local.count(r))
        throw std::runtime_error("operator does not preserve the slice");
    for (int r2 : s.slots) col.push_back(full[r2]);
    out.push_back(std::move(col));
  }
  return out;
}

} // namespace

// ---------------------------------------------------------------- tower

AlgebraTower::AlgebraTower(const KLRContext& ctx, DominantWeight lambda,
                           CycloOptions opts)
    : ctx_(&ctx), lambda_(std::move(lambda)), opts_(opts) {}

const CyclotomicAlgebra& AlgebraTower::at(const RootVector& beta) const {
  auto it = cache_.find(beta);
  if (it == cache_.end())
    it = cache_
             .emplace(beta, std::make_unique<CyclotomicAlgebra>(
                                CyclotomicAlgebra::build(*ctx_, lambda_, beta,
                                                         opts_)))
             .first;
  return *it->second;
}

int AlgebraTower::lambda_i(const RootVector& beta, int i) const {
  return ctx_->datum().lambda_i(lambda_, beta, i);
}

// ---------------------------------------------------------------- slices

DenseVec Slice::restrict(const DenseVec& full) const {
  for (int r = 0; r < static_cast<int>(full.size()); ++r)
    if (full[r] != 0 && !local.count(r))
      throw std::runtime_error("coordinates escape the slice");
  DenseVec out;
  out.reserve(slots.size());
  for (int s : slots) out.push_back(full[s]);
  return out;
}

DenseVec Slice::restrict_or_project(const DenseVec& full) const {
  DenseVec out;
  out.reserve(slots.size());
  for (int s : slots) out.push_back(full[s]);
  return out;
}

KLRElement Slice::element(const DenseVec& v) const {
  KLRElement out;
  for (int k = 0; k < dim(); ++k)
    if (v[k] != 0) out += rep(k) * v[k];
  return out;
}

namespace {

Slice make_slice(const CyclotomicAlgebra& a, bool want_left, bool want_right,
                 int i) {
  Slice s;
  s.alg = &a;
  const auto& basis = a.basis();
  for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
    const auto& m = basis[k];
    if (m.nu.empty()) continue;
    if (want_left && m.left_seq().back() != i) continue;
    if (want_right && m.nu.back() != i) continue;
    s.local.emplace(k, static_cast<int>(s.slots.size()));
    s.slots.push_back(k);
  }
  return s;
}

} // namespace

Slice e_slice(const CyclotomicAlgebra& upper, int i) {
  return make_slice(upper, true, false, i);
}
Slice f_slice(const CyclotomicAlgebra& upper, int i) {
  return make_slice(upper, false, true, i);
}
Slice ef_slice(const CyclotomicAlgebra& upper, int i) {
  return make_slice(upper, true, true, i);
}

// ------------------------------------------------------------- modules

namespace {

/// The slice as a one-sided module over `acting`, which embeds into the
/// slice's ambient algebra by appending `extra` labels.
ModuleOps side_module(const Slice& s, const CyclotomicAlgebra& acting,
                      const std::vector<int>& extra, bool right_side) {
  ModuleOps m;
  m.alg = &acting;
  m.dim = s.dim();
  for (int j = 0; j < acting.dim(); ++j) {
    const KLRElement g = embed_append(acting.basis_rep(j), extra);
    DenseMat mat;
    for (int k = 0; k < s.dim(); ++k) {
      const KLRElement p = right_side ? s.alg->ctx().multiply(s.rep(k), g)
                                      : s.alg->ctx().multiply(g, s.rep(k));
      mat.push_back(s.restrict(s.alg->reduce(p)));
    }
    m.act.push_back(std::move(mat));
  }
  return m;
}

} // namespace

TensorModule tensor_over(const ModuleOps& M, const ModuleOps& N) {
  TensorModule t;
  if (M.alg != N.alg) throw std::runtime_error("tensor over mismatched algebras");
  const int da = M.alg ? M.alg->dim() : 0;
  t.nslots = N.dim;
  if (M.dim == 0 || N.dim == 0 || da == 0) {
    if (da == 0 && (M.dim != 0 || N.dim != 0))
      throw std::runtime_error("nonzero module over the zero algebra");
    return t;
  }
  const auto& A = *M.alg;

  // minimal generators: a basis of M / (M rad A)
  std::vector<SparseVec> mrad;
  for (const auto& r : A.radical_basis()) {
    DenseMat actr(M.dim, DenseVec(M.dim, Rational(0)));
    for (int j = 0; j < da; ++j)
      if (r[j] != 0)
        for (int c = 0; c < M.dim; ++c)
          for (int w = 0; w < M.dim; ++w) actr[c][w] += r[j] * M.act[j][c][w];
    for (int c = 0; c < M.dim; ++c) mrad.push_back(to_sparse(actr[c]));
  }
  CoordQuotient topq(M.dim, mrad);
  t.gens = topq.basis_columns();
  const int r = static_cast<int>(t.gens.size());
  const int R = r * da;

  // presentation pi: A^r -> M, (a_k) -> sum m_k a_k
  std::vector<SparseVec> picols;
  picols.reserve(R);
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < da; ++j) picols.push_back(to_sparse(M.act[j][t.gens[k]]));
  Echelon pie(true);
  for (auto& c : picols) pie.insert(c);
  if (pie.rank() != M.dim)
    throw std::runtime_error("generators fail to span the module");
  t.lift.assign(M.dim, DenseVec(R, Rational(0)));
  for (int m = 0; m < M.dim; ++m) {
    std::map<int, Rational> combo;
    auto res = pie.reduce(SparseVec{{m, Rational(1)}}, &combo);
    if (!res.empty()) throw std::runtime_error("lift failed");
    for (const auto& [idx, c] : combo) t.lift[m][idx] = c;
  }
  const auto kernel = column_kernel(picols);

  // relations inside N^r induced by the presentation kernel
  std::vector<SparseVec> rels;
  for (const auto& kap : kernel) {
    std::vector<DenseMat> comb(r);
    for (int k = 0; k < r; ++k) {
      comb[k].assign(N.dim, DenseVec(N.dim, Rational(0)));
      for (int j = 0; j < da; ++j) {
        const Rational& c = kap[k * da + j];
        if (c == 0) continue;
        for (int cc = 0; cc < N.dim; ++cc)
          for (int w = 0; w < N.dim; ++w)
            comb[k][cc][w] += c * N.act[j][cc][w];
      }
    }
    for (int ncol = 0; ncol < N.dim; ++ncol) {
      SparseVec v;
      for (int k = 0; k < r; ++k)
        for (int w = 0; w < N.dim; ++w)
          if (comb[k][ncol][w] != 0) v[k * N.dim + w] = comb[k][ncol][w];
      rels.push_back(std::move(v));
    }
  }
  t.quot = std::make_unique<CoordQuotient>(r * N.dim, rels);
  t.dim = t.quot->dim();
  for (int col : t.quot->basis_columns())
    t.basis.emplace_back(col / N.dim, col % N.dim);
  t.nact = N.act;
  return t;
}

DenseVec TensorModule::pair(const DenseVec& u, const DenseVec& v) const {
  if (dim == 0) return {};
  const int r = static_cast<int>(gens.size());
  const int da = static_cast<int>(nact.size());
  DenseVec xi(r * da, Rational(0));
  for (int m = 0; m < static_cast<int>(u.size()); ++m)
    if (u[m] != 0)
      for (int p = 0; p < r * da; ++p) xi[p] += u[m] * lift[m][p];
  std::vector<DenseVec> nv(da);
  DenseVec w(r * nslots, Rational(0));
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < da; ++j) {
      const Rational& c = xi[k * da + j];
      if (c == 0) continue;
      if (nv[j].empty()) nv[j] = mat_vec(nact[j], v);
      for (int s = 0; s < nslots; ++s) w[k * nslots + s] += c * nv[j][s];
    }
  return quot->coords(to_sparse(w));
}

// ------------------------------------------------------- bimodule checks

namespace {

std::vector<const std::vector<DenseMat>*> left_families(const Bimodule& b) {
  return {&b.lidem, &b.lx, &b.ltau};
}
std::vector<const std::vector<DenseMat>*> right_families(const Bimodule& b) {
  return {&b.ridem, &b.rx, &b.rtau};
}

bool idem_family_ok(const std::vector<DenseMat>& idems, int dim) {
  DenseMat sum(dim, DenseVec(dim, Rational(0)));
  for (const auto& e : idems) {
    if (mat_mul(e, e) != e) return false;
    for (int c = 0; c < dim; ++c)
      for (int r = 0; r < dim; ++r) sum[c][r] += e[c][r];
  }
  return sum == identity_mat(dim);
}

} // namespace

bool bimodule_ok(const Bimodule& b) {
  if (b.dim == 0) return true;
  if (!idem_family_ok(b.lidem, b.dim) || !idem_family_ok(b.ridem, b.dim))
    return false;
  for (auto lf : left_families(b))
    for (const auto& l : *lf)
      for (auto rf : right_families(b))
        for (const auto& r : *rf)
          if (mat_mul(l, r) != mat_mul(r, l)) return false;
  return true;
}

bool intertwines(const BimoduleMap& f) {
  auto check = [&](const std::vector<DenseMat>& s,
                   const std::vector<DenseMat>& d) {
    if (s.size() != d.size()) return false;
    for (std::size_t k = 0; k < s.size(); ++k)
      if (mat_mul(d[k], f.mat) != mat_mul(f.mat, s[k])) return false;
    return true;
  };
  return check(f.src->lidem, f.dst->lidem) && check(f.src->lx, f.dst->lx) &&
         check(f.src->ltau, f.dst->ltau) && check(f.src->ridem, f.dst->ridem) &&
         check(f.src->rx, f.dst->rx) && check(f.src->rtau, f.dst->rtau);
}

// ------------------------------------------------------------ biadjoint

BiadjointCell::BiadjointCell(const AlgebraTower& tower, RootVector beta, int i,
                             bool flip_eta_sign)
    : tower_(&tower), beta_(std::move(beta)), i_(i), flip_(flip_eta_sign) {
  n_ = beta_.height();
  lam_ = tower.lambda_i(beta_, i_);
  a0_ = &tower.at(beta_);
  ap_ = &tower.at(beta_.plus_alpha(i_));
  ef_ = ef_slice(*ap_, i_);
  const auto& ctx = tower.ctx();

  if (auto bm = beta_.minus_alpha(i_)) {
    am_ = &tower.at(*bm);
    m_ = f_slice(*a0_, i_);
    n_side_ = e_slice(*a0_, i_);
    fe_ = tensor_over(side_module(m_, *am_, {i_}, true),
                      side_module(n_side_, *am_, {i_}, false));
  } else {
    m_.alg = a0_;
    n_side_.alg = a0_;
  }

  // sigma: a (x) b -> a tau_n b
  for (int s = 0; s < fe_.dim; ++s) {
    const auto [g, ncol] = fe_.basis[s];
    const KLRElement a = m_.rep(fe_.gens[g]);
    const KLRElement b = n_side_.rep(ncol);
    const KLRElement p = ctx.multiply(
        emb1(a, i_), ctx.lmul_tau(n_ - 1, emb1(b, i_)));
    sigma_.push_back(ef_.restrict(ap_->reduce(p)));
  }

  // eta: u -> class of the embedded u
  for (int u = 0; u < a0_->dim(); ++u)
    eta_.push_back(ef_.restrict(ap_->reduce(emb1(a0_->basis_rep(u), i_))));

  const int de = ef_.dim();
  const int d0 = a0_->dim();
  rho_report_.lambda_i = lam_;
  rho_report_.plus_case = lam_ >= 0;
  rho_report_.dim_fe = fe_.dim;
  rho_report_.dim_ef = de;
  rho_report_.dim_alg = d0;

  DenseMat xef;
  if (lam_ > 0) {
    const auto& full = ap_->left_x(n_);  // x_{n+1} on the upper algebra
    xef = restrict_matrix(full, ef_);
  }

  if (lam_ >= 0) {
    rho_ = sigma_;
    DenseMat power = eta_;
    for (int t = 0; t < lam_; ++t) {
      for (const auto& col : power) rho_.push_back(col);
      if (t + 1 < lam_) {
        DenseMat next;
        for (const auto& col : power) next.push_back(mat_vec(xef, col));
        power = std::move(next);
      }
    }
    rho_report_.ledger_ok = (de == fe_.dim + lam_ * d0);
  } else {
    const int q = -lam_;
    std::vector<DenseMat> ts;
    for (int k = 0; k < q; ++k) ts.push_back(t_map(k));
    for (int s = 0; s < fe_.dim; ++s) {
      DenseVec col = sigma_[s];
      for (int k = 0; k < q; ++k)
        col.insert(col.end(), ts[k][s].begin(), ts[k][s].end());
      rho_.push_back(std::move(col));
    }
    rho_report_.ledger_ok = (fe_.dim == de + q * d0);
  }

  const int rows = lam_ >= 0 ? de : de + (-lam_) * d0;
  const int cols = static_cast<int>(rho_.size());
  if (rows == cols) {
    if (auto inv = invert(rho_)) {
      rho_inv_ = std::move(*inv);
      rho_report_.bijective = true;
    }
  }
  if (!rho_report_.bijective) return;

  // eta-hat
  const Rational sign = flip_ ? Rational(1) : Rational(-1);
  for (int u = 0; u < d0; ++u) {
    if (lam_ >= 0) {
      DenseVec v = eta_[u];
      for (int t = 0; t < lam_; ++t) v = mat_vec(xef, v);
      DenseVec w = mat_vec(rho_inv_, v);
      DenseVec col(w.begin(), w.begin() + fe_.dim);
      for (auto& c : col) c *= sign;
      eta_hat_.push_back(std::move(col));
    } else {
      // inclusion at the last inverse-power slot
      eta_hat_.push_back(rho_inv_[de + (-lam_ - 1) * d0 + u]);
    }
  }

  // eps-hat
  if (lam_ > 0) {
    for (int v = 0; v < de; ++v) {
      const DenseVec w = rho_inv_[v];
      eps_hat_.push_back(
          DenseVec(w.begin() + fe_.dim + (lam_ - 1) * d0,
                   w.begin() + fe_.dim + lam_ * d0));
    }
  } else {
    const DenseMat tq = t_map(-lam_);
    for (int v = 0; v < de; ++v)
      eps_hat_.push_back(mat_vec(tq, rho_inv_[v]));
  }
}

DenseMat BiadjointCell::t_map(int k) const {
  const auto& ctx = tower_->ctx();
  DenseMat out;
  for (int s = 0; s < fe_.dim; ++s) {
    const auto [g, ncol] = fe_.basis[s];
    const KLRElement a = m_.rep(fe_.gens[g]);
    KLRElement b = n_side_.rep(ncol);
    if (k > 0) b = ctx.lmul_x(n_ - 1, b, k);
    out.push_back(a0_->reduce(ctx.multiply(a, b)));
  }
  return out;
}

DenseVec BiadjointCell::fe_left_rep(int s) const {
  return unit_vec(a0_->dim(), m_.slots[fe_.gens[fe_.basis[s].first]]);
}

DenseVec BiadjointCell::fe_right_rep(int s) const {
  return unit_vec(a0_->dim(), n_side_.slots[fe_.basis[s].second]);
}

KLRElement BiadjointCell::fe_left_element(int s) const {
  return m_.rep(fe_.gens[fe_.basis[s].first]);
}

KLRElement BiadjointCell::fe_right_element(int s) const {
  return n_side_.rep(fe_.basis[s].second);
}

DenseVec BiadjointCell::eta_hat_unit() const {
  if (fe_.dim == 0 || a0_->dim() == 0) return DenseVec(fe_.dim, Rational(0));
  return mat_vec(eta_hat_, a0_->reduce(a0_->unit()));
}

// -------------------------------------------------------------- zigzag

ZigzagReport verify_zigzag(const AlgebraTower& tower, const RootVector& beta,
                           int i, bool flip_eta_sign) {
  ZigzagReport rep;
  const auto& ctx = tower.ctx();
  // Both identities act on slices that are unital modules over the algebra
  // at beta (the strand-appending embedding sends the unit to the slice
  // identity), so either algebra vanishing makes them trivial; checking
  // beta first avoids building a larger algebra that is already forced to
  // be zero.
  if (tower.at(beta).dim() == 0) return rep;
  const RootVector gamma = beta.plus_alpha(i);
  if (tower.at(gamma).dim() == 0) return rep;
  BiadjointCell low(tower, beta, i, flip_eta_sign);
  BiadjointCell high(tower, gamma, i, flip_eta_sign);
  const auto& ap = low.upper();
  if (!low.rho_report().bijective || !high.rho_report().bijective) {
    rep.ok_e = rep.ok_f = false;
    rep.witness = "rho is not bijective";
    return rep;
  }

  const Slice es = e_slice(ap, i);
  const Slice fs = f_slice(ap, i);
  const DenseVec hu = high.eta_hat_unit();

  auto run_side = [&](bool e_side) {
    const Slice& ker = e_side ? es : fs;
    for (int u = 0; u < ker.dim(); ++u) {
      const KLRElement urep = ker.rep(u);
      DenseVec acc(ker.dim(), Rational(0));
      for (int s = 0; s < static_cast<int>(hu.size()); ++s) {
        if (hu[s] == 0) continue;
        const KLRElement arep = high.fe_left_element(s);
        const KLRElement brep = high.fe_right_element(s);
        DenseVec mid;
        if (e_side)
          mid = low.ef().restrict(ap.reduce(ctx.multiply(urep, arep)));
        else
          mid = low.ef().restrict(ap.reduce(ctx.multiply(brep, urep)));
        const DenseVec q = mat_vec(low.eps_hat(), mid);
        KLRElement qe;
        for (int w = 0; w < low.lower().dim(); ++w)
          if (q[w] != 0) qe += low.lower().basis_rep(w) * q[w];
        KLRElement prod;
        if (e_side)
          prod = ctx.multiply(emb1(qe, i), brep);
        else
          prod = ctx.multiply(arep, emb1(qe, i));
        const DenseVec add = ker.restrict(ap.reduce(prod));
        for (int w = 0; w < ker.dim(); ++w) acc[w] += hu[s] * add[w];
      }
      DenseVec want = unit_vec(ker.dim(), u);
      if (acc != want) {
        std::ostringstream os;
        os << (e_side ? "restriction" : "induction")
           << "-side composition moves basis vector " << u;
        rep.witness = os.str();
        return false;
      }
    }
    return true;
  };

  rep.ok_e = run_side(true);
  rep.ok_f = run_side(false);
  return rep;
}

bool verify_triangles(const AlgebraTower& tower, const RootVector& beta,
                      int i) {
  const auto& ctx = tower.ctx();
  // As in verify_zigzag: either algebra vanishing makes both triangles
  // trivial, and the beta check is the cheaper one.
  if (tower.at(beta).dim() == 0) return true;
  if (tower.at(beta.plus_alpha(i)).dim() == 0) return true;
  BiadjointCell cell(tower, beta, i);
  const auto& ap = cell.upper();
  if (cell.lower().dim() == 0)
    return e_slice(ap, i).dim() == 0 && f_slice(ap, i).dim() == 0;
  const DenseVec h = mat_vec(cell.eta(), cell.lower().reduce(cell.lower().unit()));
  const KLRElement hel = cell.ef().element(h);
  const Slice es = e_slice(ap, i);
  const Slice fs = f_slice(ap, i);
  for (int u = 0; u < es.dim(); ++u)
    if (es.restrict(ap.reduce(ctx.multiply(hel, es.rep(u)))) !=
        unit_vec(es.dim(), u))
      return false;
  for (int v = 0; v < fs.dim(); ++v)
    if (fs.restrict(ap.reduce(ctx.multiply(fs.rep(v), hel))) !=
        unit_vec(fs.dim(), v))
      return false;
  return true;
}

// ----------------------------------------------------------- eq1 / eq2 / eq3

EqReport check_eq1(const AlgebraTower& tower, const RootVector& beta, int i) {
  EqReport rep;
  const int lam = tower.lambda_i(beta, i);
  if (lam < 2) {
    rep.detail = "inapplicable";
    return rep;
  }
  rep.applicable = true;
  const auto& ctx = tower.ctx();
  const int n = beta.height();
  const auto& a0 = tower.at(beta);
  const auto& ap = tower.at(beta.plus_alpha(i));
  const auto& app = tower.at(beta.plus_alpha(i, 2));

  KLRElement e2;
  for (const auto& nu : enumerate_Ibeta(ctx.datum(), beta)) {
    auto s = nu;
    s.push_back(i);
    s.push_back(i);
    e2 += idempotent(s);
  }
  KLRElement lhs;
  if (lam >= 2) lhs += ctx.lmul_x(n + 1, e2, lam - 2);
  lhs += ctx.lmul_x(n, ctx.lmul_tau(n, e2), lam - 1);
  const DenseVec target = app.reduce(lhs);

  Echelon span;
  const auto bm = beta.minus_alpha(i);
  for (int b = 0; b < ap.dim(); ++b) {
    const KLRElement eb = emb1(ap.basis_rep(b), i);
    if (bm) {
      // a tau_n tau_{n+1} e(beta-a_i, i^3) b
      const KLRElement cut = left_suffix_filter(eb, {i, i, i});
      if (!cut.is_zero()) {
        const KLRElement t = ctx.lmul_tau(n - 1, ctx.lmul_tau(n, cut));
        for (int a = 0; a < a0.dim(); ++a)
          span.insert(to_sparse(app.reduce(
              ctx.multiply(emb2(a0.basis_rep(a), i), t))));
      }
    }
    const KLRElement mid = left_suffix_filter(eb, {i, i});
    if (mid.is_zero()) continue;
    const KLRElement taub = ctx.lmul_tau(n, mid);
    for (int k = 0; k <= lam - 2; ++k)
      span.insert(to_sparse(app.reduce(
          k > 0 ? ctx.lmul_x(n, taub, k) : taub)));
    for (int k = 0; k <= lam - 3; ++k)
      span.insert(to_sparse(app.reduce(
          k > 0 ? ctx.lmul_x(n + 1, mid, k) : mid)));
  }
  rep.ok = span.contains(to_sparse(target));
  rep.detail = rep.ok ? "membership certified" : "membership failed";
  return rep;
}

EqReport solve_eq2(const AlgebraTower& tower, const RootVector& beta, int i) {
  EqReport rep;
  const int lam = tower.lambda_i(beta, i);
  if (lam != 1) {
    rep.detail = "inapplicable";
    return rep;
  }
  rep.applicable = true;
  const auto& ctx = tower.ctx();
  const int n = beta.height();
  const auto& a0 = tower.at(beta);
  const auto& ap = tower.at(beta.plus_alpha(i));
  const auto& app = tower.at(beta.plus_alpha(i, 2));

  const Slice efs = ef_slice(ap, i);
  const Slice es = e_slice(ap, i);
  TensorModule Y = tensor_over(side_module(efs, a0, {i}, true),
                               side_module(es, a0, {i}, false));

  // Sigma and E~ on the basis tensors
  DenseMat sig, mul;
  for (int s = 0; s < Y.dim; ++s) {
    const auto [g, ncol] = Y.basis[s];
    const KLRElement a = efs.rep(Y.gens[g]);
    const KLRElement b = es.rep(ncol);
    sig.push_back(app.reduce(
        ctx.multiply(emb1(a, i), ctx.lmul_tau(n, emb1(b, i)))));
    mul.push_back(ap.reduce(ctx.multiply(a, b)));
  }

  // e(beta,i) (x) e(beta,i)
  KLRElement eb;
  for (const auto& nu : enumerate_Ibeta(ctx.datum(), beta)) {
    auto s2 = nu;
    s2.push_back(i);
    eb += idempotent(s2);
  }
  const DenseVec ecls = ap.reduce(eb);
  const DenseVec u0 = Y.dim == 0
                          ? DenseVec{}
                          : Y.pair(efs.restrict(ecls), es.restrict(ecls));

  // allowed correction space: (A0 e(.,i^2) tau_n e(.,i^2) A0) (x) e-kernel
  std::vector<DenseVec> corr;
  if (Y.dim > 0 && beta.minus_alpha(i)) {
    std::vector<DenseVec> scoords;
    for (int b = 0; b < a0.dim(); ++b) {
      KLRElement right = left_suffix_filter(emb1(a0.basis_rep(b), i), {i, i});
      if (right.is_zero()) continue;
      KLRElement mid =
          left_suffix_filter(ctx.lmul_tau(n - 1, right), {i, i});
      if (mid.is_zero()) continue;
      for (int a = 0; a < a0.dim(); ++a) {
        const DenseVec full =
            ap.reduce(ctx.multiply(emb1(a0.basis_rep(a), i), mid));
        scoords.push_back(efs.restrict(full));
      }
    }
    for (const auto& sc : scoords)
      for (int ncol = 0; ncol < es.dim(); ++ncol)
        corr.push_back(Y.pair(sc, unit_vec(es.dim(), ncol)));
  }

  // solve u = u0 + sum c_t corr_t with Sigma(u) = 0 and E~(u) = e(beta,i)
  auto stack = [&](const DenseVec& yvec) {
    DenseVec out = Y.dim == 0 ? DenseVec{} : mat_vec(sig, yvec);
    DenseVec m2 = Y.dim == 0 ? DenseVec(ap.dim(), Rational(0))
                             : mat_vec(mul, yvec);
    out.insert(out.end(), m2.begin(), m2.end());
    return out;
  };
  DenseVec base = Y.dim == 0 ? DenseVec(app.dim() + ap.dim(), Rational(0))
                             : stack(u0);
  DenseVec want(app.dim(), Rational(0));
  want.insert(want.end(), ecls.begin(), ecls.end());
  DenseVec rhs(base.size());
  for (std::size_t k = 0; k < base.size(); ++k) rhs[k] = want[k] - base[k];
  std::vector<SparseVec> cols;
  for (const auto& cv : corr) cols.push_back(to_sparse(stack(cv)));
  const auto sol = express_in_span(cols, to_sparse(rhs));
  rep.ok = sol.has_value();
  if (rep.ok) {
    DenseVec u = u0;
    for (std::size_t t = 0; t < corr.size(); ++t)
      for (int s = 0; s < Y.dim; ++s) u[s] += (*sol)[t] * corr[t][s];
    std::ostringstream os;
    os << "u coordinates over the tensor basis:";
    for (int s = 0; s < Y.dim; ++s)
      if (u[s] != 0) os << " [" << s << "]=" << u[s];
    rep.detail = os.str();
  } else {
    rep.detail = "no solution";
  }
  return rep;
}

EqReport solve_eq3(const AlgebraTower& tower, const RootVector& beta, int i) {
  EqReport rep;
  const int lam = tower.lambda_i(beta, i);
  const auto bm = beta.minus_alpha(i);
  if (lam > 0 || !bm) {
    rep.detail = "inapplicable";
    return rep;
  }
  rep.applicable = true;
  const auto& ctx = tower.ctx();
  const int n = beta.height();
  const auto& a0 = tower.at(beta);
  const auto& am = tower.at(*bm);
  const auto& ap = tower.at(beta.plus_alpha(i));
  const auto& app = tower.at(beta.plus_alpha(i, 2));

  // v lives in A0 e(beta-a_i,i) (x)_{A-} e(beta-a_i,i^2) R(beta+a_i)
  const Slice ms = f_slice(a0, i);
  Slice ns;
  ns.alg = &ap;
  for (int k = 0; k < ap.dim(); ++k) {
    const auto ls = ap.basis()[k].left_seq();
    if (ls.size() >= 2 && ls[ls.size() - 1] == i && ls[ls.size() - 2] == i) {
      ns.local.emplace(k, static_cast<int>(ns.slots.size()));
      ns.slots.push_back(k);
    }
  }
  TensorModule V = tensor_over(side_module(ms, am, {i}, true),
                               side_module(ns, am, {i, i}, false));

  const int q = -lam;
  std::vector<DenseMat> tmats(q + 1), hmats(q + 2);
  DenseMat gmat;
  for (int s = 0; s < V.dim; ++s) {
    const auto [g, ncol] = V.basis[s];
    const KLRElement a = ms.rep(V.gens[g]);
    const KLRElement b = ns.rep(ncol);
    const KLRElement ea = emb1(a, i);
    for (int k = 0; k <= q; ++k)
      tmats[k].push_back(ap.reduce(ctx.multiply(
          ea, k > 0 ? ctx.lmul_x(n - 1, b, k) : b)));
    for (int k = 0; k <= q + 1; ++k)
      hmats[k].push_back(ap.reduce(ctx.multiply(
          ea, ctx.lmul_tau(n - 1, k > 0 ? ctx.lmul_x(n, b, k) : b))));
    gmat.push_back(app.reduce(ctx.multiply(
        emb2(a, i), ctx.lmul_tau(n - 1, ctx.lmul_tau(n, emb1(b, i))))));
  }

  KLRElement eb;
  for (const auto& nu : enumerate_Ibeta(ctx.datum(), beta)) {
    auto s2 = nu;
    s2.push_back(i);
    eb += idempotent(s2);
  }
  const DenseVec ecls = ap.reduce(eb);
  const DenseVec zap(ap.dim(), Rational(0));
  const DenseVec zpp(app.dim(), Rational(0));

  std::vector<SparseVec> cols;
  DenseVec target;
  auto append = [&](const DenseVec& v, DenseVec& into) {
    into.insert(into.end(), v.begin(), v.end());
  };
  for (int s = 0; s < V.dim; ++s) {
    DenseVec col;
    for (int k = 0; k <= q; ++k) append(tmats[k][s], col);
    append(gmat[s], col);
    for (int k = 0; k <= q + 1; ++k) append(hmats[k][s], col);
    cols.push_back(to_sparse(col));
  }
  for (int k = 0; k < q; ++k) append(zap, target);
  append(ecls, target);  // T_q(v) = e(beta,i)
  append(zpp, target);   // G(v) = 0
  for (int k = 0; k <= q; ++k) append(zap, target);
  append(ecls, target);  // H_{q+1}(v) = e(beta,i)

  const auto sol = express_in_span(cols, to_sparse(target));
  rep.ok = sol.has_value();
  if (rep.ok) {
    std::ostringstream os;
    os << "v coordinates over the tensor basis (H-range 0.." << q + 1 << "):";
    for (int s = 0; s < V.dim; ++s)
      if ((*sol)[s] != 0) os << " [" << s << "]=" << (*sol)[s];
    rep.detail = os.str();
  } else {
    rep.detail = "no solution";
  }
  return rep;
}

// -------------------------------------------------------- projectivity

std::vector<DenseMat> regular_right(const CyclotomicAlgebra& a) {
  std::vector<DenseMat> out;
  for (int j = 0; j < a.dim(); ++j) out.push_back(a.right_matrix(a.basis_rep(j)));
  return out;
}

std::vector<DenseMat> regular_left(const CyclotomicAlgebra& a) {
  std::vector<DenseMat> out;
  for (int j = 0; j < a.dim(); ++j) out.push_back(a.left_matrix(a.basis_rep(j)));
  return out;
}

bool is_projective(const ModuleOps& M, const std::vector<DenseMat>& regular) {
  if (M.dim == 0) return true;
  const auto& A = *M.alg;
  const int da = A.dim();

  std::vector<SparseVec> mrad;
  for (const auto& r : A.radical_basis())
    for (int c = 0; c < M.dim; ++c) {
      DenseVec col(M.dim, Rational(0));
      for (int j = 0; j < da; ++j)
        if (r[j] != 0)
          for (int w = 0; w < M.dim; ++w) col[w] += r[j] * M.act[j][c][w];
      mrad.push_back(to_sparse(col));
    }
  CoordQuotient topq(M.dim, mrad);
  const auto gens = topq.basis_columns();
  const int r = static_cast<int>(gens.size());
  const int R = r * da;

  std::vector<SparseVec> picols;
  Echelon pie;
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < da; ++j) {
      picols.push_back(to_sparse(M.act[j][gens[k]]));
      pie.insert(picols.back());
    }
  if (pie.rank() != M.dim) return false;
  if (R == M.dim) return true;  // free on the minimal generators

  // splitting phi: M -> A^r with pi . phi = id, as a linear system
  std::vector<KLRElement> gelems = algebra_generators(A);
  struct GenData {
    DenseMat on_m;   // action on M
    DenseMat on_a;   // same-side regular action on A
  };
  std::vector<GenData> gd;
  for (const auto& g : gelems) {
    const DenseVec gc = A.reduce(g);
    GenData d;
    d.on_m.assign(M.dim, DenseVec(M.dim, Rational(0)));
    d.on_a.assign(da, DenseVec(da, Rational(0)));
    for (int j = 0; j < da; ++j) {
      if (gc[j] == 0) continue;
      for (int c = 0; c < M.dim; ++c)
        for (int w = 0; w < M.dim; ++w) d.on_m[c][w] += gc[j] * M.act[j][c][w];
      for (int c = 0; c < da; ++c)
        for (int w = 0; w < da; ++w) d.on_a[c][w] += gc[j] * regular[j][c][w];
    }
    gd.push_back(std::move(d));
  }

  const int ng = static_cast<int>(gd.size());
  const int lin_eqs = ng * R * M.dim;
  // unknown index: p * M.dim + m, p = k * da + arow
  std::vector<SparseVec> cols(R * M.dim);
  for (int k = 0; k < r; ++k)
    for (int arow = 0; arow < da; ++arow)
      for (int m = 0; m < M.dim; ++m) {
        const int p = k * da + arow;
        SparseVec& col = cols[p * M.dim + m];
        for (int gi = 0; gi < ng; ++gi) {
          // equation (gi, p, m') states phi(g m')_p = (phi(m') g)_p; the
          // unknown phi_{p,m} enters the left side with the coefficient of
          // basis m in g m'
          for (int m2 = 0; m2 < M.dim; ++m2) {
            const Rational& c = gd[gi].on_m[m2][m];
            if (c != 0) col[(gi * R + p) * M.dim + m2] += c;
          }
          // - (reg_g)_{arow1,arow} phi_{(k,arow),m} at (gi, (k,arow1), m)
          for (int arow1 = 0; arow1 < da; ++arow1) {
            const Rational& c = gd[gi].on_a[arow][arow1];
            if (c != 0)
              col[(gi * R + (k * da + arow1)) * M.dim + m] -= c;
          }
        }
        // pi constraint rows
        const auto& picol = picols[p];
        for (const auto& [m2, c] : picol) col[lin_eqs + m2 * M.dim + m] += c;
      }
  SparseVec target;
  for (int m = 0; m < M.dim; ++m) target[lin_eqs + m * M.dim + m] = 1;
  return express_in_span(cols, target).has_value();
}

ModuleOps f_kernel_right_module(const AlgebraTower& tower,
                                const RootVector& beta, int i) {
  const auto& ap = tower.at(beta.plus_alpha(i));
  return side_module(f_slice(ap, i), tower.at(beta), {i}, true);
}

ModuleOps e_kernel_left_module(const AlgebraTower& tower,
                               const RootVector& beta, int i) {
  const auto& ap = tower.at(beta.plus_alpha(i));
  return side_module(e_slice(ap, i), tower.at(beta), {i}, false);
}

// --------------------------------------------------------- bimodules

namespace {

Bimodule kernel_bimodule(const AlgebraTower& tower, const RootVector& beta,
                         int i, bool f_side) {
  const auto& ap = tower.at(beta.plus_alpha(i));
  const auto& a0 = tower.at(beta);
  const Slice s = f_side ? f_slice(ap, i) : e_slice(ap, i);
  Bimodule b;
  b.left = f_side ? &ap : &a0;
  b.right = f_side ? &a0 : &ap;
  b.dim = s.dim();

  auto inner_family = [&](const std::vector<KLRElement>& gens, bool left_mul,
                          std::vector<DenseMat>& into) {
    for (const auto& g : gens) {
      DenseMat m;
      for (int k = 0; k < s.dim(); ++k) {
        const KLRElement p = left_mul
                                 ? ap.ctx().multiply(g, s.rep(k))
                                 : ap.ctx().multiply(s.rep(k), g);
        m.push_back(s.restrict(ap.reduce(p)));
      }
      into.push_back(std::move(m));
    }
  };

  const int np = ap.strands();
  const int n0 = a0.strands();
  std::vector<KLRElement> ap_idem, ap_x, ap_tau, a0_idem, a0_x, a0_tau;
  for (const auto& nu : ap.sequences()) ap_idem.push_back(idempotent(nu));
  for (int k = 0; k < np; ++k) {
    KLRElement e;
    for (const auto& nu : ap.sequences()) e += x_gen(k, nu);
    ap_x.push_back(e);
  }
  for (int l = 0; l + 1 < np; ++l) {
    KLRElement e;
    for (const auto& nu : ap.sequences()) e += tau_gen(l, nu);
    ap_tau.push_back(e);
  }
  for (const auto& nu : a0.sequences()) a0_idem.push_back(emb1(idempotent(nu), i));
  for (int k = 0; k < n0; ++k) {
    KLRElement e;
    for (const auto& nu : a0.sequences()) e += x_gen(k, nu);
    a0_x.push_back(emb1(e, i));
  }
  for (int l = 0; l + 1 < n0; ++l) {
    KLRElement e;
    for (const auto& nu : a0.sequences()) e += tau_gen(l, nu);
    a0_tau.push_back(emb1(e, i));
  }

  if (f_side) {
    inner_family(ap_idem, true, b.lidem);
    inner_family(ap_x, true, b.lx);
    inner_family(ap_tau, true, b.ltau);
    inner_family(a0_idem, false, b.ridem);
    inner_family(a0_x, false, b.rx);
    inner_family(a0_tau, false, b.rtau);
  } else {
    inner_family(a0_idem, true, b.lidem);
    inner_family(a0_x, true, b.lx);
    inner_family(a0_tau, true, b.ltau);
    inner_family(ap_idem, false, b.ridem);
    inner_family(ap_x, false, b.rx);
    inner_family(ap_tau, false, b.rtau);
  }
  return b;
}

} // namespace

Bimodule f_kernel_bimodule(const AlgebraTower& tower, const RootVector& beta,
                           int i) {
  return kernel_bimodule(tower, beta, i, true);
}

Bimodule e_kernel_bimodule(const AlgebraTower& tower, const RootVector& beta,
                           int i) {
  return kernel_bimodule(tower, beta, i, false);
}

} // namespace klr
