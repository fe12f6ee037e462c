#include "klr/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>

#include "klr/graded.hpp"

namespace klr {

KLRElement cyclotomic_seed(const KLRContext& ctx, const DominantWeight& lambda,
                           const std::vector<std::vector<int>>& seqs) {
  (void)ctx;
  KLRElement e;
  for (const auto& nu : seqs) e += x_gen(0, nu, lambda.ell.at(nu.at(0)));
  return e;
}

CyclotomicAlgebra CyclotomicAlgebra::build(const KLRContext& ctx,
                                           const DominantWeight& lambda,
                                           const RootVector& beta,
                                           CycloOptions opts) {
  CyclotomicAlgebra A;
  A.ctx_ = &ctx;
  A.lambda_ = lambda;
  A.beta_ = beta;
  A.n_ = beta.height();
  A.seqs_ = enumerate_Ibeta(ctx.datum(), beta);
  for (std::size_t k = 0; k < A.seqs_.size(); ++k)
    A.seq_index_[A.seqs_[k]] = static_cast<int>(k);

  const int n = A.n_;
  if (n == 0) {
    Monomial empty{{}, Perm::identity(0), {}};
    A.cols_ = {empty};
    A.col_of_[empty] = 0;
    A.cols_by_deg_[0] = {0};
    A.ideal_by_deg_[0];
    A.basis_ = {empty};
    A.basis_slot_[0] = 0;
    A.le_ = {identity_mat(1)};
    A.re_ = {identity_mat(1)};
    A.idem_class_ = {DenseVec{Rational(1)}};
    A.certs_.closure = A.certs_.stabilized = A.certs_.relations = true;
    return A;
  }

  const auto perms = all_perms(n);
  std::vector<int> wgt(ctx.datum().rank());
  int M = 0;
  for (std::size_t i = 0; i < wgt.size(); ++i) {
    wgt[i] = ctx.datum().bilinear(static_cast<int>(i), static_cast<int>(i));
    M = std::max(M, wgt[i]);
  }

  // Degrees of the tau parts: deg(tau_w e(nu)) over all words and sequences.
  const std::vector<int> zeros(n, 0);
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> taudeg;
  int T = 0, dmin = 0;
  for (const auto& nu : A.seqs_)
    for (const auto& w : perms) {
      int d = ctx.degree(Monomial{zeros, w, nu});
      taudeg[{w.one_line(), nu}] = d;
      T = std::max(T, d);
      dmin = std::min(dmin, d);
    }
  A.dmin_ = dmin;

  // The ideal is spanned by x^c tau_v s with s a monomial whose first
  // exponent carries the extra x_1^{<h,Lambda>} factor: each graded piece
  // gets a finite explicit spanning set.  Bases tau_v s are generated
  // lazily by the degree of s and bucketed by their own degree; the x^c
  // shifts are free.
  std::map<int, std::vector<std::pair<std::vector<int>, KLRElement>>> bases;
  int s_done = dmin - 1;
  auto generate_s = [&](int ds) {
    for (const auto& nu : A.seqs_)
      for (const auto& w : perms) {
        const int td = taudeg.at({w.one_line(), nu});
        const auto mu = w.apply(nu);
        const int ell = lambda.ell.at(mu[0]);
        std::vector<int> wt_mu(n);
        for (int k = 0; k < n; ++k) wt_mu[k] = wgt[mu[k]];
        for (auto& b : weighted_exps(wt_mu, ds - td - ell * wt_mu[0])) {
          b[0] += ell;
          Monomial s{b, w, nu};
          for (const auto& v : perms) {
            KLRElement el = KLRElement::single(s);
            const auto cw = v.canonical_word();
            for (auto it = cw.rbegin(); it != cw.rend(); ++it)
              el = ctx.lmul_tau(*it, el);
            if (el.is_zero()) continue;
            const int db = taudeg.at({v.one_line(), mu}) + ds;
            bases[db].push_back({v.apply(mu), std::move(el)});
          }
        }
      }
  };

  auto process_degree = [&](int d) {
    auto& cl = A.cols_by_deg_[d];
    auto& ideal = A.ideal_by_deg_[d];
    for (const auto& nu : A.seqs_)
      for (const auto& w : perms) {
        const int td = taudeg.at({w.one_line(), nu});
        const auto mu = w.apply(nu);
        std::vector<int> wt_mu(n);
        for (int k = 0; k < n; ++k) wt_mu[k] = wgt[mu[k]];
        for (const auto& a : weighted_exps(wt_mu, d - td)) {
          const int id = static_cast<int>(A.cols_.size());
          A.cols_.push_back({a, w, nu});
          A.col_of_[A.cols_.back()] = id;
          cl.push_back(id);
        }
      }
    while (s_done < d - dmin) generate_s(++s_done);
    for (const auto& [db, bucket] : bases) {
      if (db > d) break;
      for (const auto& [lseq, el] : bucket) {
        std::vector<int> wt_l(n);
        for (int k = 0; k < n; ++k) wt_l[k] = wgt[lseq[k]];
        for (const auto& c : weighted_exps(wt_l, d - db)) {
          SparseVec v;
          for (const auto& [m, coef] : el.terms()) {
            Monomial shifted = m;
            for (int k = 0; k < n; ++k) shifted.xexp[k] += c[k];
            v[A.col_of_.at(shifted)] = coef;
          }
          ideal.insert(std::move(v));
        }
      }
    }
  };

  // Extend the truncation until the quotient vanishes on (D, D + M] with
  // D >= T: every monomial above that window factors as x_k times a lower
  // monomial, so all higher graded pieces vanish too.
  int dmax = T + M;
  int processed = dmin - 1;
  int top = dmin - 1;
  for (;;) {
    if (dmax > opts.max_degree)
      throw std::runtime_error(
          "cyclotomic quotient did not vanish below the degree bound");
    for (int d = processed + 1; d <= dmax; ++d) {
      process_degree(d);
      if (static_cast<int>(A.cols_by_deg_[d].size()) >
          A.ideal_by_deg_[d].rank())
        top = d;
    }
    processed = dmax;
    if (std::max(top, T) + M <= dmax) break;
    dmax = std::max(top, T) + M;
  }
  A.dmax_ = dmax;
  A.top_degree_ = top;
  A.certs_.closure = true;
  A.certs_.stabilized = true;
  A.certs_.cap = dmax;

  for (const auto& [d, cl] : A.cols_by_deg_) {
    const auto& rows = A.ideal_by_deg_.at(d).rows();
    for (int col : cl)
      if (!rows.count(col)) A.basis_.push_back(A.cols_[col]);
  }
  std::sort(A.basis_.begin(), A.basis_.end());
  for (std::size_t j = 0; j < A.basis_.size(); ++j)
    A.basis_slot_[A.col_of_.at(A.basis_[j])] = static_cast<int>(j);

  A.precompute_generator_matrices();
  A.certs_.relations = !opts.check_relations || A.verify_relations();
  return A;
}

int CyclotomicAlgebra::graded_dim(int d) const {
  auto it = cols_by_deg_.find(d);
  if (it == cols_by_deg_.end()) return 0;
  return static_cast<int>(it->second.size()) - ideal_by_deg_.at(d).rank();
}

std::vector<Rational> CyclotomicAlgebra::reduce(const KLRElement& e) const {
  DenseVec out(basis_.size(), Rational(0));
  std::map<int, SparseVec> parts;
  for (const auto& [m, c] : e.terms()) {
    const int d = ctx_ ? ctx_->degree(m) : 0;
    if (d > dmax_) continue;  // vanishes above the top degree
    parts[d][col_of_.at(m)] = c;
  }
  for (const auto& [d, v] : parts) {
    SparseVec r = ideal_by_deg_.at(d).reduce(v);
    for (const auto& [col, c] : r) out.at(basis_slot_.at(col)) += c;
  }
  return out;
}

void CyclotomicAlgebra::precompute_generator_matrices() {
  const int n = n_;
  const int d = dim();
  idem_class_.resize(seqs_.size());
  for (std::size_t s = 0; s < seqs_.size(); ++s)
    idem_class_[s] = reduce(idempotent(seqs_[s]));
  auto build = [&](const KLRElement& g, bool left, DenseMat* m) {
    m->assign(d, DenseVec());
    for (int j = 0; j < d; ++j) {
      KLRElement rep = basis_rep(j);
      (*m)[j] =
          reduce(left ? ctx_->multiply(g, rep) : ctx_->multiply(rep, g));
    }
  };
  lx_.resize(n);
  rx_.resize(n);
  lt_.resize(std::max(0, n - 1));
  rt_.resize(std::max(0, n - 1));
  le_.resize(seqs_.size());
  re_.resize(seqs_.size());
  for (int k = 0; k < n; ++k) {
    KLRElement g;
    for (const auto& nu : seqs_) g += x_gen(k, nu);
    build(g, true, &lx_[k]);
    build(g, false, &rx_[k]);
  }
  for (int l = 0; l + 1 < n; ++l) {
    KLRElement g;
    for (const auto& nu : seqs_) g += tau_gen(l, nu);
    build(g, true, &lt_[l]);
    build(g, false, &rt_[l]);
  }
  for (std::size_t s = 0; s < seqs_.size(); ++s) {
    KLRElement g = idempotent(seqs_[s]);
    build(g, true, &le_[s]);
    build(g, false, &re_[s]);
  }
}

bool CyclotomicAlgebra::verify_relations() const {
  const int n = n_;
  const int d = dim();
  bool ok = true;
  auto eq = [](const DenseMat& a, const DenseMat& b) { return a == b; };
  const DenseMat zero(d, DenseVec(d, Rational(0)));
  for (int k = 0; k < n && ok; ++k)
    for (int m = k + 1; m < n && ok; ++m)
      ok = eq(mat_mul(lx_[k], lx_[m]), mat_mul(lx_[m], lx_[k]));
  for (int k = 0; k + 1 < n && ok; ++k)
    for (int l = 0; l + 1 < n && ok; ++l)
      if (std::abs(k - l) > 1)
        ok = eq(mat_mul(lt_[k], lt_[l]), mat_mul(lt_[l], lt_[k]));
  for (int l = 0; l + 1 < n && ok; ++l) {
    KLRElement qel;
    for (const auto& nu : seqs_) {
      Poly g = ctx_->q_poly(nu[l], nu[l + 1], l, l + 1, n);
      for (const auto& [ex, t] : g.terms()) qel += x_monomial(ex, nu) * t;
    }
    ok = eq(mat_mul(lt_[l], lt_[l]), left_matrix(qel));
    if (!ok) break;
    DenseMat proj = zero;
    for (std::size_t s = 0; s < seqs_.size(); ++s)
      if (seqs_[s][l] == seqs_[s][l + 1])
        for (int j = 0; j < d; ++j)
          proj[j] = add_vec(proj[j], DenseVec(le_[s][j]));
    // tau_l x_l = x_{l+1} tau_l - sum_{nu_l = nu_{l+1}} e(nu)
    ok = eq(mat_mul(lt_[l], lx_[l]),
            [&] {
              DenseMat m = mat_mul(lx_[l + 1], lt_[l]);
              for (int j = 0; j < d; ++j)
                m[j] = add_vec(m[j], scale_vec(proj[j], Rational(-1)));
              return m;
            }());
    if (!ok) break;
    // tau_l x_{l+1} = x_l tau_l + sum_{nu_l = nu_{l+1}} e(nu)
    ok = eq(mat_mul(lt_[l], lx_[l + 1]),
            [&] {
              DenseMat m = mat_mul(lx_[l], lt_[l]);
              for (int j = 0; j < d; ++j) m[j] = add_vec(m[j], proj[j]);
              return m;
            }());
  }
  for (int l = 0; l + 2 < n && ok; ++l) {
    KLRElement corr;
    for (const auto& nu : seqs_) {
      if (nu[l] != nu[l + 2]) continue;
      Poly g = ctx_->qbar_poly(nu[l], nu[l + 1], l, l + 1, l + 2, n);
      for (const auto& [ex, t] : g.terms()) corr += x_monomial(ex, nu) * t;
    }
    DenseMat lhs = mat_mul(lt_[l + 1], mat_mul(lt_[l], lt_[l + 1]));
    DenseMat rhs = mat_mul(lt_[l], mat_mul(lt_[l + 1], lt_[l]));
    DenseMat cm = left_matrix(corr);
    for (int j = 0; j < d; ++j) rhs[j] = add_vec(rhs[j], cm[j]);
    ok = eq(lhs, rhs);
  }
  return ok;
}

KLRElement CyclotomicAlgebra::basis_rep(int k) const {
  return KLRElement::single(basis_.at(k));
}

KLRElement CyclotomicAlgebra::unit() const { return idempotent_sum(seqs_); }

int CyclotomicAlgebra::sequence_index(const std::vector<int>& nu) const {
  return seq_index_.at(nu);
}

KLRElement CyclotomicAlgebra::reduce_to_rep(const KLRElement& e) const {
  const auto co = reduce(e);
  KLRElement out;
  for (std::size_t j = 0; j < co.size(); ++j)
    if (co[j] != 0) out.add_term(basis_[j], co[j]);
  return out;
}

std::vector<KLRElement> CyclotomicAlgebra::generator_elements() const {
  std::vector<KLRElement> gens;
  for (const auto& nu : seqs_) gens.push_back(idempotent(nu));
  for (int k = 0; k < n_; ++k) {
    KLRElement g;
    for (const auto& nu : seqs_) g += x_gen(k, nu);
    gens.push_back(g);
  }
  for (int l = 0; l + 1 < n_; ++l) {
    KLRElement g;
    for (const auto& nu : seqs_) g += tau_gen(l, nu);
    gens.push_back(g);
  }
  return gens;
}

DenseMat CyclotomicAlgebra::left_matrix(const KLRElement& a) const {
  const int d = dim();
  DenseMat out(d, DenseVec(d, Rational(0)));
  for (const auto& [m, c] : a.terms()) {
    DenseMat M = le_.at(seq_index_.at(m.nu));
    const auto cw = m.w.canonical_word();
    for (int p = static_cast<int>(cw.size()) - 1; p >= 0; --p)
      M = mat_mul(lt_.at(cw[p]), M);
    for (int k = 0; k < m.n(); ++k)
      for (int t = 0; t < m.xexp[k]; ++t) M = mat_mul(lx_.at(k), M);
    for (int j = 0; j < d; ++j) out[j] = add_vec(out[j], scale_vec(M[j], c));
  }
  return out;
}

DenseMat CyclotomicAlgebra::right_matrix(const KLRElement& a) const {
  const int d = dim();
  DenseMat out(d, DenseVec(d, Rational(0)));
  for (const auto& [m, c] : a.terms()) {
    DenseMat M = identity_mat(d);
    for (int k = 0; k < m.n(); ++k)
      for (int t = 0; t < m.xexp[k]; ++t) M = mat_mul(rx_.at(k), M);
    for (int l : m.w.canonical_word()) M = mat_mul(rt_.at(l), M);
    M = mat_mul(re_.at(seq_index_.at(m.nu)), M);
    for (int j = 0; j < d; ++j) out[j] = add_vec(out[j], scale_vec(M[j], c));
  }
  return out;
}

DenseVec CyclotomicAlgebra::apply_left(const KLRElement& a,
                                       const DenseVec& v) const {
  DenseVec out(dim(), Rational(0));
  for (const auto& [m, c] : a.terms()) {
    DenseVec u = mat_vec(le_.at(seq_index_.at(m.nu)), v);
    const auto cw = m.w.canonical_word();
    for (int p = static_cast<int>(cw.size()) - 1; p >= 0; --p)
      u = mat_vec(lt_.at(cw[p]), u);
    for (int k = 0; k < m.n(); ++k)
      for (int t = 0; t < m.xexp[k]; ++t) u = mat_vec(lx_.at(k), u);
    out = add_vec(out, scale_vec(u, c));
  }
  return out;
}

DenseVec CyclotomicAlgebra::apply_right(const DenseVec& v,
                                        const KLRElement& a) const {
  DenseVec out(dim(), Rational(0));
  for (const auto& [m, c] : a.terms()) {
    DenseVec u = v;
    for (int k = 0; k < m.n(); ++k)
      for (int t = 0; t < m.xexp[k]; ++t) u = mat_vec(rx_.at(k), u);
    for (int l : m.w.canonical_word()) u = mat_vec(rt_.at(l), u);
    u = mat_vec(re_.at(seq_index_.at(m.nu)), u);
    out = add_vec(out, scale_vec(u, c));
  }
  return out;
}

int CyclotomicAlgebra::nilpotency_index(int k) const {
  DenseVec v = reduce(unit());
  int m = 0;
  while (std::any_of(v.begin(), v.end(),
                     [](const Rational& c) { return c != 0; })) {
    v = mat_vec(lx_.at(k), v);
    ++m;
    // nonzero powers are homogeneous of distinct degrees, so independent
    if (m > dim() + 1)
      throw std::runtime_error("x_k not nilpotent on the quotient");
  }
  return m;
}

std::vector<DenseVec> CyclotomicAlgebra::radical_vectors() const {
  const int d = dim();
  std::vector<DenseMat> L;
  L.reserve(d);
  for (int j = 0; j < d; ++j) L.push_back(left_matrix(basis_rep(j)));
  std::vector<SparseVec> cols;
  for (int a = 0; a < d; ++a) {
    DenseVec col(d, Rational(0));
    for (int b = 0; b < d; ++b) {
      Rational tr = 0;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) tr += L[a][j][i] * L[b][i][j];
      col[b] = tr;
    }
    cols.push_back(to_sparse(col));
  }
  auto ker = column_kernel(cols);
  std::vector<DenseVec> out;
  for (auto& v : ker) out.push_back(std::move(v));
  return out;
}

int CyclotomicAlgebra::radical_dim() const {
  return static_cast<int>(radical_vectors().size());
}

int CyclotomicAlgebra::simple_count() const {
  const int d = dim();
  if (d == 0) return 0;
  auto rad = radical_vectors();
  std::vector<SparseVec> sub;
  for (const auto& v : rad) sub.push_back(to_sparse(v));
  CoordQuotient qa(d, sub);
  const int m = qa.dim();
  const auto& bc = qa.basis_columns();
  std::vector<DenseMat> L;
  L.reserve(m);
  for (int i = 0; i < m; ++i) L.push_back(left_matrix(basis_rep(bc[i])));
  std::vector<SparseVec> cols;
  for (int i = 0; i < m; ++i) {
    SparseVec stacked;
    for (int j = 0; j < m; ++j) {
      DenseVec com = L[i][bc[j]];
      DenseVec rev = L[j][bc[i]];
      for (int k = 0; k < d; ++k) com[k] -= rev[k];
      auto qc = qa.coords(to_sparse(com));
      for (int k = 0; k < m; ++k)
        if (qc[k] != 0) stacked[j * m + k] = qc[k];
    }
    cols.push_back(std::move(stacked));
  }
  return static_cast<int>(column_kernel(cols).size());
}

} // namespace klr
