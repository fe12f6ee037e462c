#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "klr/cyclotomic.hpp"

namespace klr {

/// On-demand store of cyclotomic quotients at the weights a verification
/// case touches; built algebras are shared read-only.
class AlgebraTower {
 public:
  AlgebraTower(const KLRContext& ctx, DominantWeight lambda,
               CycloOptions opts = {});

  const CyclotomicAlgebra& at(const RootVector& beta) const;
  const KLRContext& ctx() const { return *ctx_; }
  const DominantWeight& lambda() const { return lambda_; }
  int lambda_i(const RootVector& beta, int i) const;

 private:
  const KLRContext* ctx_;
  DominantWeight lambda_;
  CycloOptions opts_;
  mutable std::map<RootVector, std::unique_ptr<CyclotomicAlgebra>> cache_;
};

/// Subspace of a quotient algebra spanned by a subset of its basis classes
/// (each basis class sits in a single idempotent block, so idempotent
/// slices are coordinate truncations).
struct Slice {
  const CyclotomicAlgebra* alg = nullptr;
  std::vector<int> slots;
  std::map<int, int> local;

  int dim() const { return static_cast<int>(slots.size()); }
  /// Restriction of full algebra coordinates; throws if the vector has
  /// support outside the slice.
  DenseVec restrict(const DenseVec& full) const;
  DenseVec restrict_or_project(const DenseVec& full) const;
  KLRElement rep(int k) const { return alg->basis_rep(slots[k]); }
  KLRElement element(const DenseVec& v) const;
};

/// e(beta,i)R^L(beta+a_i): algebra basis classes whose left sequence ends
/// in i (the restriction kernel).
Slice e_slice(const CyclotomicAlgebra& upper, int i);
/// R^L(beta+a_i)e(beta,i): right sequence ends in i (the induction kernel).
Slice f_slice(const CyclotomicAlgebra& upper, int i);
/// e(beta,i)R^L(beta+a_i)e(beta,i): both.
Slice ef_slice(const CyclotomicAlgebra& upper, int i);

/// A one-sided module over a quotient algebra, as the action matrix of
/// every algebra basis class (right action for right modules).
struct ModuleOps {
  const CyclotomicAlgebra* alg = nullptr;
  int dim = 0;
  std::vector<DenseMat> act;
};

/// M (x)_A N computed from a presentation of M: minimal generators m_k
/// (lifting a basis of M/(M rad A)), the kernel of (a_k) -> sum m_k a_k,
/// and the induced relations inside N^r.  Basis vectors are pure tensors
/// m_{g} (x) n.
struct TensorModule {
  int dim = 0;
  std::vector<int> gens;                     // M basis slots of the m_k
  std::vector<std::pair<int, int>> basis;    // (generator index, N slot)
  int nslots = 0;                            // dim N
  std::unique_ptr<CoordQuotient> quot;       // on k^{r * dim N}
  std::vector<DenseVec> lift;                // per M slot: xi in k^{r*dimA}
  std::vector<DenseMat> nact;                // A basis acting on N

  /// Class coordinates of u (x) v for u in M-coordinates, v in
  /// N-coordinates.
  DenseVec pair(const DenseVec& u, const DenseVec& v) const;
};

TensorModule tensor_over(const ModuleOps& M, const ModuleOps& N);

/// Generator-action data of a bimodule: matrices for every generator
/// (idempotents, x's, taus) of both acting algebras.
struct Bimodule {
  const CyclotomicAlgebra* left = nullptr;
  const CyclotomicAlgebra* right = nullptr;
  int dim = 0;
  std::vector<DenseMat> lidem, lx, ltau, ridem, rx, rtau;
};

struct BimoduleMap {
  const Bimodule* src = nullptr;
  const Bimodule* dst = nullptr;
  DenseMat mat;  // columns are images of source basis vectors
};

/// Left and right actions commute on all generator pairs; idempotents on
/// each side are orthogonal projections summing to the identity.
bool bimodule_ok(const Bimodule& b);
/// The matrix intertwines every generator action of both sides.
bool intertwines(const BimoduleMap& f);

struct RhoReport {
  int lambda_i = 0;
  bool plus_case = true;  // lambda_i >= 0 shape
  int dim_fe = 0, dim_ef = 0, dim_alg = 0;
  bool ledger_ok = false;
  bool bijective = false;
};

/// All biadjunction data at one (beta, i): the kernels, sigma, rho with
/// its exact inverse, the canonical unit/counit and the biadjoint pair.
class BiadjointCell {
 public:
  BiadjointCell(const AlgebraTower& tower, RootVector beta, int i,
                bool flip_eta_sign = false);

  const RootVector& beta() const { return beta_; }
  int color() const { return i_; }
  int lambda_i() const { return lam_; }
  const RhoReport& rho_report() const { return rho_report_; }

  const CyclotomicAlgebra& lower() const { return *a0_; }
  const CyclotomicAlgebra& upper() const { return *ap_; }
  const Slice& ef() const { return ef_; }          // inside upper()
  const TensorModule& fe() const { return fe_; }   // over algebra below beta
  /// Representatives of the s-th FE basis tensor: (a in A0, b in A0) as
  /// coordinate vectors of the lower algebra.
  DenseVec fe_left_rep(int s) const;
  DenseVec fe_right_rep(int s) const;
  KLRElement fe_left_element(int s) const;
  KLRElement fe_right_element(int s) const;

  /// sigma: FE -> EF, a (x) b -> a tau_n b.
  const DenseMat& sigma() const { return sigma_; }
  /// Multiplication T_k: FE -> R^L(beta), a (x) b -> a x_n^k b.
  DenseMat t_map(int k) const;
  /// Unit of (F -| E): R^L(beta) -> EF, 1 -> e(beta,i).
  const DenseMat& eta() const { return eta_; }
  /// eta-hat: R^L(beta) -> FE; eps-hat: EF -> R^L(beta).
  const DenseMat& eta_hat() const { return eta_hat_; }
  const DenseMat& eps_hat() const { return eps_hat_; }

  /// eta-hat(1) expanded over FE basis tensors.
  DenseVec eta_hat_unit() const;

 private:
  const AlgebraTower* tower_;
  RootVector beta_;
  int i_, n_, lam_;
  bool flip_;
  const CyclotomicAlgebra* a0_;
  const CyclotomicAlgebra* ap_;
  const CyclotomicAlgebra* am_ = nullptr;  // below beta, when defined
  Slice ef_;
  Slice m_;  // A0 e(beta-a_i, i), the FE left factor
  Slice n_side_;  // e(beta-a_i, i) A0, the FE right factor
  TensorModule fe_;
  DenseMat sigma_, eta_, rho_, rho_inv_, eta_hat_, eps_hat_;
  RhoReport rho_report_;
};

struct ZigzagReport {
  bool ok_e = true, ok_f = true;
  std::string witness;
};

/// Both compositions of Theorem-level biadjointness: the E-side endo of
/// e(beta,i)R^L(beta+a_i) and the F-side endo of R^L(beta+a_i)e(beta,i)
/// must be identities.
ZigzagReport verify_zigzag(const AlgebraTower& tower, const RootVector& beta,
                           int i, bool flip_eta_sign = false);

/// Canonical triangle identities of (F -| E) at (beta, i).
bool verify_triangles(const AlgebraTower& tower, const RootVector& beta, int i);

struct EqReport {
  bool applicable = false;
  bool ok = false;
  std::string detail;
};

/// Membership of x_{n+2}^{l-2}e + x_{n+1}^{l-1}tau_{n+1}e in the stated
/// subspace of e(beta,i^2)R^L(beta+2a_i)e(beta+a_i,i); needs lambda_i >= 2.
EqReport check_eq1(const AlgebraTower& tower, const RootVector& beta, int i);

/// Existence of u with Sigma(u)=0, E~(u)=e(beta,i) and the tau_n support
/// condition; needs lambda_i = 1.  On success, detail renders u.
EqReport solve_eq2(const AlgebraTower& tower, const RootVector& beta, int i);

/// Existence of v with T_k(v)=0 (k <= -lambda_i-1), T_{-lambda_i}(v)=e,
/// G(v)=0, H_k(v)=0 (k <= -lambda_i), H_{1-lambda_i}(v)=e; needs
/// lambda_i <= 0 and beta - a_i in Q^+.
EqReport solve_eq3(const AlgebraTower& tower, const RootVector& beta, int i);

/// Splitting test: M is projective iff the surjection A^r -> M from a
/// minimal generating set splits as a module map (free case short-cut by
/// an exact rank certificate).
bool is_projective(const ModuleOps& M, const std::vector<DenseMat>& regular);

/// Right-regular and left-regular structure constants of an algebra.
std::vector<DenseMat> regular_right(const CyclotomicAlgebra& a);
std::vector<DenseMat> regular_left(const CyclotomicAlgebra& a);

/// e/f kernels as one-sided modules over the stated algebra.
ModuleOps f_kernel_right_module(const AlgebraTower& tower,
                                const RootVector& beta, int i);
ModuleOps e_kernel_left_module(const AlgebraTower& tower,
                               const RootVector& beta, int i);

/// The kernels with both actions, as checkable bimodules.
Bimodule f_kernel_bimodule(const AlgebraTower& tower, const RootVector& beta,
                           int i);
Bimodule e_kernel_bimodule(const AlgebraTower& tower, const RootVector& beta,
                           int i);

} // namespace klr
