#pragma once

#include <map>
#include <vector>

#include "klr/element.hpp"
#include "klr/exactla.hpp"

namespace klr {

struct CycloOptions {
  int max_degree = 120;      // hard bound on the graded truncation
  bool check_relations = true;
};

/// The cyclotomic quotient at one weight space, computed degree by degree:
/// the defining ideal is homogeneous and x^Lambda_1 times a basis monomial
/// is again a monomial, so each graded piece of the ideal is spanned by
/// explicit products and the quotient dimension per degree is exact.  The
/// computation stops once the quotient vanishes on a window of degrees wide
/// enough that every higher monomial factors through it.
class CyclotomicAlgebra {
 public:
  struct Certificates {
    bool closure = false;      // graded pieces complete (structural)
    bool stabilized = false;   // vanishing window found above the top degree
    bool relations = false;    // defining relations hold on the quotient
    int cap = 0;               // highest degree carried by the truncation
    int escapes = 0;           // always 0: nothing is ever dropped
  };

  static CyclotomicAlgebra build(const KLRContext& ctx,
                                 const DominantWeight& lambda,
                                 const RootVector& beta,
                                 CycloOptions opts = {});

  int dim() const { return static_cast<int>(basis_.size()); }
  int strands() const { return n_; }
  const RootVector& beta() const { return beta_; }
  const DominantWeight& lambda() const { return lambda_; }
  const KLRContext& ctx() const { return *ctx_; }
  const std::vector<std::vector<int>>& sequences() const { return seqs_; }
  const Certificates& certificates() const { return certs_; }
  /// Highest degree with a nonzero graded piece (dmin-1 when zero).
  int top_degree() const { return top_degree_; }
  /// Dimension of the graded piece at one degree.
  int graded_dim(int d) const;

  const std::vector<Monomial>& basis() const { return basis_; }
  KLRElement basis_rep(int k) const;
  /// Identity of R(beta) as an element (sum of idempotents).
  KLRElement unit() const;

  /// Coordinates of the class of e over the basis.
  std::vector<Rational> reduce(const KLRElement& e) const;
  KLRElement reduce_to_rep(const KLRElement& e) const;

  /// x_k and tau_l summed over all sequences, as elements of R(beta).
  std::vector<KLRElement> generator_elements() const;

  /// Left/right multiplication by generators on the quotient, as matrices
  /// over the basis (columns are images of basis elements).
  const DenseMat& left_x(int k) const { return lx_.at(k); }
  const DenseMat& left_tau(int l) const { return lt_.at(l); }
  const DenseMat& left_idem(int nu_index) const { return le_.at(nu_index); }
  const DenseMat& right_x(int k) const { return rx_.at(k); }
  const DenseMat& right_tau(int l) const { return rt_.at(l); }
  const DenseMat& right_idem(int nu_index) const { return re_.at(nu_index); }
  int sequence_index(const std::vector<int>& nu) const;

  /// Matrix of left (right) multiplication by a on the quotient.
  DenseMat left_matrix(const KLRElement& a) const;
  DenseMat right_matrix(const KLRElement& a) const;
  DenseVec apply_left(const KLRElement& a, const DenseVec& v) const;
  DenseVec apply_right(const DenseVec& v, const KLRElement& a) const;

  /// Least m with x_k^m e(beta) = 0 in the quotient.
  int nilpotency_index(int k) const;

  /// Jacobson radical via the trace form of the left regular representation
  /// (characteristic zero).
  int radical_dim() const;
  /// Basis of the radical as coordinate vectors over the basis.
  std::vector<DenseVec> radical_basis() const { return radical_vectors(); }
  /// Number of simple modules, as the dimension of the centre of the
  /// semisimple quotient.
  int simple_count() const;

 private:
  CyclotomicAlgebra() = default;

  void precompute_generator_matrices();
  bool verify_relations() const;
  std::vector<DenseVec> radical_vectors() const;

  const KLRContext* ctx_ = nullptr;
  DominantWeight lambda_;
  RootVector beta_;
  int n_ = 0;
  int top_degree_ = 0;
  int dmin_ = 0;
  int dmax_ = 0;
  std::vector<std::vector<int>> seqs_;
  std::map<Monomial, int> col_of_;
  std::vector<Monomial> cols_;
  std::map<int, Echelon> ideal_by_deg_;
  std::map<int, std::vector<int>> cols_by_deg_;
  std::vector<Monomial> basis_;       // representative monomials
  std::map<int, int> basis_slot_;     // column -> basis index
  Certificates certs_;
  std::map<std::vector<int>, int> seq_index_;
  std::vector<DenseMat> lx_, lt_, le_, rx_, rt_, re_;
  std::vector<DenseVec> idem_class_;  // class of e(nu) per sequence
};

/// The defining element x^Lambda_1 = sum_nu x_1^{<h_{nu_1}, Lambda>} e(nu).
KLRElement cyclotomic_seed(const KLRContext& ctx, const DominantWeight& lambda,
                           const std::vector<std::vector<int>>& seqs);

} // namespace klr
