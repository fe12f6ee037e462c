#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "klr/rational.hpp"

namespace klr {

/// Thrown when input data violates a structural axiom; the message names
/// the axiom that failed.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An element of the positive root lattice Q^+, as multiplicities of the
/// simple roots.
struct RootVector {
  std::vector<int> coeff;

  RootVector() = default;
  explicit RootVector(std::vector<int> c);
  static RootVector zero(std::size_t rank) { return RootVector(std::vector<int>(rank, 0)); }

  int height() const;
  std::size_t rank() const { return coeff.size(); }

  RootVector plus_alpha(int i, int times = 1) const;
  // Returns nullopt when the result would leave Q^+.
  std::optional<RootVector> minus_alpha(int i, int times = 1) const;

  bool operator==(const RootVector&) const = default;
  auto operator<=>(const RootVector&) const = default;
};

/// Multiplicities <h_i, Lambda> of a dominant integral weight.
struct DominantWeight {
  std::vector<int> ell;

  DominantWeight() = default;
  explicit DominantWeight(std::vector<int> e);

  std::size_t rank() const { return ell.size(); }
  bool operator==(const DominantWeight&) const = default;
};

/// A symmetrizable generalized Cartan matrix with chosen symmetrizers,
/// labels ordered as given in the configuration.  Immutable once validated.
class CartanDatum {
 public:
  static CartanDatum validate(std::vector<std::string> labels,
                              std::vector<std::vector<int>> matrix,
                              std::optional<std::vector<int>> symmetrizers = {});

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  int label_index(const std::string& s) const;

  int a(int i, int j) const { return matrix_[i][j]; }
  int d(int i) const { return d_[i]; }

  // (alpha_i | alpha_j) = d_i a_ij
  int bilinear(int i, int j) const { return d_[i] * matrix_[i][j]; }

  // lambda_i = <h_i, Lambda - beta> = ell_i - sum_j a_ij beta_j
  int lambda_i(const DominantWeight& L, const RootVector& beta, int i) const;

  const std::vector<std::vector<int>>& matrix() const { return matrix_; }
  const std::vector<int>& symmetrizers() const { return d_; }

 private:
  CartanDatum(std::vector<std::string> labels, std::vector<std::vector<int>> m,
              std::vector<int> d);

  std::vector<std::string> labels_;
  std::vector<std::vector<int>> matrix_;
  std::vector<int> d_;
};

/// Coefficients of the polynomials Q_ij(u,v) = sum t_{i,j;p,q} u^p v^q for
/// i != j (Q_ii = 0).  Entries are stored once per ordered pair and kept
/// consistent with t_{i,j;p,q} = t_{j,i;q,p}.
class QMatrix {
 public:
  struct Entry {
    int p, q;
    Rational t;
  };

  // Q_ij(u,v) = u^{-a_ij} + v^{-a_ji}, all t = 1.
  static QMatrix default_q(const CartanDatum& datum);

  // Validates user-supplied entries against the degree constraint
  // (a_i|a_i)p + (a_j|a_j)q = -2(a_i|a_j) and the unit condition on
  // t_{i,j;-a_ij,0}.
  static QMatrix from_entries(
      const CartanDatum& datum,
      const std::map<std::pair<int, int>, std::vector<Entry>>& entries);

  // Entries of Q_ij in some fixed order; empty when i == j.
  const std::vector<Entry>& entries(int i, int j) const;

  // Q_ij evaluated coefficientwise: t for (p,q), 0 when absent.
  Rational coeff(int i, int j, int p, int q) const;

 private:
  explicit QMatrix(std::size_t rank);
  // indexed [i][j]; [i][i] empty
  std::vector<std::vector<std::vector<Entry>>> table_;
};

/// All sequences nu in I^n with content beta, lexicographically ordered by
/// label index.
std::vector<std::vector<int>> enumerate_Ibeta(const CartanDatum& datum,
                                              const RootVector& beta);

/// ht(beta)! / prod beta_i!  (the expected size of I^beta).
BigInt multinomial(const RootVector& beta);

} // namespace klr
