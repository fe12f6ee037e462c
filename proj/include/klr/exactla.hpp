#pragma once

#include <map>
#include <optional>
#include <vector>

#include "klr/rational.hpp"

namespace klr {

/// Sparse vector over the rationals, indexed by column.  Zero entries are
/// never stored.
using SparseVec = std::map<int, Rational>;

void axpy(SparseVec& y, const Rational& c, const SparseVec& x);
SparseVec scaled(const SparseVec& x, const Rational& c);

/// Incremental reduced row echelon form with optional tracking of how each
/// stored row decomposes over the originally inserted vectors.
class Echelon {
 public:
  explicit Echelon(bool track = false) : track_(track) {}

  /// Reduces v against the current rows.  The residual vanishes on every
  /// pivot column.  When tracking, *combo receives coefficients over the
  /// insertion indices with v = residual + sum combo[i] * inserted_i.
  SparseVec reduce(SparseVec v, std::map<int, Rational>* combo = nullptr) const;

  /// Returns the pivot column if v was independent, -1 otherwise.  When
  /// tracking and v was dependent, *dependency receives the combination
  /// with v = sum dependency[i] * inserted_i.
  int insert(SparseVec v, std::map<int, Rational>* dependency = nullptr);

  bool contains(const SparseVec& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int inserted() const { return ninserted_; }
  const std::map<int, SparseVec>& rows() const { return rows_; }

 private:
  std::map<int, SparseVec> rows_;            // pivot -> row (RREF, unit pivot)
  std::map<int, std::map<int, Rational>> combos_;
  int ninserted_ = 0;
  bool track_;
};

/// Basis of { x : sum_i x_i v_i = 0 } for the given list of vectors.
std::vector<std::vector<Rational>> column_kernel(
    const std::vector<SparseVec>& vecs);

/// Coefficients x with sum_i x_i v_i = target, if the target lies in the
/// span; nullopt otherwise.
std::optional<std::vector<Rational>> express_in_span(
    const std::vector<SparseVec>& vecs, const SparseVec& target);

int rank_of(const std::vector<SparseVec>& vecs);

using DenseVec = std::vector<Rational>;
/// Dense matrix stored as a list of columns.
using DenseMat = std::vector<DenseVec>;

DenseVec mat_vec(const DenseMat& m, const DenseVec& v);
DenseMat mat_mul(const DenseMat& a, const DenseMat& b);
DenseMat identity_mat(int n);
SparseVec to_sparse(const DenseVec& v);
DenseVec add_vec(const DenseVec& a, const DenseVec& b);
DenseVec scale_vec(const DenseVec& a, const Rational& c);

/// Quotient of the coordinate space k^{ambient} by the span of `subspace`:
/// coordinates are read off the non-pivot columns after full reduction.
class CoordQuotient {
 public:
  CoordQuotient(int ambient_dim, const std::vector<SparseVec>& subspace);

  int dim() const { return static_cast<int>(basis_cols_.size()); }
  const std::vector<int>& basis_columns() const { return basis_cols_; }
  /// Dense coordinates of the class of v, length dim().
  std::vector<Rational> coords(const SparseVec& v) const;

 private:
  Echelon ech_;
  std::vector<int> basis_cols_;
  std::map<int, int> col_slot_;
};

} // namespace klr
