#include "klr/exactla.hpp"

namespace klr {

void axpy(SparseVec& y, const Rational& c, const SparseVec& x) {
  if (c == 0) return;
  for (const auto& [k, v] : x) {
    auto [it, fresh] = y.emplace(k, c * v);
    if (!fresh) {
      it->second += c * v;
      if (it->second == 0) y.erase(it);
    }
  }
}

SparseVec scaled(const SparseVec& x, const Rational& c) {
  SparseVec y;
  if (c == 0) return y;
  for (const auto& [k, v] : x) y.emplace(k, c * v);
  return y;
}

SparseVec Echelon::reduce(SparseVec v, std::map<int, Rational>* combo) const {
  if (combo) combo->clear();
  // Rows are fully reduced, so one increasing pass clears every pivot.
  for (auto it = v.begin(); it != v.end();) {
    if (it->second == 0) {
      it = v.erase(it);
      continue;
    }
    auto rit = rows_.find(it->first);
    if (rit == rows_.end()) {
      ++it;
      continue;
    }
    const Rational c = it->second;
    if (combo && track_) {
      for (const auto& [i, t] : combos_.at(it->first)) {
        auto [cit, fresh] = combo->emplace(i, c * t);
        if (!fresh) {
          cit->second += c * t;
          if (cit->second == 0) combo->erase(cit);
        }
      }
    }
    axpy(v, -c, rit->second);
    it = v.lower_bound(rit->first);
  }
  return v;
}

int Echelon::insert(SparseVec v, std::map<int, Rational>* dependency) {
  std::map<int, Rational> combo;
  SparseVec r = reduce(std::move(v), track_ ? &combo : nullptr);
  const int idx = ninserted_++;
  if (r.empty()) {
    if (dependency) *dependency = std::move(combo);
    return -1;
  }
  const int pivot = r.begin()->first;
  const Rational lead = r.begin()->second;
  for (auto& [k, c] : r) c /= lead;
  std::map<int, Rational> newcombo;
  if (track_) {
    // r = (v - sum combo_i * orig_i) so row = r/lead decomposes as
    // (e_idx - combo)/lead over the original vectors.
    newcombo[idx] = Rational(1) / lead;
    for (const auto& [i, t] : combo) {
      newcombo[i] -= t / lead;
      if (newcombo[i] == 0) newcombo.erase(i);
    }
  }
  // Keep existing rows reduced against the new pivot.
  for (auto& [p, row] : rows_) {
    auto it = row.find(pivot);
    if (it == row.end()) continue;
    const Rational c = it->second;
    axpy(row, -c, r);
    if (track_) {
      auto& cb = combos_[p];
      for (const auto& [i, t] : newcombo) {
        auto [cit, fresh] = cb.emplace(i, -c * t);
        if (!fresh) {
          cit->second -= c * t;
          if (cit->second == 0) cb.erase(cit);
        }
      }
    }
  }
  rows_.emplace(pivot, std::move(r));
  if (track_) combos_.emplace(pivot, std::move(newcombo));
  return pivot;
}

bool Echelon::contains(const SparseVec& v) const { return reduce(v).empty(); }

std::vector<std::vector<Rational>> column_kernel(
    const std::vector<SparseVec>& vecs) {
  Echelon ech(true);
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    std::map<int, Rational> dep;
    if (ech.insert(vecs[i], &dep) == -1) {
      std::vector<Rational> x(vecs.size(), Rational(0));
      x[i] = 1;
      for (const auto& [j, c] : dep) x.at(j) -= c;
      out.push_back(std::move(x));
    }
  }
  return out;
}

std::optional<std::vector<Rational>> express_in_span(
    const std::vector<SparseVec>& vecs, const SparseVec& target) {
  Echelon ech(true);
  for (const auto& v : vecs) ech.insert(v);
  std::map<int, Rational> combo;
  SparseVec r = ech.reduce(target, &combo);
  if (!r.empty()) return std::nullopt;
  std::vector<Rational> x(vecs.size(), Rational(0));
  for (const auto& [j, c] : combo) x.at(j) = c;
  return x;
}

int rank_of(const std::vector<SparseVec>& vecs) {
  Echelon ech;
  for (const auto& v : vecs) ech.insert(v);
  return ech.rank();
}

DenseVec mat_vec(const DenseMat& m, const DenseVec& v) {
  if (m.empty()) return {};
  DenseVec out(m.front().size(), Rational(0));
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (v.at(j) == 0) continue;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += v[j] * m[j][i];
  }
  return out;
}

DenseMat mat_mul(const DenseMat& a, const DenseMat& b) {
  DenseMat out;
  out.reserve(b.size());
  for (const auto& col : b) out.push_back(mat_vec(a, col));
  return out;
}

DenseMat identity_mat(int n) {
  DenseMat m(n, DenseVec(n, Rational(0)));
  for (int k = 0; k < n; ++k) m[k][k] = 1;
  return m;
}

SparseVec to_sparse(const DenseVec& v) {
  SparseVec s;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) s.emplace(static_cast<int>(k), v[k]);
  return s;
}

DenseVec add_vec(const DenseVec& a, const DenseVec& b) {
  DenseVec out = a;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += b.at(k);
  return out;
}

DenseVec scale_vec(const DenseVec& a, const Rational& c) {
  DenseVec out = a;
  for (auto& v : out) v *= c;
  return out;
}

CoordQuotient::CoordQuotient(int ambient_dim,
                             const std::vector<SparseVec>& subspace) {
  for (const auto& v : subspace) ech_.insert(v);
  for (int k = 0; k < ambient_dim; ++k)
    if (!ech_.rows().count(k)) {
      col_slot_[k] = static_cast<int>(basis_cols_.size());
      basis_cols_.push_back(k);
    }
}

std::vector<Rational> CoordQuotient::coords(const SparseVec& v) const {
  SparseVec r = ech_.reduce(v);
  std::vector<Rational> out(basis_cols_.size(), Rational(0));
  for (const auto& [k, c] : r) out.at(col_slot_.at(k)) = c;
  return out;
}

} // namespace klr
