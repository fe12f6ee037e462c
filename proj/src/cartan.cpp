#include "klr/cartan.hpp"

#include <algorithm>
#include <numeric>

namespace klr {

RootVector::RootVector(std::vector<int> c) : coeff(std::move(c)) {
  for (int v : coeff)
    if (v < 0) throw ValidationError("root vector entries must be >= 0");
}

int RootVector::height() const {
  return std::accumulate(coeff.begin(), coeff.end(), 0);
}

RootVector RootVector::plus_alpha(int i, int times) const {
  RootVector r = *this;
  r.coeff.at(i) += times;
  return r;
}

std::optional<RootVector> RootVector::minus_alpha(int i, int times) const {
  RootVector r = *this;
  r.coeff.at(i) -= times;
  if (r.coeff[i] < 0) return std::nullopt;
  return r;
}

DominantWeight::DominantWeight(std::vector<int> e) : ell(std::move(e)) {
  for (int v : ell)
    if (v < 0) throw ValidationError("dominant weight entries must be >= 0");
}

CartanDatum::CartanDatum(std::vector<std::string> labels,
                         std::vector<std::vector<int>> m, std::vector<int> d)
    : labels_(std::move(labels)), matrix_(std::move(m)), d_(std::move(d)) {}

int CartanDatum::label_index(const std::string& s) const {
  auto it = std::find(labels_.begin(), labels_.end(), s);
  if (it == labels_.end()) throw ValidationError("unknown label: " + s);
  return static_cast<int>(it - labels_.begin());
}

int CartanDatum::lambda_i(const DominantWeight& L, const RootVector& beta,
                          int i) const {
  int v = L.ell.at(i);
  for (std::size_t j = 0; j < rank(); ++j) v -= matrix_[i][j] * beta.coeff.at(j);
  return v;
}

namespace {

// Minimal positive symmetrizers for a GCM, when they exist: propagate
// d_j = d_i * a_ij / a_ji along edges, then clear denominators per component.
std::vector<int> minimal_symmetrizers(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Rational> r(n, 0);
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = ncomp;
    r[s] = 1;
    std::vector<int> stack{s};
    std::vector<int> members{s};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0) continue;
        Rational want = r[i] * a[i][j] / a[j][i];
        if (want <= 0)
          throw ValidationError("no positive symmetrizer exists");
        if (comp[j] == -1) {
          comp[j] = ncomp;
          r[j] = want;
          stack.push_back(j);
          members.push_back(j);
        } else if (r[j] != want) {
          throw ValidationError("no symmetrizer exists: inconsistent ratios");
        }
      }
    }
    // Scale this component to minimal positive integers.
    BigInt L = 1;
    for (int i : members) L = lcm(L, denominator(r[i]));
    BigInt g = 0;
    for (int i : members) g = gcd(g, BigInt(numerator(r[i]) * (L / denominator(r[i]))));
    for (int i : members) r[i] = r[i] * L / g;
    ++ncomp;
  }
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i) d[i] = static_cast<int>(numerator(r[i]));
  return d;
}

} // namespace

CartanDatum CartanDatum::validate(std::vector<std::string> labels,
                                  std::vector<std::vector<int>> matrix,
                                  std::optional<std::vector<int>> symmetrizers) {
  const std::size_t n = matrix.size();
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  }
  if (labels.size() != n)
    throw ValidationError("label count does not match matrix size");
  {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ValidationError("duplicate labels");
  }
  for (const auto& row : matrix)
    if (row.size() != n) throw ValidationError("cartan matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i][i] != 2)
      throw ValidationError("cartan axiom (i): a_ii=2 violated");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && matrix[i][j] > 0)
        throw ValidationError("cartan axiom (ii): a_ij<=0 for i!=j violated");
      if ((matrix[i][j] == 0) != (matrix[j][i] == 0))
        throw ValidationError("cartan axiom (iii): a_ij=0 iff a_ji=0 violated");
    }
  }
  std::vector<int> d;
  if (symmetrizers) {
    d = *symmetrizers;
    if (d.size() != n) throw ValidationError("symmetrizer count mismatch");
    for (int v : d)
      if (v <= 0)
        throw ValidationError("cartan axiom (iv): symmetrizers must be positive");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i] * matrix[i][j] != d[j] * matrix[j][i])
          throw ValidationError("cartan axiom (iv): DA not symmetric");
  } else {
    d = minimal_symmetrizers(matrix);
  }
  return CartanDatum(std::move(labels), std::move(matrix), std::move(d));
}

QMatrix::QMatrix(std::size_t rank)
    : table_(rank, std::vector<std::vector<Entry>>(rank)) {}

QMatrix QMatrix::default_q(const CartanDatum& datum) {
  const int n = static_cast<int>(datum.rank());
  QMatrix q(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      q.table_[i][j].push_back({-datum.a(i, j), 0, Rational(1)});
      if (datum.a(i, j) != 0 || datum.a(j, i) != 0)
        q.table_[i][j].push_back({0, -datum.a(j, i), Rational(1)});
      else
        q.table_[i][j].push_back({0, 0, Rational(1)});
    }
  // a_ij = 0: Q_ij = u^0 + v^0 = 2?  No: -a_ij = 0 and -a_ji = 0 collide.
  // Collapse duplicate (p,q) slots.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto& es = q.table_[i][j];
      std::vector<Entry> merged;
      for (const auto& e : es) {
        bool found = false;
        for (auto& m : merged)
          if (m.p == e.p && m.q == e.q) {
            found = true;  // keep a single unit entry
          }
        if (!found) merged.push_back(e);
      }
      es = std::move(merged);
    }
  return q;
}

QMatrix QMatrix::from_entries(
    const CartanDatum& datum,
    const std::map<std::pair<int, int>, std::vector<Entry>>& entries) {
  const int n = static_cast<int>(datum.rank());
  QMatrix q(n);
  for (const auto& [key, es] : entries) {
    auto [i, j] = key;
    if (i == j) throw ValidationError("Q_ii must be zero");
    for (const auto& e : es) {
      if (e.t == 0) continue;
      // degree constraint: (a_i|a_i)p + (a_j|a_j)q = -2(a_i|a_j)
      if (datum.bilinear(i, i) * e.p + datum.bilinear(j, j) * e.q !=
          -2 * datum.bilinear(i, j))
        throw ValidationError("Q entry violates the degree constraint");
      q.table_[i][j].push_back(e);
      q.table_[j][i].push_back({e.q, e.p, e.t});
    }
  }
  // symmetry consistency + deduplication + leading unit
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      auto& es = q.table_[i][j];
      std::map<std::pair<int, int>, Rational> acc;
      bool dup = false;
      for (const auto& e : es) {
        auto [it, fresh] = acc.emplace(std::make_pair(e.p, e.q), e.t);
        if (!fresh) {
          if (it->second != e.t)
            throw ValidationError("Q entry symmetry t_{i,j;p,q}=t_{j,i;q,p} violated");
          dup = true;
        }
      }
      (void)dup;
      es.clear();
      for (const auto& [pq, t] : acc) es.push_back({pq.first, pq.second, t});
      if (q.coeff(i, j, -datum.a(i, j), 0) == 0)
        throw ValidationError("Q leading coefficient t_{i,j;-a_ij,0} must be a unit");
    }
  return q;
}

const std::vector<QMatrix::Entry>& QMatrix::entries(int i, int j) const {
  return table_.at(i).at(j);
}

Rational QMatrix::coeff(int i, int j, int p, int q) const {
  if (i == j) return 0;
  for (const auto& e : table_.at(i).at(j))
    if (e.p == p && e.q == q) return e.t;
  return 0;
}

std::vector<std::vector<int>> enumerate_Ibeta(const CartanDatum& datum,
                                              const RootVector& beta) {
  (void)datum;
  std::vector<std::vector<int>> out;
  std::vector<int> left = beta.coeff;
  std::vector<int> cur;
  const int n = beta.height();
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < left.size(); ++i) {
      if (left[i] == 0) continue;
      --left[i];
      cur.push_back(static_cast<int>(i));
      self(self);
      cur.pop_back();
      ++left[i];
    }
  };
  rec(rec);
  return out;
}

BigInt multinomial(const RootVector& beta) {
  BigInt r = 1;
  int total = 0;
  for (int c : beta.coeff)
    for (int k = 1; k <= c; ++k) {
      ++total;
      r = r * total / k;
    }
  return r;
}

} // namespace klr
