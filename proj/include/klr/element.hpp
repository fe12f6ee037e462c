#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klr/cartan.hpp"
#include "klr/perm.hpp"
#include "klr/poly.hpp"

namespace klr {

/// Normal-form basis monomial x^a tau_w e(nu).  The word for tau_w is the
/// lexicographically smallest reduced word of w; the left idempotent is
/// e(w.nu), the right idempotent e(nu).
struct Monomial {
  std::vector<int> xexp;
  Perm w;
  std::vector<int> nu;

  int n() const { return static_cast<int>(nu.size()); }
  std::vector<int> left_seq() const { return w.apply(nu); }

  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial& o) const {
    if (auto c = nu <=> o.nu; c != 0) return c;
    if (auto c = w <=> o.w; c != 0) return c;
    return xexp <=> o.xexp;
  }
};

/// A finite rational combination of normal-form monomials.
class KLRElement {
 public:
  KLRElement() = default;

  static KLRElement single(Monomial m, Rational c = 1);

  void add_term(const Monomial& m, const Rational& c);
  KLRElement& operator+=(const KLRElement& o);
  KLRElement& operator-=(const KLRElement& o);
  KLRElement operator+(const KLRElement& o) const;
  KLRElement operator-(const KLRElement& o) const;
  KLRElement operator*(const Rational& c) const;
  KLRElement operator-() const;
  bool operator==(const KLRElement& o) const { return terms_ == o.terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  int max_tau_length() const;
  int max_x_exponent() const;

 private:
  std::map<Monomial, Rational> terms_;
};

/// e(nu) as an element.
KLRElement idempotent(const std::vector<int>& nu);
/// Sum of e(nu) over a list of sequences.
KLRElement idempotent_sum(const std::vector<std::vector<int>>& seqs);
/// x_k e(nu), 0-based position k.
KLRElement x_gen(int k, const std::vector<int>& nu, int power = 1);
/// tau_l e(nu), 0-based letter l (crossing of strands l, l+1).
KLRElement tau_gen(int l, const std::vector<int>& nu);
/// x^a e(nu).
KLRElement x_monomial(const std::vector<int>& a, const std::vector<int>& nu);

/// Extends an element of R(beta) into R(beta + content(extra)) by appending
/// the labels `extra` to every sequence (idempotent-truncated inclusion).
KLRElement embed_append(const KLRElement& e, const std::vector<int>& extra);

/// Straightening engine for one Cartan datum and Q-matrix.  Caches normal
/// forms of tau_l tau_w e(nu) across calls; all arithmetic is exact.
class KLRContext {
 public:
  KLRContext(CartanDatum datum, QMatrix q);

  const CartanDatum& datum() const { return datum_; }
  const QMatrix& q() const { return q_; }

  /// Q_{ij}(x_va, x_vb) as a polynomial in nvars variables.
  Poly q_poly(int i, int j, int va, int vb, int nvars) const;
  /// (Q_{ij}(x_va, x_vb) - Q_{ij}(x_vc, x_vb)) / (x_va - x_vc), expanded.
  Poly qbar_poly(int i, int j, int va, int vb, int vc, int nvars) const;

  KLRElement multiply(const KLRElement& a, const KLRElement& b) const;
  /// Left multiplication by the generator tau_l (0-based letter).
  KLRElement lmul_tau(int l, const KLRElement& e) const;
  /// Left multiplication by x_k^power (0-based position).
  KLRElement lmul_x(int k, const KLRElement& e, int power = 1) const;

  /// The anti-involution fixing e(nu), x_k and tau_l.
  KLRElement psi(const KLRElement& e) const;

  /// Degree of a basis monomial under the standard Z-grading.
  int degree(const Monomial& m) const;
  /// Degree of a homogeneous element; nullopt when mixed, 0 for zero.
  std::optional<int> degree(const KLRElement& e) const;

  /// The intertwiner phi_l = ((x_l - x_{l+1}) tau_l + 1) e(nu) when
  /// nu_l = nu_{l+1} and tau_l e(nu) otherwise, summed over `seqs`.
  KLRElement intertwiner(int l, const std::vector<std::vector<int>>& seqs) const;

  /// Q_{a,b} = sum_nu Q_{nu_a, nu_b}(x_a, x_b) e(nu) over `seqs` (0-based
  /// positions a != b).
  KLRElement q_element(int a, int b,
                       const std::vector<std::vector<int>>& seqs) const;
  /// Qbar_{a,b,c}: the difference quotient in positions a, c, supported on
  /// sequences with nu_a = nu_c.
  KLRElement qbar_element(int a, int b, int c,
                          const std::vector<std::vector<int>>& seqs) const;

  std::string str(const KLRElement& e) const;
  std::string str(const Monomial& m, const Rational& c) const;

 private:
  /// Normal form of tau_l tau_w e(nu); memoized.
  const KLRElement& tau_push(int l, const Perm& w,
                             const std::vector<int>& nu) const;
  /// Normal form of tau_W e(nu) for a reduced word W.
  KLRElement reduced_to_normal(const std::vector<int>& word,
                               const std::vector<int>& nu) const;
  KLRElement lmul_tau_mono(int l, const Monomial& m, const Rational& c) const;

  CartanDatum datum_;
  QMatrix q_;
  mutable std::map<std::tuple<int, std::vector<int>, std::vector<int>>,
                   KLRElement>
      push_cache_;
};

} // namespace klr
