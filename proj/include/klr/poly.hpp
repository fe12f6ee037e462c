#pragma once

#include <map>
#include <string>
#include <vector>

#include "klr/rational.hpp"

namespace klr {

/// Multivariate polynomial with exact rational coefficients, exponent
/// vectors of a fixed arity.  Zero coefficients are never stored.
class Poly {
 public:
  using Expo = std::vector<int>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int k, int power = 1);
  static Poly monomial(Expo e, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Expo, Rational>& terms() const { return terms_; }

  void add_term(const Expo& e, const Rational& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  /// Applies the transposition of variables a and b.
  Poly swap_vars(int a, int b) const;

  /// (swap_{a,b} f - f) / (x_a - x_b); always exact.
  Poly divided_difference(int a, int b) const;

  int total_degree() const;
  /// Degree in a single variable.
  int degree_in(int k) const;

  /// Substitutes x_k -> g for a polynomial g with the same arity.
  Poly substitute(int k, const Poly& g) const;

  std::string str(const std::vector<std::string>& var_names = {}) const;

 private:
  int nvars_ = 0;
  std::map<Expo, Rational> terms_;
};

/// Divided difference of a single monomial x^e in variables a, b:
/// exact expansion without polynomial division.
Poly monomial_divided_difference(const Poly::Expo& e, const Rational& c, int a,
                                 int b);

} // namespace klr
