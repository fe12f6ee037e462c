#include "klr/poly.hpp"

#include <sstream>

namespace klr {

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Expo(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int k, int power) {
  Poly p(nvars);
  Expo e(nvars, 0);
  e.at(k) = power;
  p.add_term(e, Rational(1));
  return p;
}

Poly Poly::monomial(Expo e, const Rational& c) {
  Poly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

void Poly::add_term(const Expo& e, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Expo e = e1;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
      r.add_term(e, c1 * c2);
    }
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, t] : terms_) r.terms_[e] = t * c;
  return r;
}

Poly Poly::operator-() const { return *this * Rational(-1); }

Poly Poly::swap_vars(int a, int b) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Expo f = e;
    std::swap(f.at(a), f.at(b));
    r.add_term(f, c);
  }
  return r;
}

Poly monomial_divided_difference(const Poly::Expo& e, const Rational& c, int a,
                                 int b) {
  // (x_b^p x_a^q - x_a^p x_b^q)/(x_a - x_b) with p = e[a], q = e[b]:
  //   p > q:  -x_a^q x_b^q * sum_{t=0}^{p-q-1} x_a^t x_b^{p-q-1-t}
  //   p < q:  +x_a^p x_b^p * sum_{t=0}^{q-p-1} x_a^t x_b^{q-p-1-t}
  //   p == q: 0
  const int n = static_cast<int>(e.size());
  Poly r(n);
  const int p = e.at(a), q = e.at(b);
  if (p == q) return r;
  const int lo = std::min(p, q);
  const int diff = std::abs(p - q);
  const Rational sign = (p > q) ? Rational(-1) : Rational(1);
  for (int t = 0; t < diff; ++t) {
    Poly::Expo f = e;
    f[a] = lo + t;
    f[b] = lo + diff - 1 - t;
    r.add_term(f, sign * c);
  }
  return r;
}

Poly Poly::divided_difference(int a, int b) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) r += monomial_divided_difference(e, c, a, b);
  return r;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (int v : e) t += v;
    d = std::max(d, t);
  }
  return d;
}

int Poly::degree_in(int k) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(k));
  return d;
}

Poly Poly::substitute(int k, const Poly& g) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Expo base = e;
    const int pw = base.at(k);
    base[k] = 0;
    Poly term = Poly::monomial(base, c);
    for (int t = 0; t < pw; ++t) term = term * g;
    r += term;
  }
  return r;
}

std::string Poly::str(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      os << "*";
      if (k < var_names.size())
        os << var_names[k];
      else
        os << "x" << (k + 1);
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  return os.str();
}

} // namespace klr
