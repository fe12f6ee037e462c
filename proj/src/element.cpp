#include "klr/element.hpp"

#include <algorithm>
#include <sstream>

namespace klr {

KLRElement KLRElement::single(Monomial m, Rational c) {
  KLRElement e;
  e.add_term(m, c);
  return e;
}

void KLRElement::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

KLRElement& KLRElement::operator+=(const KLRElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

KLRElement& KLRElement::operator-=(const KLRElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

KLRElement KLRElement::operator+(const KLRElement& o) const {
  KLRElement r = *this;
  r += o;
  return r;
}

KLRElement KLRElement::operator-(const KLRElement& o) const {
  KLRElement r = *this;
  r -= o;
  return r;
}

KLRElement KLRElement::operator*(const Rational& c) const {
  KLRElement r;
  if (c == 0) return r;
  for (const auto& [m, t] : terms_) r.terms_[m] = t * c;
  return r;
}

KLRElement KLRElement::operator-() const { return *this * Rational(-1); }

int KLRElement::max_tau_length() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.w.length());
  return d;
}

int KLRElement::max_x_exponent() const {
  int d = 0;
  for (const auto& [m, c] : terms_)
    for (int v : m.xexp) d = std::max(d, v);
  return d;
}

KLRElement idempotent(const std::vector<int>& nu) {
  Monomial m{std::vector<int>(nu.size(), 0), Perm::identity(static_cast<int>(nu.size())), nu};
  return KLRElement::single(std::move(m));
}

KLRElement idempotent_sum(const std::vector<std::vector<int>>& seqs) {
  KLRElement e;
  for (const auto& nu : seqs) e += idempotent(nu);
  return e;
}

KLRElement x_gen(int k, const std::vector<int>& nu, int power) {
  std::vector<int> a(nu.size(), 0);
  a.at(k) = power;
  return KLRElement::single({std::move(a), Perm::identity(static_cast<int>(nu.size())), nu});
}

KLRElement tau_gen(int l, const std::vector<int>& nu) {
  const int n = static_cast<int>(nu.size());
  return KLRElement::single(
      {std::vector<int>(n, 0), Perm::identity(n).times_s_right(l), nu});
}

KLRElement x_monomial(const std::vector<int>& a, const std::vector<int>& nu) {
  return KLRElement::single({a, Perm::identity(static_cast<int>(nu.size())), nu});
}

KLRElement embed_append(const KLRElement& e, const std::vector<int>& extra) {
  KLRElement out;
  for (const auto& [m, c] : e.terms()) {
    Monomial big;
    big.xexp = m.xexp;
    big.xexp.insert(big.xexp.end(), extra.size(), 0);
    big.nu = m.nu;
    big.nu.insert(big.nu.end(), extra.begin(), extra.end());
    std::vector<int> img = m.w.one_line();
    for (std::size_t k = 0; k < extra.size(); ++k)
      img.push_back(static_cast<int>(m.nu.size() + k));
    big.w = Perm(std::move(img));
    out.add_term(big, c);
  }
  return out;
}

KLRContext::KLRContext(CartanDatum datum, QMatrix q)
    : datum_(std::move(datum)), q_(std::move(q)) {}

Poly KLRContext::q_poly(int i, int j, int va, int vb, int nvars) const {
  Poly p(nvars);
  if (i == j) return p;
  for (const auto& e : q_.entries(i, j)) {
    Poly::Expo ex(nvars, 0);
    ex.at(va) += e.p;
    ex.at(vb) += e.q;
    p.add_term(ex, e.t);
  }
  return p;
}

Poly KLRContext::qbar_poly(int i, int j, int va, int vb, int vc,
                           int nvars) const {
  // (u^p - w^p)/(u - w) * v^q = sum_{s<p} u^s w^{p-1-s} v^q, termwise.
  Poly p(nvars);
  if (i == j) return p;
  for (const auto& e : q_.entries(i, j)) {
    for (int s = 0; s < e.p; ++s) {
      Poly::Expo ex(nvars, 0);
      ex.at(va) += s;
      ex.at(vc) += e.p - 1 - s;
      ex.at(vb) += e.q;
      p.add_term(ex, e.t);
    }
  }
  return p;
}

KLRElement KLRContext::lmul_x(int k, const KLRElement& e, int power) const {
  KLRElement out;
  for (const auto& [m, c] : e.terms()) {
    Monomial m2 = m;
    m2.xexp.at(k) += power;
    out.add_term(m2, c);
  }
  return out;
}

KLRElement KLRContext::lmul_tau_mono(int l, const Monomial& m,
                                     const Rational& c) const {
  const int n = m.n();
  KLRElement out;
  const auto mu = m.left_seq();
  // tau_l x^a e(mu) = x^{s_l a} tau_l e(mu) [+ d_l(x^a) e(mu) if mu_l = mu_{l+1}]
  if (mu.at(l) == mu.at(l + 1)) {
    Poly::Expo e(m.xexp);
    Poly d = monomial_divided_difference(e, c, l, l + 1);
    for (const auto& [ex, t] : d.terms()) {
      Monomial m2 = m;
      m2.xexp = ex;
      out.add_term(m2, t);
    }
  }
  std::vector<int> sa = m.xexp;
  std::swap(sa.at(l), sa.at(l + 1));
  for (const auto& [pm, pc] : tau_push(l, m.w, m.nu).terms()) {
    Monomial m2 = pm;
    for (int k = 0; k < n; ++k) m2.xexp[k] += sa[k];
    out.add_term(m2, pc * c);
  }
  return out;
}

KLRElement KLRContext::lmul_tau(int l, const KLRElement& e) const {
  KLRElement out;
  for (const auto& [m, c] : e.terms()) out += lmul_tau_mono(l, m, c);
  return out;
}

KLRElement KLRContext::reduced_to_normal(const std::vector<int>& word,
                                         const std::vector<int>& nu) const {
  const int n = static_cast<int>(nu.size());
  const Perm w = Perm::from_word(n, word);
  const auto canon = w.canonical_word();
  KLRElement main =
      KLRElement::single({std::vector<int>(n, 0), w, nu});
  if (word == canon) return main;
  KLRElement acc;
  std::vector<int> cur = word;
  for (const auto& mv : word_move_path(word, canon)) {
    if (mv.kind == 1) {
      // Braid move at mv.pos on letters (a,b,a).  With 1-based strands,
      // tau_{m+2} tau_{m+1} tau_{m+2} = tau_{m+1} tau_{m+2} tau_{m+1} + Qbar
      // on strands m+1, m+2, m+3 where m = min(a,b) (0-based letter).
      const int a = cur.at(mv.pos), b = cur.at(mv.pos + 1);
      const int sign = (a > b) ? 1 : -1;
      const int m0 = std::min(a, b);
      std::vector<int> suffix(cur.begin() + mv.pos + 3, cur.end());
      KLRElement base = reduced_to_normal(suffix, nu);
      KLRElement qb;
      for (const auto& [bm, bc] : base.terms()) {
        const auto mu = bm.left_seq();
        if (mu.at(m0) != mu.at(m0 + 2)) continue;
        Poly g = qbar_poly(mu[m0], mu[m0 + 1], m0, m0 + 1, m0 + 2, n);
        for (const auto& [ex, t] : g.terms()) {
          Monomial m2 = bm;
          for (int k = 0; k < n; ++k) m2.xexp[k] += ex[k];
          qb.add_term(m2, t * bc);
        }
      }
      for (int p = mv.pos - 1; p >= 0; --p) qb = lmul_tau(cur[p], qb);
      if (sign > 0)
        acc += qb;
      else
        acc -= qb;
    }
    cur = apply_word_move(cur, mv);
  }
  return main + acc;
}

const KLRElement& KLRContext::tau_push(int l, const Perm& w,
                                       const std::vector<int>& nu) const {
  const auto key = std::make_tuple(l, w.one_line(), nu);
  if (auto it = push_cache_.find(key); it != push_cache_.end())
    return it->second;
  const int n = static_cast<int>(nu.size());
  KLRElement result;
  const Perm slw = w.times_s_left(l);
  if (slw.length() > w.length()) {
    std::vector<int> word{l};
    const auto cw = w.canonical_word();
    word.insert(word.end(), cw.begin(), cw.end());
    result = reduced_to_normal(word, nu);
  } else {
    // tau_l^2 on the left of tau_v, via a reduced word of w starting with l.
    const Perm v = slw;
    std::vector<int> r{l};
    const auto cv = v.canonical_word();
    r.insert(r.end(), cv.begin(), cv.end());
    KLRElement corr = reduced_to_normal(r, nu);
    corr.add_term({std::vector<int>(n, 0), w, nu}, -1);
    const auto mu = v.apply(nu);
    KLRElement sq;
    if (mu.at(l) != mu.at(l + 1)) {
      Poly g = q_poly(mu[l], mu[l + 1], l, l + 1, n);
      for (const auto& [ex, t] : g.terms())
        sq.add_term({ex, v, nu}, t);
    }
    result = sq - lmul_tau(l, corr);
  }
  return push_cache_.emplace(key, std::move(result)).first->second;
}

KLRElement KLRContext::multiply(const KLRElement& a, const KLRElement& b) const {
  KLRElement out;
  for (const auto& [m1, c1] : a.terms()) {
    for (const auto& [m2, c2] : b.terms()) {
      if (m1.nu != m2.left_seq()) continue;
      KLRElement e = KLRElement::single(m2, c1 * c2);
      const auto cw = m1.w.canonical_word();
      for (int p = static_cast<int>(cw.size()) - 1; p >= 0; --p)
        e = lmul_tau(cw[p], e);
      KLRElement shifted;
      for (const auto& [m, c] : e.terms()) {
        Monomial m3 = m;
        for (int k = 0; k < m3.n(); ++k) m3.xexp[k] += m1.xexp[k];
        shifted.add_term(m3, c);
      }
      out += shifted;
    }
  }
  return out;
}

KLRElement KLRContext::psi(const KLRElement& e) const {
  KLRElement out;
  for (const auto& [m, c] : e.terms()) {
    // psi(x^a tau_w e(nu)) = e(nu) tau_{reversed word} x^a, rebuilt from
    // x^a e(w.nu) by successive left multiplications.
    KLRElement cur = KLRElement::single(
        {m.xexp, Perm::identity(m.n()), m.left_seq()}, c);
    for (int l : m.w.canonical_word()) cur = lmul_tau(l, cur);
    out += cur;
  }
  return out;
}

int KLRContext::degree(const Monomial& m) const {
  int d = 0;
  const auto mu = m.left_seq();
  for (int k = 0; k < m.n(); ++k)
    d += m.xexp[k] * datum_.bilinear(mu[k], mu[k]);
  auto seq = m.nu;
  const auto cw = m.w.canonical_word();
  for (int p = static_cast<int>(cw.size()) - 1; p >= 0; --p) {
    const int l = cw[p];
    d -= datum_.bilinear(seq.at(l), seq.at(l + 1));
    std::swap(seq[l], seq[l + 1]);
  }
  return d;
}

std::optional<int> KLRContext::degree(const KLRElement& e) const {
  std::optional<int> d;
  for (const auto& [m, c] : e.terms()) {
    int dm = degree(m);
    if (d && *d != dm) return std::nullopt;
    d = dm;
  }
  return d ? d : std::optional<int>(0);
}

KLRElement KLRContext::intertwiner(
    int l, const std::vector<std::vector<int>>& seqs) const {
  KLRElement out;
  for (const auto& nu : seqs) {
    if (nu.at(l) == nu.at(l + 1)) {
      KLRElement t = tau_gen(l, nu);
      out += lmul_x(l, t) - lmul_x(l + 1, t) + idempotent(nu);
    } else {
      out += tau_gen(l, nu);
    }
  }
  return out;
}

KLRElement KLRContext::q_element(
    int a, int b, const std::vector<std::vector<int>>& seqs) const {
  KLRElement out;
  for (const auto& nu : seqs) {
    const int n = static_cast<int>(nu.size());
    Poly g = q_poly(nu.at(a), nu.at(b), a, b, n);
    for (const auto& [ex, t] : g.terms()) out += x_monomial(ex, nu) * t;
  }
  return out;
}

KLRElement KLRContext::qbar_element(
    int a, int b, int c, const std::vector<std::vector<int>>& seqs) const {
  KLRElement out;
  for (const auto& nu : seqs) {
    if (nu.at(a) != nu.at(c)) continue;
    const int n = static_cast<int>(nu.size());
    Poly g = qbar_poly(nu[a], nu.at(b), a, b, c, n);
    for (const auto& [ex, t] : g.terms()) out += x_monomial(ex, nu) * t;
  }
  return out;
}

std::string KLRContext::str(const Monomial& m, const Rational& c) const {
  std::ostringstream os;
  os << c.str() << "*";
  for (int k = 0; k < m.n(); ++k)
    if (m.xexp[k] > 0) {
      os << "x" << (k + 1);
      if (m.xexp[k] > 1) os << "^" << m.xexp[k];
      os << " ";
    }
  for (int l : m.w.canonical_word()) os << "t" << (l + 1) << " ";
  os << "e(";
  for (std::size_t k = 0; k < m.nu.size(); ++k) {
    if (k) os << ",";
    os << datum_.labels().at(m.nu[k]);
  }
  os << ")";
  return os.str();
}

std::string KLRContext::str(const KLRElement& e) const {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    if (!first) os << " + ";
    first = false;
    os << str(m, c);
  }
  return os.str();
}

} // namespace klr
