#pragma once

#include <map>
#include <vector>

#include "klr/element.hpp"

namespace klr {

/// An element of the polynomial representation: for each sequence nu a
/// polynomial in n variables (the component e(nu) picks out).
struct PolyVector {
  std::map<std::vector<int>, Poly> comps;

  void add(const std::vector<int>& nu, const Poly& p);
  bool is_zero() const;
  bool operator==(const PolyVector&) const = default;
};

/// Action of an element on a polynomial vector.  x_k acts by multiplication,
/// tau_l by the divided difference on equal labels and by the twisted swap
/// f |-> P * (s_l f) otherwise, with P = 1 when nu_l < nu_{l+1} in label
/// order and P = Q_{nu_l, nu_{l+1}}(x_{l+1}, x_l) when nu_l > nu_{l+1}.
PolyVector act(const KLRContext& ctx, const KLRElement& e, const PolyVector& v);

/// Independent equality check through the representation: probes all
/// monomial vectors x^c e(nu) with exponents <= 2 over every content class
/// appearing in a or b, plus `random_trials` random polynomial vectors
/// drawn from a deterministic generator.
bool oracle_equal(const KLRContext& ctx, const KLRElement& a,
                  const KLRElement& b, int random_trials = 8,
                  unsigned long long seed = 1);

} // namespace klr
