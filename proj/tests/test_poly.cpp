#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klr/poly.hpp"

using namespace klr;

TEST_CASE("arithmetic basics") {
  Poly x = Poly::variable(2, 0);
  Poly y = Poly::variable(2, 1);
  Poly p = (x + y) * (x - y);
  Poly q = x * x - y * y;
  CHECK(p == q);
  CHECK((p - q).is_zero());
  CHECK(p.total_degree() == 2);
  CHECK(p.degree_in(0) == 2);
}

TEST_CASE("divided difference on the standard examples") {
  Poly one = Poly::constant(2, 1);
  CHECK(one.divided_difference(0, 1).is_zero());

  Poly x1 = Poly::variable(2, 0);
  CHECK(x1.divided_difference(0, 1) == Poly::constant(2, -1));

  Poly sym = Poly::variable(2, 0) * Poly::variable(2, 1);
  CHECK(sym.divided_difference(0, 1).is_zero());

  // d(x_1^2) = -(x_1 + x_2)
  Poly x1sq = Poly::variable(2, 0, 2);
  Poly expect = -(Poly::variable(2, 0) + Poly::variable(2, 1));
  CHECK(x1sq.divided_difference(0, 1) == expect);
}

TEST_CASE("divided difference satisfies the defining identity") {
  // (s f - f) = (x_a - x_b) * d(f) for a few polynomials
  for (const Poly& f :
       {Poly::variable(3, 0, 3), Poly::variable(3, 0) * Poly::variable(3, 2),
        Poly::variable(3, 1, 2) * Poly::variable(3, 0)}) {
    Poly lhs = f.swap_vars(0, 1) - f;
    Poly rhs =
        (Poly::variable(3, 0) - Poly::variable(3, 1)) * f.divided_difference(0, 1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("substitution") {
  Poly x = Poly::variable(2, 0);
  Poly y = Poly::variable(2, 1);
  Poly p = x * x + y;
  CHECK(p.substitute(0, y) == y * y + y);
}
