#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klr/cartan.hpp"

using namespace klr;

TEST_CASE("validation accepts standard matrices and computes symmetrizers") {
  auto sl2 = CartanDatum::validate({"1"}, {{2}});
  CHECK(sl2.d(0) == 1);

  auto sl3 = CartanDatum::validate({"1", "2"}, {{2, -1}, {-1, 2}});
  CHECK(sl3.d(0) == 1);
  CHECK(sl3.d(1) == 1);

  auto b2 = CartanDatum::validate({"1", "2"}, {{2, -1}, {-2, 2}});
  CHECK(b2.d(0) == 2);
  CHECK(b2.d(1) == 1);

  auto aff = CartanDatum::validate({"0", "1"}, {{2, -2}, {-2, 2}});
  CHECK(aff.d(0) == 1);
  CHECK(aff.d(1) == 1);
}

TEST_CASE("validation rejects each axiom violation by name") {
  CHECK_THROWS_WITH_AS(CartanDatum::validate({}, {{3}}),
                       doctest::Contains("axiom (i)"), ValidationError);
  CHECK_THROWS_WITH_AS(CartanDatum::validate({}, {{2, 1}, {1, 2}}),
                       doctest::Contains("axiom (ii)"), ValidationError);
  CHECK_THROWS_WITH_AS(CartanDatum::validate({}, {{2, -1}, {0, 2}}),
                       doctest::Contains("axiom (iii)"), ValidationError);
  CHECK_THROWS_WITH_AS(
      CartanDatum::validate({}, {{2, -1}, {-1, 2}}, std::vector<int>{1, 2}),
      doctest::Contains("axiom (iv)"), ValidationError);
}

TEST_CASE("symmetric bilinear form values") {
  auto sl2 = CartanDatum::validate({"1"}, {{2}});
  CHECK(sl2.bilinear(0, 0) == 2);
  auto b2 = CartanDatum::validate({"1", "2"}, {{2, -1}, {-2, 2}});
  CHECK(b2.bilinear(0, 0) == 4);
  CHECK(b2.bilinear(0, 1) == -2);
  CHECK(b2.bilinear(1, 0) == -2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(b2.d(i) * b2.a(i, j) == b2.d(j) * b2.a(j, i));
}

TEST_CASE("lambda_i pairing") {
  auto sl2 = CartanDatum::validate({"1"}, {{2}});
  CHECK(sl2.lambda_i(DominantWeight({2}), RootVector({1}), 0) == 0);
  CHECK(sl2.lambda_i(DominantWeight({1}), RootVector({0}), 0) == 1);
  auto sl3 = CartanDatum::validate({"1", "2"}, {{2, -1}, {-1, 2}});
  // <h_1, Lambda_2 - alpha_2> = 0 - a_{12} = 1
  CHECK(sl3.lambda_i(DominantWeight({0, 1}), RootVector({0, 1}), 0) == 1);
  CHECK(sl3.lambda_i(DominantWeight({1, 0}), RootVector({0, 1}), 0) == 2);
}

TEST_CASE("sequence enumeration matches the multinomial count") {
  auto sl3 = CartanDatum::validate({"1", "2"}, {{2, -1}, {-1, 2}});
  CHECK(enumerate_Ibeta(sl3, RootVector({2, 0})) ==
        std::vector<std::vector<int>>{{0, 0}});
  CHECK(enumerate_Ibeta(sl3, RootVector({1, 1})) ==
        std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  auto three = enumerate_Ibeta(sl3, RootVector({2, 1}));
  CHECK(three.size() == 3);
  CHECK(multinomial(RootVector({2, 1})) == 3);
  for (RootVector beta : {RootVector({2, 2}), RootVector({3, 1})})
    CHECK(BigInt(enumerate_Ibeta(sl3, beta).size()) == multinomial(beta));
}

TEST_CASE("default Q matrix") {
  auto sl3 = CartanDatum::validate({"1", "2"}, {{2, -1}, {-1, 2}});
  auto q3 = QMatrix::default_q(sl3);
  CHECK(q3.coeff(0, 1, 1, 0) == 1);
  CHECK(q3.coeff(0, 1, 0, 1) == 1);
  CHECK(q3.coeff(0, 0, 0, 0) == 0);

  auto b2 = CartanDatum::validate({"1", "2"}, {{2, -1}, {-2, 2}});
  auto qb = QMatrix::default_q(b2);
  CHECK(qb.coeff(0, 1, 1, 0) == 1);
  CHECK(qb.coeff(0, 1, 0, 2) == 1);
  CHECK(qb.coeff(1, 0, 2, 0) == 1);
  CHECK(qb.coeff(1, 0, 0, 1) == 1);
  // degree constraint on every stored entry
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (const auto& e : qb.entries(i, j))
        CHECK(b2.bilinear(i, i) * e.p + b2.bilinear(j, j) * e.q ==
              -2 * b2.bilinear(i, j));
}

TEST_CASE("custom Q entries validated") {
  auto sl3 = CartanDatum::validate({"1", "2"}, {{2, -1}, {-1, 2}});
  std::map<std::pair<int, int>, std::vector<QMatrix::Entry>> good{
      {{0, 1}, {{1, 0, Rational(1)}, {0, 1, Rational(3)}}}};
  auto q = QMatrix::from_entries(sl3, good);
  CHECK(q.coeff(1, 0, 1, 0) == 3);
  std::map<std::pair<int, int>, std::vector<QMatrix::Entry>> bad{
      {{0, 1}, {{2, 0, Rational(1)}}}};
  CHECK_THROWS_AS(QMatrix::from_entries(sl3, bad), ValidationError);
}
