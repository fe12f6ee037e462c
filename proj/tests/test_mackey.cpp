#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klr/mackey.hpp"
#include "test_util.hpp"

using namespace klr;

TEST_CASE("empty root vector: slice is a polynomial algebra") {
  auto ctx = testutil::sl2();
  auto rep = verify_mackey(ctx, RootVector::zero(1), 0, 8);
  CHECK(rep.ok);
  CHECK(rep.failures.empty());
  // k[x_1]e(i): one monomial in each even degree
  CHECK(rep.target_dims.at(0) == 1);
  CHECK(rep.target_dims.at(2) == 1);
  CHECK(rep.target_dims.at(1) == 0);
}

TEST_CASE("sl2 one strand") {
  auto ctx = testutil::sl2();
  auto rep = verify_mackey(ctx, RootVector({1}), 0, 6);
  CHECK(rep.ok);
  for (const auto& f : rep.failures) CHECK(f == "");
}

TEST_CASE("sl2 two and three strands") {
  auto ctx = testutil::sl2();
  CHECK(verify_mackey(ctx, RootVector({2}), 0, 6).ok);
  CHECK(verify_mackey(ctx, RootVector({3}), 0, 4).ok);
}

TEST_CASE("sl3 mixed colours, both crossing cases") {
  auto ctx = testutil::sl3();
  // beta - alpha_i outside Q^+: crossing summand absent
  auto rep = verify_mackey(ctx, RootVector({1, 0}), 1, 6);
  CHECK(rep.ok);
  // beta - alpha_i present
  CHECK(verify_mackey(ctx, RootVector({1, 1}), 0, 5).ok);
  CHECK(verify_mackey(ctx, RootVector({1, 1}), 1, 5).ok);
}

TEST_CASE("b2 short and long roots") {
  auto ctx = testutil::b2();
  CHECK(verify_mackey(ctx, RootVector({1, 1}), 0, 4).ok);
  CHECK(verify_mackey(ctx, RootVector({1, 1}), 1, 4).ok);
}
