#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "klr/cyclotomic.hpp"
#include "klr/relations.hpp"
#include "test_util.hpp"

using namespace klr;

namespace {

CyclotomicAlgebra build_sl2(const KLRContext& ctx, int level, int height) {
  return CyclotomicAlgebra::build(ctx, DominantWeight({level}),
                                  RootVector(std::vector<int>{height}));
}

} // namespace

TEST_CASE("trivial weight space has dimension one") {
  auto ctx = testutil::sl2();
  auto a = build_sl2(ctx, 1, 0);
  CHECK(a.dim() == 1);
  CHECK(a.certificates().closure);
  CHECK(a.certificates().relations);
}

TEST_CASE("sl2 level 1 dimensions (1, 1, 0)") {
  auto ctx = testutil::sl2();
  CHECK(build_sl2(ctx, 1, 0).dim() == 1);
  auto a1 = build_sl2(ctx, 1, 1);
  CHECK(a1.dim() == 1);
  CHECK(a1.certificates().stabilized);
  auto a2 = build_sl2(ctx, 1, 2);
  CHECK(a2.dim() == 0);
}

TEST_CASE("sl2 level 2 dimensions (1, 2, 4, 0)") {
  auto ctx = testutil::sl2();
  CHECK(build_sl2(ctx, 2, 0).dim() == 1);
  auto a1 = build_sl2(ctx, 2, 1);
  CHECK(a1.dim() == 2);
  auto a2 = build_sl2(ctx, 2, 2);
  CHECK(a2.dim() == 4);
  CHECK(a2.certificates().closure);
  CHECK(a2.certificates().stabilized);
  CHECK(a2.certificates().relations);
  CHECK(build_sl2(ctx, 2, 3).dim() == 0);
}

TEST_CASE("sl2 level 3 dimensions follow (n!)^2 C(l,n)") {
  auto ctx = testutil::sl2();
  CHECK(build_sl2(ctx, 3, 1).dim() == 3);
  CHECK(build_sl2(ctx, 3, 2).dim() == 12);
}

TEST_CASE("level 0 gives the zero algebra") {
  auto ctx = testutil::sl2();
  auto a = build_sl2(ctx, 0, 1);
  CHECK(a.dim() == 0);
  CHECK(a.nilpotency_index(0) == 0);
}

TEST_CASE("reduction properties") {
  auto ctx = testutil::sl2();
  auto a = build_sl2(ctx, 2, 2);
  // the defining element reduces to zero
  auto seed = cyclotomic_seed(ctx, a.lambda(), a.sequences());
  auto z = a.reduce(seed);
  for (const auto& c : z) CHECK(c == 0);
  // the unit reduces to nonzero coordinates
  auto u = a.reduce(a.unit());
  bool nonzero = false;
  for (const auto& c : u) nonzero = nonzero || c != 0;
  CHECK(nonzero);
  // reduce is multiplicative against the generator matrices
  std::mt19937_64 rng(13);
  auto gens = a.generator_elements();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int t = 0; t < 50; ++t) {
    KLRElement p = ctx.multiply(gens[pick(rng)], gens[pick(rng)]);
    KLRElement q = gens[pick(rng)];
    CHECK(a.reduce(ctx.multiply(p, q)) == a.apply_left(p, a.reduce(q)));
    CHECK(a.reduce(ctx.multiply(q, p)) == a.apply_right(a.reduce(q), p));
  }
}

TEST_CASE("nilpotency indices") {
  auto ctx = testutil::sl2();
  CHECK(build_sl2(ctx, 1, 1).nilpotency_index(0) == 1);
  CHECK(build_sl2(ctx, 2, 1).nilpotency_index(0) == 2);
}

TEST_CASE("radical and simple counts") {
  auto ctx = testutil::sl2();
  auto a1 = build_sl2(ctx, 1, 1);
  CHECK(a1.radical_dim() == 0);
  CHECK(a1.simple_count() == 1);
  auto b1 = build_sl2(ctx, 2, 1);
  CHECK(b1.radical_dim() == 1);
  CHECK(b1.simple_count() == 1);
  auto b2 = build_sl2(ctx, 2, 2);
  CHECK(b2.simple_count() == 1);
}

TEST_CASE("sl3 fundamental weight quotients") {
  auto ctx = testutil::sl3();
  DominantWeight L({1, 0});
  auto a0 = CyclotomicAlgebra::build(ctx, L, RootVector({0, 0}));
  CHECK(a0.dim() == 1);
  auto a1 = CyclotomicAlgebra::build(ctx, L, RootVector({1, 0}));
  CHECK(a1.dim() == 1);
  // alpha_2 is not a weight string start for Lambda_1
  auto a2 = CyclotomicAlgebra::build(ctx, L, RootVector({0, 1}));
  CHECK(a2.dim() == 0);
  auto a12 = CyclotomicAlgebra::build(ctx, L, RootVector({1, 1}));
  CHECK(a12.certificates().closure);
  CHECK(a12.certificates().stabilized);
  CHECK(a12.dim() >= 1);
  CHECK(a12.simple_count() == 1);
}
