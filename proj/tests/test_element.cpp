#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "klr/polyrep.hpp"
#include "klr/relations.hpp"
#include "test_util.hpp"

using namespace klr;

namespace {

// Deterministic pseudo-random elements: products of generator letters.
KLRElement random_element(const KLRContext& ctx, int n, std::mt19937_64& rng,
                          int letters = 4) {
  const int rank = static_cast<int>(ctx.datum().rank());
  const auto seqs = all_sequences(rank, n);
  std::uniform_int_distribution<std::size_t> pick_seq(0, seqs.size() - 1);
  std::uniform_int_distribution<int> pick_kind(0, n > 1 ? 1 : 0);
  std::uniform_int_distribution<int> pick_pos(0, n - 1);
  std::uniform_int_distribution<int> pick_letter(0, std::max(0, n - 2));
  std::uniform_int_distribution<int> pick_coef(-2, 2);
  KLRElement e = idempotent(seqs[pick_seq(rng)]) * Rational(pick_coef(rng));
  for (int t = 0; t < letters; ++t) {
    if (pick_kind(rng) == 0)
      e = ctx.lmul_x(pick_pos(rng), e);
    else
      e = ctx.lmul_tau(pick_letter(rng), e);
  }
  return e;
}

} // namespace

TEST_CASE("straightening reproduces the x-tau twist relation") {
  auto ctx = testutil::sl2();
  std::vector<int> nu{0, 0};
  // tau_1 x_1 e(ii) = x_2 tau_1 e(ii) - e(ii)
  KLRElement lhs = ctx.multiply(tau_gen(0, nu), x_gen(0, nu));
  KLRElement rhs = ctx.lmul_x(1, tau_gen(0, nu)) - idempotent(nu);
  CHECK(lhs == rhs);
  // tau_1 tau_1 e(ii) = 0 since Q_ii = 0
  CHECK(ctx.multiply(tau_gen(0, nu), tau_gen(0, nu)).is_zero());
}

TEST_CASE("braid correction on mixed colors") {
  auto ctx = testutil::sl3();
  std::vector<int> nu{0, 1, 0};  // the sequence (1,2,1)
  auto chain = [&](std::vector<int> word) {
    KLRElement cur = idempotent(nu);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      cur = ctx.lmul_tau(*it, cur);
    return cur;
  };
  // (tau_2 tau_1 tau_2 - tau_1 tau_2 tau_1) e(121) = e(121) for Q_12 = u+v
  KLRElement diff = chain({1, 0, 1}) - chain({0, 1, 0});
  CHECK(diff == idempotent(nu));
}

TEST_CASE("relation suite passes for every fixture datum, n <= 3") {
  for (auto ctx : {testutil::sl2(), testutil::sl3(), testutil::b2(),
                   testutil::a1_affine()}) {
    for (int n = 0; n <= 3; ++n) {
      auto rep = relation_suite(ctx, n);
      for (const auto& v : rep.violations) MESSAGE(v);
      CHECK(rep.ok());
      auto prep = polyrep_relation_suite(ctx, n);
      for (const auto& v : prep.violations) MESSAGE(v);
      CHECK(prep.ok());
    }
  }
}

TEST_CASE("psi is an anti-involution fixing generators") {
  auto ctx = testutil::sl3();
  std::vector<int> nu{0, 1};
  CHECK(ctx.psi(idempotent(nu)) == idempotent(nu));
  CHECK(ctx.psi(x_gen(0, nu)) == x_gen(0, nu));
  // psi(tau_l e(nu)) = e(nu) tau_l = tau_l e(s_l nu)
  CHECK(ctx.psi(tau_gen(0, nu)) == tau_gen(0, {1, 0}));
  CHECK(ctx.psi(tau_gen(0, {0, 0})) == tau_gen(0, {0, 0}));

  std::mt19937_64 rng(7);
  for (int t = 0; t < 25; ++t) {
    KLRElement a = random_element(ctx, 3, rng);
    KLRElement b = random_element(ctx, 3, rng);
    CHECK(ctx.psi(ctx.psi(a)) == a);
    CHECK(ctx.psi(ctx.multiply(a, b)) == ctx.multiply(ctx.psi(b), ctx.psi(a)));
  }
}

TEST_CASE("grading") {
  auto sl2 = testutil::sl2();
  CHECK(sl2.degree(Monomial{{0}, Perm::identity(1), {0}}) == 0);
  CHECK(*sl2.degree(x_gen(0, {0})) == 2);
  CHECK(*sl2.degree(tau_gen(0, {0, 0})) == -2);

  auto b2 = testutil::b2();
  CHECK(*b2.degree(x_gen(0, {0})) == 4);
  CHECK(*b2.degree(x_gen(0, {1})) == 2);
  CHECK(*b2.degree(tau_gen(0, {0, 1})) == 2);

  // homogeneous products add degrees; psi preserves degree
  auto ctx = testutil::sl3();
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    std::vector<int> nu{0, 1, 0};
    KLRElement a = ctx.lmul_tau(0, ctx.lmul_x(1, idempotent(nu)));
    KLRElement b = ctx.lmul_tau(1, tau_gen(0, nu));
    auto da = ctx.degree(a), db = ctx.degree(b);
    REQUIRE(da);
    REQUIRE(db);
    KLRElement ab = ctx.multiply(a, ctx.psi(b));
    auto dab = ctx.degree(ab);
    if (!ab.is_zero()) CHECK(*dab == *da + *ctx.degree(ctx.psi(b)));
    CHECK(*ctx.degree(ctx.psi(a)) == *da);
  }
}

TEST_CASE("Q elements and eq:tau3") {
  auto sl2 = testutil::sl2();
  CHECK(sl2.q_element(0, 1, all_sequences(1, 2)).is_zero());

  auto sl3 = testutil::sl3();
  CHECK(sl3.q_element(0, 1, {{0, 1}}) ==
        x_gen(0, {0, 1}) + x_gen(1, {0, 1}));
  CHECK(sl3.qbar_element(0, 1, 2, {{0, 1, 0}}) == idempotent({0, 1, 0}));

  // Q_{a,b} = Q_{b,a} and tau_a^2 = Q_{a,a+1} over all of I^n
  for (auto ctx : {testutil::sl3(), testutil::b2()}) {
    auto seqs = all_sequences(2, 2);
    CHECK(ctx.q_element(0, 1, seqs) == ctx.q_element(1, 0, seqs));
    KLRElement tau;
    for (const auto& nu : seqs) tau += tau_gen(0, nu);
    CHECK(ctx.multiply(tau, tau) == ctx.q_element(0, 1, seqs));
  }
}

TEST_CASE("intertwiner properties") {
  auto sl2 = testutil::sl2();
  std::vector<int> ii{0, 0};
  KLRElement phi = sl2.intertwiner(0, {ii});
  // phi_1^2 e(ii) = e(ii) since Q_ii = 0
  CHECK(sl2.multiply(phi, phi) == idempotent(ii));
  // x_2 phi_1 = phi_1 x_1 on e(ii)
  CHECK(sl2.lmul_x(1, phi) == sl2.multiply(phi, x_gen(0, ii)));

  auto sl3 = testutil::sl3();
  auto seqs = all_sequences(2, 3);
  KLRElement p1 = sl3.intertwiner(0, seqs);
  KLRElement p2 = sl3.intertwiner(1, seqs);
  KLRElement lhs = sl3.multiply(p1, sl3.multiply(p2, p1));
  KLRElement rhs = sl3.multiply(p2, sl3.multiply(p1, p2));
  CHECK(sl3.multiply(lhs - rhs, idempotent({0, 1, 0})).is_zero());
  CHECK(lhs == rhs);
}

TEST_CASE("intertwiner conjugation: phi_w tau_k = tau_{w(k)} phi_w on S_3") {
  for (auto ctx : {testutil::sl2(), testutil::sl3()}) {
    const int rank = static_cast<int>(ctx.datum().rank());
    auto seqs = all_sequences(rank, 3);
    KLRElement tau[2];
    for (int l = 0; l < 2; ++l)
      for (const auto& nu : seqs) tau[l] += tau_gen(l, nu);
    for (const auto& w : all_perms(3)) {
      KLRElement phiw = idempotent_sum(seqs);
      for (int l : w.canonical_word())
        phiw = ctx.multiply(phiw, ctx.intertwiner(l, seqs));
      for (int k = 0; k + 1 < 3; ++k) {
        if (w(k + 1) != w(k) + 1) continue;
        CHECK(ctx.multiply(phiw, tau[k]) == ctx.multiply(tau[w(k)], phiw));
      }
    }
  }
}

TEST_CASE("oracle agreement between normal form and the representation") {
  auto ctx = testutil::sl3();
  std::vector<int> ii{0, 0};
  KLRElement lhs = ctx.multiply(tau_gen(0, ii), x_gen(0, ii));
  KLRElement rhs = ctx.lmul_x(1, tau_gen(0, ii)) - idempotent(ii);
  CHECK(oracle_equal(ctx, lhs, rhs, 5));
  CHECK(oracle_equal(ctx, lhs, lhs, 1));
  CHECK_FALSE(oracle_equal(ctx, idempotent(ii), KLRElement(), 5));

  // act(multiply(a,b), v) = act(a, act(b, v)) on random pairs
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    KLRElement a = random_element(ctx, 3, rng);
    KLRElement b = random_element(ctx, 3, rng);
    KLRElement ab = ctx.multiply(a, b);
    for (const auto& nu : all_sequences(2, 3)) {
      PolyVector v;
      v.add(nu, Poly::variable(3, t % 3));
      CHECK(act(ctx, ab, v) == act(ctx, a, act(ctx, b, v)));
    }
  }
}

TEST_CASE("associativity on random triples") {
  for (auto ctx : {testutil::sl2(), testutil::b2()}) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
      KLRElement a = random_element(ctx, 3, rng, 3);
      KLRElement b = random_element(ctx, 3, rng, 3);
      KLRElement c = random_element(ctx, 3, rng, 3);
      CHECK(ctx.multiply(ctx.multiply(a, b), c) ==
            ctx.multiply(a, ctx.multiply(b, c)));
    }
  }
}

TEST_CASE("embedding by appending labels") {
  auto ctx = testutil::sl2();
  std::vector<int> nu{0, 0};
  KLRElement a = ctx.multiply(tau_gen(0, nu), x_gen(0, nu));
  KLRElement big = embed_append(a, {0});
  // embedding is multiplicative against embedded factors
  KLRElement lhs = ctx.multiply(embed_append(tau_gen(0, nu), {0}),
                                embed_append(x_gen(0, nu), {0}));
  CHECK(lhs == big);
  for (const auto& [m, c] : big.terms()) CHECK(m.n() == 3);
}
