#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "klr/perm.hpp"

using namespace klr;

TEST_CASE("word round trip and length") {
  for (int n : {1, 2, 3, 4}) {
    for (const auto& w : all_perms(n)) {
      auto word = w.canonical_word();
      CHECK(Perm::from_word(n, word) == w);
      CHECK(static_cast<int>(word.size()) == w.length());
      CHECK(w * w.inverse() == Perm::identity(n));
    }
  }
}

TEST_CASE("canonical word is the lexicographically smallest reduced word") {
  for (const auto& w : all_perms(4)) {
    const auto& words = all_reduced_words(w);
    auto minw = *std::min_element(words.begin(), words.end());
    CHECK(w.canonical_word() == minw);
  }
}

TEST_CASE("sequence action convention") {
  // s_l swaps the entries at positions l, l+1
  Perm s0 = Perm::identity(3).times_s_right(0);
  std::vector<int> nu{7, 8, 9};
  CHECK(s0.apply(nu) == std::vector<int>{8, 7, 9});
  // (uv).nu = u.(v.nu)
  for (const auto& u : all_perms(3))
    for (const auto& v : all_perms(3))
      CHECK((u * v).apply(nu) == u.apply(v.apply(nu)));
}

TEST_CASE("left and right generator multiplication") {
  for (const auto& w : all_perms(4)) {
    for (int l = 0; l < 3; ++l) {
      Perm sl = Perm::identity(4).times_s_right(l);
      CHECK(w.times_s_right(l) == w * sl);
      CHECK(w.times_s_left(l) == sl * w);
    }
  }
}

TEST_CASE("braid move paths connect reduced words") {
  for (const auto& w : all_perms(4)) {
    const auto& words = all_reduced_words(w);
    const auto canon = w.canonical_word();
    for (const auto& word : words) {
      auto cur = word;
      for (const auto& mv : word_move_path(word, canon))
        cur = apply_word_move(cur, mv);
      CHECK(cur == canon);
    }
  }
}

TEST_CASE("reduced word counts for the longest element") {
  // w0 in S_3 has 2 reduced words; in S_4 it has 16.
  Perm w0_3({2, 1, 0});
  CHECK(all_reduced_words(w0_3).size() == 2);
  Perm w0_4({3, 2, 1, 0});
  CHECK(all_reduced_words(w0_4).size() == 16);
}
