#pragma once

#include <cstdint>
#include <vector>

namespace klr {

/// A permutation of {0,..,n-1} in one-line notation (image of position k is
/// word[k]).  Reduced words use 0-based generator indices: letter l means
/// the transposition s_{l+1} of positions l, l+1.
class Perm {
 public:
  Perm() = default;
  static Perm identity(int n);
  explicit Perm(std::vector<int> one_line);
  static Perm from_word(int n, const std::vector<int>& word);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int k) const { return img_.at(k); }
  const std::vector<int>& one_line() const { return img_; }

  Perm inverse() const;
  // (this * o)(k) = this(o(k))
  Perm operator*(const Perm& o) const;
  // multiplication by the adjacent transposition s_{l+1} on the right/left
  Perm times_s_right(int l) const;
  Perm times_s_left(int l) const;

  int length() const;  // inversion count
  bool is_identity() const;

  /// Lexicographically smallest reduced word.
  std::vector<int> canonical_word() const;

  /// Applies this permutation to a sequence: (w . nu)[w(k)] = nu[k].
  template <typename T>
  std::vector<T> apply(const std::vector<T>& nu) const {
    std::vector<T> out(nu.size());
    for (std::size_t k = 0; k < nu.size(); ++k) out[img_[k]] = nu[k];
    return out;
  }

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> img_;
};

/// All permutations of S_n (n small), in lexicographic one-line order.
std::vector<Perm> all_perms(int n);

/// All reduced words of w (memoized per process).  Used for braid-move
/// pathfinding during straightening.
const std::vector<std::vector<int>>& all_reduced_words(const Perm& w);

/// A path of elementary moves from word `from` to word `to`, both reduced
/// words of the same permutation.  Each step is (position, kind) where
/// kind 0 is a commutation move swapping letters at position, position+1
/// and kind 1 is a braid move on letters at position .. position+2.
struct WordMove {
  int pos;
  int kind;  // 0 = commutation, 1 = braid
};
std::vector<WordMove> word_move_path(const std::vector<int>& from,
                                     const std::vector<int>& to);

/// Applies a single move to a word (in place semantics by value).
std::vector<int> apply_word_move(const std::vector<int>& word, const WordMove& m);

} // namespace klr
