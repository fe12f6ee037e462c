#include "klr/perm.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace klr {

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  for (int k = 0; k < n; ++k) v[k] = k;
  return Perm(std::move(v));
}

Perm::Perm(std::vector<int> one_line) : img_(std::move(one_line)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw std::invalid_argument("invalid one-line notation");
    seen[v] = true;
  }
}

Perm Perm::from_word(int n, const std::vector<int>& word) {
  Perm w = identity(n);
  for (int l : word) w = w.times_s_right(l);
  return w;
}

Perm Perm::inverse() const {
  std::vector<int> v(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k) v[img_[k]] = static_cast<int>(k);
  return Perm(std::move(v));
}

Perm Perm::operator*(const Perm& o) const {
  std::vector<int> v(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k) v[k] = img_[o.img_[k]];
  return Perm(std::move(v));
}

Perm Perm::times_s_right(int l) const {
  std::vector<int> v = img_;
  std::swap(v.at(l), v.at(l + 1));
  return Perm(std::move(v));
}

Perm Perm::times_s_left(int l) const {
  std::vector<int> v = img_;
  for (auto& x : v) {
    if (x == l)
      x = l + 1;
    else if (x == l + 1)
      x = l;
  }
  return Perm(std::move(v));
}

int Perm::length() const {
  int c = 0;
  for (std::size_t i = 0; i < img_.size(); ++i)
    for (std::size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) ++c;
  return c;
}

bool Perm::is_identity() const {
  for (std::size_t k = 0; k < img_.size(); ++k)
    if (img_[k] != static_cast<int>(k)) return false;
  return true;
}

std::vector<int> Perm::canonical_word() const {
  // Greedy lex-min: the first letter is the smallest left descent.
  std::vector<int> word;
  Perm w = *this;
  while (!w.is_identity()) {
    const auto wi = w.inverse();
    int best = -1;
    for (int l = 0; l + 1 < w.n(); ++l)
      if (wi(l) > wi(l + 1)) {
        best = l;
        break;
      }
    word.push_back(best);
    w = w.times_s_left(best);
  }
  return word;
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  for (int k = 0; k < n; ++k) v[k] = k;
  std::vector<Perm> out;
  do {
    out.push_back(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

const std::vector<std::vector<int>>& all_reduced_words(const Perm& w) {
  static std::map<std::vector<int>, std::vector<std::vector<int>>> cache;
  auto it = cache.find(w.one_line());
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> words;
  if (w.is_identity()) {
    words.push_back({});
  } else {
    const auto wi = w.inverse();
    for (int l = 0; l + 1 < w.n(); ++l) {
      if (wi(l) > wi(l + 1)) {
        for (const auto& rest : all_reduced_words(w.times_s_left(l))) {
          std::vector<int> word{l};
          word.insert(word.end(), rest.begin(), rest.end());
          words.push_back(std::move(word));
        }
      }
    }
  }
  return cache.emplace(w.one_line(), std::move(words)).first->second;
}

std::vector<int> apply_word_move(const std::vector<int>& word,
                                 const WordMove& m) {
  std::vector<int> out = word;
  if (m.kind == 0) {
    std::swap(out.at(m.pos), out.at(m.pos + 1));
  } else {
    std::swap(out.at(m.pos), out.at(m.pos + 1));
    out.at(m.pos + 2) = out.at(m.pos);
  }
  return out;
}

namespace {

std::vector<WordMove> moves_of(const std::vector<int>& w) {
  std::vector<WordMove> ms;
  for (int p = 0; p + 1 < static_cast<int>(w.size()); ++p)
    if (std::abs(w[p] - w[p + 1]) >= 2) ms.push_back({p, 0});
  for (int p = 0; p + 2 < static_cast<int>(w.size()); ++p)
    if (w[p] == w[p + 2] && std::abs(w[p] - w[p + 1]) == 1)
      ms.push_back({p, 1});
  return ms;
}

} // namespace

std::vector<WordMove> word_move_path(const std::vector<int>& from,
                                     const std::vector<int>& to) {
  if (from == to) return {};
  // BFS over the reduced-word graph (Matsumoto: connected).
  std::map<std::vector<int>, std::pair<std::vector<int>, WordMove>> parent;
  std::deque<std::vector<int>> queue{from};
  parent[from] = {from, {-1, -1}};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (const auto& m : moves_of(cur)) {
      auto nxt = apply_word_move(cur, m);
      if (parent.count(nxt)) continue;
      parent[nxt] = {cur, m};
      if (nxt == to) {
        std::vector<WordMove> path;
        auto node = nxt;
        while (node != from) {
          auto& [prev, mv] = parent[node];
          path.push_back(mv);
          node = prev;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(nxt);
    }
  }
  throw std::logic_error("no braid-move path between the given words");
}

} // namespace klr
