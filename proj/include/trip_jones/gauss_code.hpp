#pragma once

// Signed Gauss codes: the cyclic double-occurrence word that stands in for a
// knot diagram. Each crossing is visited twice, once over and once under, and
// both visits carry the crossing's sign.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trip_jones/errors.hpp"

namespace trip_jones {

enum class Layer : std::uint8_t { over, under };

struct Visit {
  std::uint32_t crossing = 0;  // 1-based
  Layer layer = Layer::over;
  int sign = +1;               // +1 or -1

  friend bool operator==(const Visit&, const Visit&) = default;
};

/// A bijection on {1..n}; image(i) is where crossing i is sent.
class CrossingPermutation {
 public:
  CrossingPermutation() = default;

  /// `images[i-1]` is the image of i. Throws ValidationError unless bijective.
  explicit CrossingPermutation(std::vector<std::uint32_t> images)
      : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
      if (v < 1 || v > images_.size() || seen[v - 1])
        throw ValidationError("permutation is not a bijection on 1.." +
                              std::to_string(images_.size()));
      seen[v - 1] = true;
    }
  }

  static CrossingPermutation identity(std::size_t n) {
    std::vector<std::uint32_t> v(n);
    std::iota(v.begin(), v.end(), 1u);
    return CrossingPermutation(std::move(v));
  }

  /// The transposition exchanging i and j (1-based).
  static CrossingPermutation transposition(std::size_t n, std::uint32_t i, std::uint32_t j) {
    if (i < 1 || j < 1 || i > n || j > n)
      throw ValidationError("transposition index out of range");
    auto p = identity(n);
    std::swap(p.images_[i - 1], p.images_[j - 1]);
    return p;
  }

  template <class URBG>
  static CrossingPermutation random(std::size_t n, URBG& rng) {
    auto p = identity(n);
    std::shuffle(p.images_.begin(), p.images_.end(), rng);
    return p;
  }

  std::size_t size() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t i) const { return images_.at(i - 1); }
  std::span<const std::uint32_t> images() const noexcept { return images_; }

  CrossingPermutation inverse() const {
    std::vector<std::uint32_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      inv[images_[i] - 1] = static_cast<std::uint32_t>(i + 1);
    return CrossingPermutation(std::move(inv));
  }

  /// (this ∘ first): apply `first`, then this.
  CrossingPermutation after(const CrossingPermutation& first) const {
    if (first.size() != size()) throw ValidationError("permutation size mismatch");
    std::vector<std::uint32_t> v(size());
    for (std::size_t i = 0; i < size(); ++i) v[i] = images_[first.images_[i] - 1];
    return CrossingPermutation(std::move(v));
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i + 1) return false;
    return true;
  }

  /// Cycle notation with fixed points omitted, e.g. "(1 3)"; identity is "()".
  std::string to_cycle_string() const {
    std::string out;
    std::vector<bool> done(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
      if (done[start] || images_[start] == start + 1) continue;
      out += '(';
      std::size_t cur = start;
      bool first = true;
      while (!done[cur]) {
        done[cur] = true;
        if (!first) out += ' ';
        out += std::to_string(cur + 1);
        first = false;
        cur = images_[cur] - 1;
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const CrossingPermutation&, const CrossingPermutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// A validated signed Gauss code. Immutable once constructed.
class SignedGaussCode {
 public:
  /// The unknot (empty word).
  SignedGaussCode() = default;

  /// Validates `word`; throws ValidationError on any invariant violation.
  explicit SignedGaussCode(std::vector<Visit> word) : word_(std::move(word)) {
    validate();
  }

  std::size_t crossings() const noexcept { return word_.size() / 2; }
  std::span<const Visit> word() const noexcept { return word_; }
  bool is_unknot() const noexcept { return word_.empty(); }

  /// Sign of crossing `id` (1-based).
  int sign(std::uint32_t id) const {
    for (const auto& v : word_)
      if (v.crossing == id) return v.sign;
    throw ValidationError("no crossing " + std::to_string(id));
  }

  /// Sum of crossing signs.
  int writhe() const noexcept {
    int w = 0;
    for (const auto& v : word_) w += v.sign;
    return w / 2;
  }

  /// Positions (0-based, ascending) of the two visits of each crossing.
  std::vector<std::pair<std::size_t, std::size_t>> occurrences() const {
    std::vector<std::pair<std::size_t, std::size_t>> occ(crossings(), {SIZE_MAX, SIZE_MAX});
    for (std::size_t p = 0; p < word_.size(); ++p) {
      auto& slot = occ[word_[p].crossing - 1];
      (slot.first == SIZE_MAX ? slot.first : slot.second) = p;
    }
    return occ;
  }

  /// The word rotated left by `k` positions.
  SignedGaussCode rotated(std::size_t k) const {
    if (word_.empty()) return *this;
    auto w = word_;
    std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k % w.size()), w.end());
    return SignedGaussCode(std::move(w));
  }

  /// Equality up to cyclic rotation of the word.
  friend bool operator==(const SignedGaussCode& a, const SignedGaussCode& b) {
    const auto n = a.word_.size();
    if (n != b.word_.size()) return false;
    if (n == 0) return true;
    for (std::size_t shift = 0; shift < n; ++shift) {
      bool same = true;
      for (std::size_t i = 0; i < n && same; ++i)
        same = a.word_[(i + shift) % n] == b.word_[i];
      if (same) return true;
    }
    return false;
  }

 private:
  void validate() const {
    if (word_.size() % 2 != 0)
      throw ValidationError("word length " + std::to_string(word_.size()) + " is odd");
    const std::size_t n = word_.size() / 2;
    std::vector<int> overs(n, 0), unders(n, 0), signs(n, 0);
    for (const auto& v : word_) {
      if (v.sign != 1 && v.sign != -1)
        throw ValidationError("sign must be +1 or -1");
      if (v.crossing < 1 || v.crossing > n)
        throw ValidationError("crossing ids must be contiguous 1.." + std::to_string(n) +
                              ", found " + std::to_string(v.crossing));
      const auto i = v.crossing - 1;
      (v.layer == Layer::over ? overs : unders)[i]++;
      if (signs[i] != 0 && signs[i] != v.sign)
        throw ValidationError("crossing " + std::to_string(v.crossing) +
                              " has inconsistent signs");
      signs[i] = v.sign;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (overs[i] != 1 || unders[i] != 1)
        throw ValidationError("crossing " + std::to_string(i + 1) + " appears " +
                              std::to_string(overs[i]) + "x over and " +
                              std::to_string(unders[i]) + "x under");
    }
  }

  std::vector<Visit> word_;
};

/// Parses whitespace-separated tokens `("O"|"U") digits ("+"|"-")`.
inline SignedGaussCode parse_gauss(std::string_view text) {
  std::vector<Visit> word;
  std::size_t i = 0;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  };
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    const std::string_view tok = text.substr(start, i - start);
    auto bad = [&] { return ParseError("malformed token '" + std::string(tok) + "'"); };
    if (tok.size() < 3) throw bad();
    Visit v;
    if (tok.front() == 'O')
      v.layer = Layer::over;
    else if (tok.front() == 'U')
      v.layer = Layer::under;
    else
      throw bad();
    if (tok.back() == '+')
      v.sign = +1;
    else if (tok.back() == '-')
      v.sign = -1;
    else
      throw bad();
    std::uint64_t id = 0;
    for (char c : tok.substr(1, tok.size() - 2)) {
      if (c < '0' || c > '9') throw bad();
      id = id * 10 + static_cast<std::uint64_t>(c - '0');
      if (id > UINT32_MAX) throw bad();
    }
    v.crossing = static_cast<std::uint32_t>(id);
    word.push_back(v);
  }
  return SignedGaussCode(std::move(word));
}

inline std::string serialize_gauss(const SignedGaussCode& code) {
  std::string out;
  for (const auto& v : code.word()) {
    if (!out.empty()) out += ' ';
    out += v.layer == Layer::over ? 'O' : 'U';
    out += std::to_string(v.crossing);
    out += v.sign > 0 ? '+' : '-';
  }
  return out;
}

/// Replaces every crossing id i by perm(i); word order is unchanged.
inline SignedGaussCode relabel(const SignedGaussCode& code, const CrossingPermutation& perm) {
  if (perm.size() != code.crossings())
    throw ValidationError("permutation on " + std::to_string(perm.size()) +
                          " labels applied to a " + std::to_string(code.crossings()) +
                          "-crossing code");
  std::vector<Visit> w(code.word().begin(), code.word().end());
  for (auto& v : w) v.crossing = perm(v.crossing);
  return SignedGaussCode(std::move(w));
}

/// Splices `right` into `left` at word position `insert_pos`. Right's ids are
/// shifted by left's crossing count and its word stays contiguous.
inline SignedGaussCode connect_sum(const SignedGaussCode& left, const SignedGaussCode& right,
                                   std::size_t insert_pos) {
  if (insert_pos > left.word().size())
    throw ValidationError("insertion position " + std::to_string(insert_pos) +
                          " exceeds word length " + std::to_string(left.word().size()));
  const auto offset = static_cast<std::uint32_t>(left.crossings());
  std::vector<Visit> w;
  w.reserve(left.word().size() + right.word().size());
  w.insert(w.end(), left.word().begin(), left.word().begin() + static_cast<std::ptrdiff_t>(insert_pos));
  for (auto v : right.word()) {
    v.crossing += offset;
    w.push_back(v);
  }
  w.insert(w.end(), left.word().begin() + static_cast<std::ptrdiff_t>(insert_pos), left.word().end());
  return SignedGaussCode(std::move(w));
}

/// A uniformly shuffled double-occurrence word on n crossings with random
/// layers and signs. Not necessarily planar.
template <class URBG>
SignedGaussCode random_gauss_code(std::size_t n, URBG& rng) {
  std::vector<std::uint32_t> ids(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) ids[i] = static_cast<std::uint32_t>(i / 2 + 1);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<int> sign(n);
  std::vector<Layer> first(n);
  for (std::size_t i = 0; i < n; ++i) {
    sign[i] = coin(rng) ? 1 : -1;
    first[i] = coin(rng) ? Layer::over : Layer::under;
  }
  // Renumber by first appearance so ids read 1,2,3,... along the word.
  std::vector<std::uint32_t> rename(n + 1, 0);
  std::uint32_t next = 1;
  std::vector<bool> seen(n, false);
  std::vector<Visit> w;
  w.reserve(2 * n);
  for (auto id : ids) {
    if (rename[id] == 0) rename[id] = next++;
    const auto i = id - 1;
    const Layer layer = seen[i] ? (first[i] == Layer::over ? Layer::under : Layer::over) : first[i];
    seen[i] = true;
    w.push_back({rename[id], layer, sign[i]});
  }
  return SignedGaussCode(std::move(w));
}

}  // namespace trip_jones
