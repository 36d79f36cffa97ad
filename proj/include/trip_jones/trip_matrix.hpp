#pragma once

// Trip matrices of signed Gauss codes, the row-column swap calculus on them,
// and block structure.
//
// Off-diagonal entry (i,j) is the parity of visits to crossing i made while
// travelling from one visit of j to the next, which is 1 exactly when the
// chords of i and j interleave in the cyclic word. Diagonal entry (i,i) is 1
// exactly when crossing i is positive.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "trip_jones/errors.hpp"
#include "trip_jones/gauss_code.hpp"
#include "trip_jones/gf2_matrix.hpp"

namespace trip_jones {

/// Symmetric Gf2Matrix indexed by crossing labels.
class TripMatrix {
 public:
  TripMatrix() = default;

  /// Throws ValidationError if `m` is not symmetric.
  explicit TripMatrix(Gf2Matrix m) : m_(std::move(m)) {
    if (!m_.is_symmetric()) throw ValidationError("trip matrix must be symmetric");
  }

  std::size_t size() const noexcept { return m_.size(); }
  const Gf2Matrix& matrix() const noexcept { return m_; }

  /// 1-based entry access, matching crossing labels.
  bool operator()(std::size_t i, std::size_t j) const noexcept { return m_.get(i - 1, j - 1); }

  friend bool operator==(const TripMatrix&, const TripMatrix&) = default;

 private:
  Gf2Matrix m_;
};

/// Ordered partition of {1..n} into index groups (1-based).
struct BlockPartition {
  std::vector<std::vector<std::size_t>> groups;

  std::size_t total() const noexcept {
    std::size_t n = 0;
    for (const auto& g : groups) n += g.size();
    return n;
  }

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> s;
    for (const auto& g : groups) s.push_back(g.size());
    return s;
  }

  /// Sends the k-th element of the concatenated groups to k (1-based).
  CrossingPermutation sorting_permutation() const {
    std::vector<std::uint32_t> images(total(), 0);
    std::uint32_t k = 1;
    for (const auto& g : groups)
      for (auto idx : g) images.at(idx - 1) = k++;
    return CrossingPermutation(std::move(images));
  }

  /// Consecutive ranges of the given sizes: {1..s0}, {s0+1..s0+s1}, ...
  static BlockPartition contiguous(std::span<const std::size_t> sizes) {
    BlockPartition p;
    std::size_t next = 1;
    for (auto s : sizes) {
      std::vector<std::size_t> g(s);
      std::iota(g.begin(), g.end(), next);
      next += s;
      p.groups.push_back(std::move(g));
    }
    return p;
  }

  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;
};

inline TripMatrix build_trip_matrix(const SignedGaussCode& code) {
  const std::size_t n = code.crossings();
  const auto occ = code.occurrences();
  Gf2Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto [a, b] = occ[j];
      const bool first_inside = occ[i].first > a && occ[i].first < b;
      const bool second_inside = occ[i].second > a && occ[i].second < b;
      if (first_inside != second_inside) {
        m.set(i, j, true);
        m.set(j, i, true);
      }
    }
  }
  for (const auto& v : code.word())
    if (v.sign > 0) m.set(v.crossing - 1, v.crossing - 1, true);
  return TripMatrix(std::move(m));
}

/// Diagonal ones minus diagonal zeros.
inline int writhe(const TripMatrix& t) {
  int w = 0;
  for (std::size_t i = 0; i < t.size(); ++i) w += t.matrix().get(i, i) ? 1 : -1;
  return w;
}

/// Swaps rows i and j, then columns i and j (1-based).
inline TripMatrix delta_swap(const TripMatrix& t, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > t.size() || j > t.size())
    throw ValidationError("row-column swap index out of range");
  Gf2Matrix m = t.matrix();
  m.swap_rows(i - 1, j - 1);
  m.swap_columns(i - 1, j - 1);
  return TripMatrix(std::move(m));
}

/// Result entry (perm(i), perm(j)) equals t(i, j).
inline TripMatrix apply_permutation(const TripMatrix& t, const CrossingPermutation& perm) {
  if (perm.size() != t.size()) throw ValidationError("permutation size mismatch");
  Gf2Matrix m(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      if (t.matrix().get(i, j))
        m.set(perm(static_cast<std::uint32_t>(i + 1)) - 1,
              perm(static_cast<std::uint32_t>(j + 1)) - 1, true);
  return TripMatrix(std::move(m));
}

namespace detail {

// Per-index signature that any row-column relabeling preserves.
struct IndexProfile {
  bool diagonal;
  std::size_t weight;                  // off-diagonal ones in the row
  std::vector<std::size_t> neighbours;  // sorted weights of adjacent indices

  friend auto operator<=>(const IndexProfile&, const IndexProfile&) = default;
};

inline std::vector<IndexProfile> index_profiles(const Gf2Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> weight(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && m.get(i, j)) ++weight[i];
  std::vector<IndexProfile> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i].diagonal = m.get(i, i);
    out[i].weight = weight[i];
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && m.get(i, j)) out[i].neighbours.push_back(weight[j]);
    std::sort(out[i].neighbours.begin(), out[i].neighbours.end());
  }
  return out;
}

class DeltaSearch {
 public:
  DeltaSearch(const Gf2Matrix& a, const Gf2Matrix& b)
      : a_(a), b_(b), pa_(index_profiles(a)), pb_(index_profiles(b)),
        source_(b.size(), SIZE_MAX), used_(a.size(), false) {}

  // source_[i] is the index of `a` whose row lands on row i of `b`.
  bool run(std::size_t i = 0) {
    const std::size_t n = b_.size();
    if (i == n) return true;
    auto try_candidate = [&](std::size_t c) {
      if (used_[c] || pa_[c] != pb_[i]) return false;
      for (std::size_t k = 0; k < i; ++k)
        if (a_.get(c, source_[k]) != b_.get(i, k)) return false;
      used_[c] = true;
      source_[i] = c;
      if (run(i + 1)) return true;
      used_[c] = false;
      source_[i] = SIZE_MAX;
      return false;
    };
    // Prefer leaving i fixed so witnesses move as few labels as possible.
    if (try_candidate(i)) return true;
    for (std::size_t c = 0; c < n; ++c)
      if (c != i && try_candidate(c)) return true;
    return false;
  }

  CrossingPermutation witness() const {
    std::vector<std::uint32_t> images(b_.size());
    for (std::size_t i = 0; i < b_.size(); ++i)
      images[source_[i]] = static_cast<std::uint32_t>(i + 1);
    return CrossingPermutation(std::move(images));
  }

 private:
  const Gf2Matrix& a_;
  const Gf2Matrix& b_;
  std::vector<IndexProfile> pa_, pb_;
  std::vector<std::size_t> source_;
  std::vector<bool> used_;
};

}  // namespace detail

/// A permutation p with apply_permutation(a, p) == b, if one exists.
/// Backtracking over index assignments, pruned by per-index profiles
/// (diagonal, row weight, sorted neighbour weights).
inline std::optional<CrossingPermutation> find_delta_witness(const TripMatrix& a,
                                                             const TripMatrix& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto pa = detail::index_profiles(a.matrix());
  auto pb = detail::index_profiles(b.matrix());
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  if (pa != pb) return std::nullopt;
  if (rank(a.matrix()) != rank(b.matrix())) return std::nullopt;
  detail::DeltaSearch search(a.matrix(), b.matrix());
  if (!search.run()) return std::nullopt;
  return search.witness();
}

inline bool delta_equivalent(const TripMatrix& a, const TripMatrix& b) {
  return find_delta_witness(a, b).has_value();
}

inline TripMatrix block_compose(std::span<const TripMatrix> blocks) {
  std::vector<Gf2Matrix> ms;
  ms.reserve(blocks.size());
  for (const auto& b : blocks) ms.push_back(b.matrix());
  return TripMatrix(block_diag(std::span<const Gf2Matrix>(ms)));
}

inline TripMatrix block_compose(std::initializer_list<TripMatrix> blocks) {
  return block_compose(std::span<const TripMatrix>(blocks.begin(), blocks.size()));
}

/// Connected components of the off-diagonal support, ordered by smallest
/// member. The diagonal is ignored.
inline BlockPartition block_decompose(const TripMatrix& t) {
  const std::size_t n = t.size();
  std::vector<std::size_t> component(n, SIZE_MAX);
  BlockPartition out;
  for (std::size_t start = 0; start < n; ++start) {
    if (component[start] != SIZE_MAX) continue;
    const std::size_t id = out.groups.size();
    std::vector<std::size_t> group;
    std::vector<std::size_t> stack{start};
    component[start] = id;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      group.push_back(v + 1);
      for (std::size_t u = 0; u < n; ++u)
        if (u != v && component[u] == SIZE_MAX && t.matrix().get(v, u)) {
          component[u] = id;
          stack.push_back(u);
        }
    }
    std::sort(group.begin(), group.end());
    out.groups.push_back(std::move(group));
  }
  return out;
}

/// Principal submatrix on the given (1-based) indices, in that order.
inline TripMatrix principal_submatrix(const TripMatrix& t, std::span<const std::size_t> indices) {
  Gf2Matrix m(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b < indices.size(); ++b)
      m.set(a, b, t(indices[a], indices[b]));
  return TripMatrix(std::move(m));
}

}  // namespace trip_jones
