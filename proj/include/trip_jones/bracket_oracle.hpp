#pragma once

// Reference Kauffman bracket by explicit smoothing and loop counting. Shares
// only the Gauss code and polynomial types with the trip-matrix engine.
//
// Arc k runs from visit k to visit k+1 (cyclically). At a crossing visited at
// positions p and p', the oriented smoothing joins arc p-1 to arc p' and arc
// p'-1 to arc p; the unoriented smoothing joins arc p-1 to arc p'-1 and arc
// p to arc p'. Which of the two a letter selects depends on the crossing sign.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "trip_jones/errors.hpp"
#include "trip_jones/gauss_code.hpp"
#include "trip_jones/laurent_poly.hpp"

namespace trip_jones::oracle {

inline constexpr std::size_t max_oracle_crossings = 16;

/// Which smoothing the letter A selects at a positive crossing; negative
/// crossings take the other one.
enum class ASmoothing { unoriented_at_positive, oriented_at_positive };

struct OracleCalibration {
  ASmoothing letters = ASmoothing::unoriented_at_positive;
  int writhe_sign = -1;
};

/// Fixed by the all-positive trefoil anchor (-t^-4 + t^-3 + t^-1).
inline constexpr OracleCalibration calibrated{ASmoothing::unoriented_at_positive, -1};

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --sets_;
  }

  std::size_t sets() const noexcept { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t sets_;
};

/// Loops after smoothing every crossing; bit i of `b_mask` assigns crossing
/// i+1 the letter B.
inline std::size_t count_loops(const SignedGaussCode& code, std::uint64_t b_mask,
                               ASmoothing letters = calibrated.letters) {
  const auto word = code.word();
  const std::size_t len = word.size();
  if (len == 0) return 1;
  std::vector<std::size_t> first(code.crossings() + 1, SIZE_MAX);
  DisjointSet arcs(len);
  for (std::size_t p2 = 0; p2 < len; ++p2) {
    const auto id = word[p2].crossing;
    if (first[id] == SIZE_MAX) {
      first[id] = p2;
      continue;
    }
    const std::size_t p1 = first[id];
    const bool letter_b = (b_mask >> (id - 1)) & 1u;
    const bool positive = word[p2].sign > 0;
    const bool a_unoriented = (letters == ASmoothing::unoriented_at_positive) == positive;
    const bool unoriented = a_unoriented != letter_b;
    const std::size_t in1 = (p1 + len - 1) % len, in2 = (p2 + len - 1) % len;
    if (unoriented) {
      arcs.unite(in1, in2);
      arcs.unite(p1, p2);
    } else {
      arcs.unite(in1, p2);
      arcs.unite(in2, p1);
    }
  }
  return arcs.sets();
}

/// Σ_S q^(B-A) · (-q^-2 - q^2)^(loops(S) - 1).
inline LaurentPoly kauffman_bracket(const SignedGaussCode& code,
                                    ASmoothing letters = calibrated.letters) {
  const std::size_t n = code.crossings();
  if (n > max_oracle_crossings)
    throw ResourceError("the reference bracket supports at most " +
                        std::to_string(max_oracle_crossings) + " crossings");
  // counts[b][loops]
  std::vector<std::vector<std::int64_t>> counts(n + 1, std::vector<std::int64_t>(n + 2, 0));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto b = static_cast<std::size_t>(__builtin_popcountll(mask));
    ++counts[b][count_loops(code, mask, letters)];
  }
  const LaurentPoly d{{-2, -1}, {2, -1}};
  LaurentPoly sum;
  for (std::size_t b = 0; b <= n; ++b)
    for (std::size_t loops = 1; loops <= n + 1; ++loops) {
      if (counts[b][loops] == 0) continue;
      const auto shift = static_cast<std::int64_t>(2 * b) - static_cast<std::int64_t>(n);
      sum += LaurentPoly::monomial(shift, counts[b][loops]) *
             pow(d, static_cast<std::int64_t>(loops - 1));
    }
  return sum;
}

/// (-q^3)^(c · Σ signs) · <code>.
inline LaurentPoly jones_reference(const SignedGaussCode& code,
                                   OracleCalibration cal = calibrated) {
  int signs = 0;
  for (const auto& v : code.word()) signs += v.sign;
  signs /= 2;
  return pow(LaurentPoly::monomial(3, -1), cal.writhe_sign * signs) *
         kauffman_bracket(code, cal.letters);
}

}  // namespace trip_jones::oracle
