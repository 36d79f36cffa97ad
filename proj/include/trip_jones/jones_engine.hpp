#pragma once

// Jones polynomial from a trip matrix by the diagonal-toggling state sum:
//
//   V = (-q^3)^(ε·w) · Σ_S q^(B(S) - A(S)) · (-q^-2 - q^2)^nullity(T_S)
//
// where q = t^(1/4), S runs over all 2^n A/B states, T_S is the trip matrix
// with the diagonal flipped at the B crossings, and ε is the calibrated
// writhe exponent sign.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "trip_jones/errors.hpp"
#include "trip_jones/gauss_code.hpp"
#include "trip_jones/gf2_matrix.hpp"
#include "trip_jones/laurent_poly.hpp"
#include "trip_jones/trip_matrix.hpp"

namespace trip_jones {

inline constexpr std::size_t max_state_sum_crossings = 24;

/// Bit i set means crossing i+1 is assigned B.
struct State {
  std::uint64_t mask = 0;
  std::size_t n = 0;

  std::size_t b_count() const noexcept { return static_cast<std::size_t>(std::popcount(mask)); }
  std::size_t a_count() const noexcept { return n - b_count(); }

  friend bool operator==(const State&, const State&) = default;
};

struct Calibration {
  int writhe_exponent_sign = -1;
};

/// Pinned by the chiral anchor: with "positive crossing -> diagonal 1", only
/// ε = -1 sends the all-positive trefoil to a polynomial in t.
inline constexpr Calibration calibrated{-1};

enum class EnumerationOrder { gray, lexicographic };

struct StateSumOptions {
  unsigned threads = 1;
  EnumerationOrder order = EnumerationOrder::gray;
};

namespace detail {

// Rank of up to 64 single-word rows; same pivoting rule as trip_jones::rank.
inline std::size_t packed_rank(std::array<std::uint64_t, 64> rows, std::size_t n) noexcept {
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < n; ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t pivot = r;
    while (pivot < n && !(rows[pivot] & bit)) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[pivot], rows[r]);
    const std::uint64_t p = rows[r];
    for (std::size_t k = r + 1; k < n; ++k)
      if (rows[k] & bit) rows[k] ^= p;
    ++r;
  }
  return r;
}

// histogram[b * (n + 1) + nul] counts states with b B-crossings and the
// given nullity.
using StateHistogram = std::vector<std::int64_t>;

inline StateHistogram histogram_range(const TripMatrix& t, std::uint64_t lo, std::uint64_t hi,
                                      EnumerationOrder order) {
  const std::size_t n = t.size();
  StateHistogram h((n + 1) * (n + 1), 0);
  if (lo >= hi) return h;
  std::array<std::uint64_t, 64> base{};
  for (std::size_t i = 0; i < n; ++i) base[i] = t.matrix().row_word(i);

  auto code_of = [order](std::uint64_t i) {
    return order == EnumerationOrder::gray ? (i ^ (i >> 1)) : i;
  };
  // Seed the working rows at the first state, then walk the range. In Gray
  // order each step flips exactly one diagonal entry.
  std::uint64_t mask = code_of(lo);
  std::array<std::uint64_t, 64> rows = base;
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1u) rows[i] ^= std::uint64_t{1} << i;
  for (std::uint64_t i = lo;;) {
    const std::size_t nul = n - packed_rank(rows, n);
    const auto b = static_cast<std::size_t>(std::popcount(mask));
    ++h[b * (n + 1) + nul];
    if (++i == hi) break;
    const std::uint64_t next = code_of(i);
    std::uint64_t changed = next ^ mask;
    while (changed) {
      const auto k = static_cast<std::size_t>(std::countr_zero(changed));
      rows[k] ^= std::uint64_t{1} << k;
      changed &= changed - 1;
    }
    mask = next;
  }
  return h;
}

inline LaurentPoly histogram_to_poly(const StateHistogram& h, std::size_t n) {
  std::vector<LaurentPoly> loop_powers{LaurentPoly::one()};
  for (std::size_t k = 1; k <= n; ++k) loop_powers.push_back(loop_powers.back() * LaurentPoly::loop_factor());
  LaurentPoly sum;
  for (std::size_t b = 0; b <= n; ++b)
    for (std::size_t nul = 0; nul <= n; ++nul) {
      const auto count = h[b * (n + 1) + nul];
      if (count == 0) continue;
      const auto shift = static_cast<std::int64_t>(2 * b) - static_cast<std::int64_t>(n);
      for (const auto& [e, c] : loop_powers[nul].terms())
        sum.accumulate(e + shift, detail::checked_mul(c, count));
    }
  return sum;
}

inline void check_state_sum_size(std::size_t n) {
  if (n > max_state_sum_crossings)
    throw ResourceError(std::to_string(n) + " crossings exceeds the supported maximum of " +
                        std::to_string(max_state_sum_crossings));
}

}  // namespace detail

/// Partial state sum over enumeration indices [lo, hi). In Gray order index
/// i visits mask i ^ (i >> 1).
inline LaurentPoly state_sum_range(const TripMatrix& t, std::uint64_t lo, std::uint64_t hi,
                                   EnumerationOrder order = EnumerationOrder::gray) {
  detail::check_state_sum_size(t.size());
  const std::uint64_t total = std::uint64_t{1} << t.size();
  hi = std::min(hi, total);
  return detail::histogram_to_poly(detail::histogram_range(t, lo, hi, order), t.size());
}

/// Σ_S q^(B-A) · d^nullity(T_S) over all 2^n states. With more than one
/// thread the index space is cut into contiguous ranges whose partial sums
/// are added; the result does not depend on the thread count.
inline LaurentPoly state_sum(const TripMatrix& t, const StateSumOptions& opts = {}) {
  detail::check_state_sum_size(t.size());
  const std::size_t n = t.size();
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t workers = std::clamp<std::uint64_t>(opts.threads, 1, total);
  if (workers == 1) return state_sum_range(t, 0, total, opts.order);

  std::vector<detail::StateHistogram> partial(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t lo = total * w / workers;
    const std::uint64_t hi = total * (w + 1) / workers;
    pool.emplace_back([&, w, lo, hi] { partial[w] = detail::histogram_range(t, lo, hi, opts.order); });
  }
  for (auto& th : pool) th.join();
  LaurentPoly sum;
  for (const auto& h : partial) sum += detail::histogram_to_poly(h, n);
  return sum;
}

/// The single summand of state `s`: q^(B-A) · d^nullity(T_S).
inline LaurentPoly state_summand(const TripMatrix& t, const State& s) {
  if (s.n != t.size()) throw ValidationError("state width does not match matrix size");
  const auto nul = nullity(toggle_diagonal(t.matrix(), ToggleMask::from_bits(s.mask)));
  const auto shift = static_cast<std::int64_t>(s.b_count()) - static_cast<std::int64_t>(s.a_count());
  return LaurentPoly::monomial(shift) * pow(LaurentPoly::loop_factor(), static_cast<std::int64_t>(nul));
}

/// (-q^3)^(ε·w) · state_sum(t).
inline LaurentPoly jones_from_trip(const TripMatrix& t, Calibration cal = calibrated,
                                   const StateSumOptions& opts = {}) {
  const auto prefactor = pow(LaurentPoly::monomial(3, -1), cal.writhe_exponent_sign * writhe(t));
  return prefactor * state_sum(t, opts);
}

inline LaurentPoly jones(const SignedGaussCode& code, const StateSumOptions& opts = {}) {
  return jones_from_trip(build_trip_matrix(code), calibrated, opts);
}

/// Restricts `s` to each group; bit k of part g is the k-th member of group g.
inline std::vector<State> split_state(const State& s, const BlockPartition& partition) {
  if (partition.total() != s.n) throw ValidationError("partition does not cover the state");
  std::vector<bool> covered(s.n, false);
  std::vector<State> parts;
  parts.reserve(partition.groups.size());
  for (const auto& g : partition.groups) {
    State part{0, g.size()};
    for (std::size_t k = 0; k < g.size(); ++k) {
      const auto idx = g[k];
      if (idx < 1 || idx > s.n || covered[idx - 1])
        throw ValidationError("partition is not a partition of 1.." + std::to_string(s.n));
      covered[idx - 1] = true;
      if ((s.mask >> (idx - 1)) & 1u) part.mask |= std::uint64_t{1} << k;
    }
    parts.push_back(part);
  }
  return parts;
}

struct SpliceCheck {
  std::vector<std::size_t> insert_positions;  // one per splice, in order
  SignedGaussCode composite;
  LaurentPoly composite_jones;
  bool jones_equal = false;
  bool writhe_additive = false;
  std::uint64_t states_total = 0;
  std::uint64_t states_paired = 0;
  std::optional<std::uint64_t> counterexample;  // composite state mask
};

struct VerificationReport {
  std::vector<SignedGaussCode> components;
  LaurentPoly product;  // Π V(component)
  std::vector<SpliceCheck> checks;

  bool passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const SpliceCheck& c) {
      return c.jones_equal && c.writhe_additive && !c.counterexample &&
             c.states_paired == c.states_total;
    });
  }
};

enum class SplicePoint { front, middle };

namespace detail {

inline SpliceCheck check_splice(std::span<const SignedGaussCode> components,
                                std::span<const TripMatrix> blocks, const LaurentPoly& product,
                                SplicePoint where) {
  SpliceCheck out;
  for (const auto& c : components) {
    const std::size_t pos = where == SplicePoint::front ? 0 : out.composite.word().size() / 2;
    out.insert_positions.push_back(pos);
    out.composite = connect_sum(out.composite, c, pos);
  }
  const auto t = build_trip_matrix(out.composite);
  out.composite_jones = jones_from_trip(t);
  out.jones_equal = out.composite_jones == product;

  int block_writhe = 0;
  for (const auto& b : blocks) block_writhe += writhe(b);
  out.writhe_additive = writhe(t) == block_writhe;

  // Spliced ids keep component order whatever the insertion point.
  std::vector<std::size_t> sizes;
  for (const auto& c : components) sizes.push_back(c.crossings());
  const auto partition = BlockPartition::contiguous(sizes);

  // Term by term: each composite summand equals the product of the summands
  // of its sub-states.
  const std::size_t n = t.size();
  out.states_total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < out.states_total; ++mask) {
    const State s{mask, n};
    const auto parts = split_state(s, partition);
    LaurentPoly rhs = LaurentPoly::one();
    for (std::size_t k = 0; k < parts.size(); ++k) rhs *= state_summand(blocks[k], parts[k]);
    if (state_summand(t, s) == rhs)
      ++out.states_paired;
    else if (!out.counterexample)
      out.counterexample = mask;
  }
  return out;
}

}  // namespace detail

/// Checks V(K1 # ... # Kk) = Π V(Ki) exactly, together with the per-state
/// pairing of summands, at two splice points: each component inserted at the
/// front of the accumulated word, and at its midpoint.
inline VerificationReport verify_multiplicative(std::span<const SignedGaussCode> components) {
  std::size_t total = 0;
  for (const auto& c : components) total += c.crossings();
  detail::check_state_sum_size(total);

  VerificationReport report;
  report.components.assign(components.begin(), components.end());
  std::vector<TripMatrix> blocks;
  report.product = LaurentPoly::one();
  for (const auto& c : components) {
    blocks.push_back(build_trip_matrix(c));
    report.product *= jones_from_trip(blocks.back());
  }
  for (auto where : {SplicePoint::front, SplicePoint::middle})
    report.checks.push_back(detail::check_splice(components, blocks, report.product, where));
  return report;
}

}  // namespace trip_jones
