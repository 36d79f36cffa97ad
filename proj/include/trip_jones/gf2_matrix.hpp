#pragma once

// Square matrices over GF(2) with rows packed into 64-bit words.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trip_jones/errors.hpp"

namespace trip_jones {

/// A set of diagonal positions (1-based) to flip.
class ToggleMask {
 public:
  ToggleMask() = default;

  /// Bit k of `bits` selects position k+1.
  static ToggleMask from_bits(std::uint64_t bits) {
    ToggleMask m;
    for (std::size_t k = 0; k < 64; ++k)
      if ((bits >> k) & 1u) m.positions_.push_back(k + 1);
    return m;
  }

  static ToggleMask from_positions(std::initializer_list<std::size_t> positions) {
    return from_positions(std::vector<std::size_t>(positions));
  }

  static ToggleMask from_positions(std::vector<std::size_t> positions) {
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    ToggleMask m;
    m.positions_ = std::move(positions);
    return m;
  }

  std::span<const std::size_t> positions() const noexcept { return positions_; }
  bool empty() const noexcept { return positions_.empty(); }

 private:
  std::vector<std::size_t> positions_;
};

class Gf2Matrix {
 public:
  static constexpr std::size_t word_bits = 64;

  Gf2Matrix() = default;
  explicit Gf2Matrix(std::size_t n)
      : n_(n), words_per_row_((n + word_bits - 1) / word_bits), bits_(n * words_per_row_, 0) {}

  /// Rows given as strings of '0'/'1', all of length rows.size().
  static Gf2Matrix from_rows(std::initializer_list<std::string_view> rows) {
    Gf2Matrix m(rows.size());
    std::size_t i = 0;
    for (auto row : rows) {
      if (row.size() != rows.size()) throw ParseError("row length mismatch");
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] != '0' && row[j] != '1') throw ParseError("matrix entries must be 0 or 1");
        m.set(i, j, row[j] == '1');
      }
      ++i;
    }
    return m;
  }

  static Gf2Matrix identity(std::size_t n) {
    Gf2Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  static Gf2Matrix ones(std::size_t n) {
    Gf2Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, true);
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  // 0-based entry access.
  bool get(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_per_row_ + j / word_bits] >> (j % word_bits)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool v) noexcept {
    auto& w = bits_[i * words_per_row_ + j / word_bits];
    const std::uint64_t b = std::uint64_t{1} << (j % word_bits);
    w = v ? (w | b) : (w & ~b);
  }
  void flip(std::size_t i, std::size_t j) noexcept {
    bits_[i * words_per_row_ + j / word_bits] ^= std::uint64_t{1} << (j % word_bits);
  }

  std::span<const std::uint64_t> row(std::size_t i) const noexcept {
    return {bits_.data() + i * words_per_row_, words_per_row_};
  }

  /// Single-word view of row i; valid only when size() <= 64.
  std::uint64_t row_word(std::size_t i) const noexcept {
    return words_per_row_ == 0 ? 0 : bits_[i * words_per_row_];
  }

  std::size_t row_weight(std::size_t i) const noexcept {
    std::size_t w = 0;
    for (auto word : row(i)) w += static_cast<std::size_t>(std::popcount(word));
    return w;
  }

  bool is_symmetric() const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (get(i, j) != get(j, i)) return false;
    return true;
  }

  void swap_rows(std::size_t i, std::size_t j) noexcept {
    if (i == j) return;
    std::swap_ranges(bits_.begin() + static_cast<std::ptrdiff_t>(i * words_per_row_),
                     bits_.begin() + static_cast<std::ptrdiff_t>((i + 1) * words_per_row_),
                     bits_.begin() + static_cast<std::ptrdiff_t>(j * words_per_row_));
  }

  void swap_columns(std::size_t i, std::size_t j) noexcept {
    if (i == j) return;
    for (std::size_t r = 0; r < n_; ++r) {
      const bool a = get(r, i);
      set(r, i, get(r, j));
      set(r, j, a);
    }
  }

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Rank over GF(2) by column-wise elimination with lowest-index pivot rows.
inline std::size_t rank(const Gf2Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 0;
  const std::size_t wpr = m.row(0).size();
  std::vector<std::uint64_t> rows;
  rows.reserve(n * wpr);
  for (std::size_t i = 0; i < n; ++i) rows.insert(rows.end(), m.row(i).begin(), m.row(i).end());
  auto at = [&](std::size_t r) { return rows.data() + r * wpr; };

  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < n; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = r;
    while (pivot < n && !(at(pivot)[w] & bit)) ++pivot;
    if (pivot == n) continue;
    if (pivot != r) std::swap_ranges(at(pivot), at(pivot) + wpr, at(r));
    for (std::size_t k = r + 1; k < n; ++k)
      if (at(k)[w] & bit)
        for (std::size_t x = w; x < wpr; ++x) at(k)[x] ^= at(r)[x];
    ++r;
  }
  return r;
}

inline std::size_t nullity(const Gf2Matrix& m) { return m.size() - rank(m); }

/// Copy of `m` with the diagonal flipped at the mask's (1-based) positions.
inline Gf2Matrix toggle_diagonal(const Gf2Matrix& m, const ToggleMask& mask) {
  Gf2Matrix out = m;
  for (auto p : mask.positions()) {
    if (p < 1 || p > m.size())
      throw ValidationError("toggle position " + std::to_string(p) + " outside 1.." +
                            std::to_string(m.size()));
    out.flip(p - 1, p - 1);
  }
  return out;
}

inline Gf2Matrix block_diag(std::span<const Gf2Matrix> blocks) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  Gf2Matrix out(total);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        if (b.get(i, j)) out.set(off + i, off + j, true);
    off += b.size();
  }
  return out;
}

inline Gf2Matrix block_diag(std::initializer_list<Gf2Matrix> blocks) {
  return block_diag(std::span<const Gf2Matrix>(blocks.begin(), blocks.size()));
}

/// n lines of n characters in {0,1}; no separators.
inline std::string format_matrix(const Gf2Matrix& m) {
  std::string out;
  out.reserve(m.size() * (m.size() + 1));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out += m.get(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

/// Accepts n non-blank lines of n entries from {0,1}, optionally separated by
/// spaces or tabs. Blank input is the 0x0 matrix.
inline Gf2Matrix parse_matrix(std::string_view text) {
  std::vector<std::vector<bool>> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::vector<bool> row;
    for (char c : text.substr(pos, eol - pos)) {
      if (c == '0' || c == '1')
        row.push_back(c == '1');
      else if (c != ' ' && c != '\t' && c != '\r')
        throw ParseError(std::string("unexpected character '") + c + "' in matrix text");
    }
    if (!row.empty()) rows.push_back(std::move(row));
    pos = eol + 1;
  }
  Gf2Matrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw ParseError("matrix row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(rows.size()));
    for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

}  // namespace trip_jones
