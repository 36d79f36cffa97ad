#pragma once

// Exact sparse Laurent polynomials in q = t^(1/4) with checked int64
// coefficients. Exponents are quarter-powers of t, so every exponent that
// appears in a state sum is an ordinary integer.

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "trip_jones/errors.hpp"

namespace trip_jones {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("coefficient overflow in multiplication");
  return r;
}

}  // namespace detail

class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Coefficient = std::int64_t;
  using Terms = std::map<Exponent, Coefficient>;

  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<std::pair<const Exponent, Coefficient>> terms) {
    for (const auto& [e, c] : terms) accumulate(e, c);
  }

  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return monomial(0, 1); }
  static LaurentPoly monomial(Exponent e, Coefficient c = 1) {
    LaurentPoly p;
    p.accumulate(e, c);
    return p;
  }
  /// The loop value d = -q^-2 - q^2.
  static LaurentPoly loop_factor() { return {{-2, -1}, {2, -1}}; }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Coefficient coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  /// True when every exponent is a multiple of 4, i.e. the value is a
  /// Laurent polynomial in t.
  bool is_integral_in_t() const noexcept {
    for (const auto& [e, c] : terms_)
      if (e % 4 != 0) return false;
    return true;
  }

  /// Adds c·q^e in place.
  void accumulate(Exponent e, Coefficient c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = detail::checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) accumulate(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) accumulate(e, detail::checked_mul(c, -1));
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly{} - a; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        if (__builtin_add_overflow(ea, eb, &e)) throw OverflowError("exponent overflow");
        out.accumulate(e, detail::checked_mul(ca, cb));
      }
    return out;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  /// Substitutes q -> q^-1.
  LaurentPoly mirrored() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Terms terms_;
};

/// a^k. Negative k is defined only for monomials ±q^e.
inline LaurentPoly pow(const LaurentPoly& a, std::int64_t k) {
  if (k < 0) {
    if (a.term_count() != 1 || (a.terms().begin()->second != 1 && a.terms().begin()->second != -1))
      throw ValidationError("negative power of a polynomial that is not ±q^e");
    const auto [e, c] = *a.terms().begin();
    const std::int64_t m = -k;
    return LaurentPoly::monomial(detail::checked_mul(e, -m), (m % 2 == 0) ? 1 : c);
  }
  LaurentPoly result = LaurentPoly::one();
  LaurentPoly base = a;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

enum class Variable { t, q };

namespace detail {

inline void render_term(std::string& out, LaurentPoly::Coefficient c, std::int64_t e,
                        const char* var, bool first) {
  const bool negative = c < 0;
  // |INT64_MIN| is not representable; print its digits directly.
  std::string mag = std::to_string(c);
  if (negative) mag.erase(0, 1);
  if (first)
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (e == 0) {
    out += mag;
    return;
  }
  if (mag != "1") out += mag;
  out += var;
  if (e != 1) out += "^" + std::to_string(e);
}

}  // namespace detail

/// Renders in ascending order, e.g. "-t^-4 + t^-3 + t^-1". With Variable::t,
/// a polynomial with exponents not divisible by 4 falls back to q and is
/// marked "[non-integral t-powers]".
inline std::string render(const LaurentPoly& p, Variable var = Variable::t) {
  if (p.is_zero()) return "0";
  const bool in_t = var == Variable::t && p.is_integral_in_t();
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    detail::render_term(out, c, in_t ? e / 4 : e, in_t ? "t" : "q", first);
    first = false;
  }
  if (var == Variable::t && !in_t) out += " [non-integral t-powers]";
  return out;
}

/// JSON term list: [{"exp_quarter": e, "coeff": c}, ...] ascending by e.
inline nlohmann::json to_json_terms(const LaurentPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back({{"exp_quarter", e}, {"coeff", c}});
  return arr;
}

inline LaurentPoly from_json_terms(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("term list must be a JSON array");
  LaurentPoly p;
  bool have_prev = false;
  std::int64_t prev = 0;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("exp_quarter") || !term.contains("coeff") ||
        !term["exp_quarter"].is_number_integer() || !term["coeff"].is_number_integer())
      throw ParseError("term must be {\"exp_quarter\": int, \"coeff\": int}");
    const auto e = term["exp_quarter"].get<std::int64_t>();
    const auto c = term["coeff"].get<std::int64_t>();
    if (c == 0) throw ParseError("zero coefficient in term list");
    if (have_prev && e <= prev) throw ParseError("term list must be strictly ascending");
    have_prev = true;
    prev = e;
    p.accumulate(e, c);
  }
  return p;
}

}  // namespace trip_jones
