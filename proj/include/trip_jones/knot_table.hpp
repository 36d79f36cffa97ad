#pragma once

// Built-in corpus of named knots. Expected Jones polynomials were produced by
// the reference bracket (`trip_jones table --bake`) and are stored here as
// data; tests recompute them from both the engine and the oracle.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "trip_jones/bracket_oracle.hpp"
#include "trip_jones/errors.hpp"
#include "trip_jones/gauss_code.hpp"
#include "trip_jones/laurent_poly.hpp"

namespace trip_jones {

struct KnotEntry {
  std::string name;
  SignedGaussCode code;
  LaurentPoly expected_jones;
  std::size_t crossing_number = 0;
  // Composite entries only: component names and the insertion position of
  // each splice (the first splice goes into the unknot, so it is always 0).
  std::vector<std::string> components;
  std::vector<std::size_t> splice_positions;
};

class UnknownKnot : public Error {
 public:
  using Error::Error;
};

namespace detail {

struct PrimeRecord {
  const char* name;
  const char* code;
  std::size_t crossing_number;
  LaurentPoly jones;
};

struct CompositeRecord {
  const char* name;
  std::vector<std::string> components;
  std::vector<std::size_t> splice_positions;
  LaurentPoly jones;
};

inline std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Prime diagrams. Crossing signs follow the right-hand rule.
inline const std::vector<PrimeRecord>& prime_records() {
  static const std::vector<PrimeRecord> records = {
      {"unknot", "", 0, {{0, 1}}},
      {"trefoil+", "O1+ U2+ O3+ U1+ O2+ U3+", 3, {{-16, -1}, {-12, 1}, {-4, 1}}},
      {"trefoil-", "O1- U2- O3- U1- O2- U3-", 3, {{4, 1}, {12, 1}, {16, -1}}},
      {"figure8", "O1- U2- O3+ U4+ O2- U1- O4+ U3+", 4,
       {{-8, 1}, {-4, -1}, {0, 1}, {4, -1}, {8, 1}}},
      {"5_1", "U1- O2- U3- O4- U5- O1- U2- O3- U4- O5-", 5,
       {{8, 1}, {16, 1}, {20, -1}, {24, 1}, {28, -1}}},
      {"5_2", "U1+ O2+ U3+ O1+ U4+ O5+ U2+ O3+ U5+ O4+", 5,
       {{-24, -1}, {-20, 1}, {-16, -1}, {-12, 2}, {-8, -1}, {-4, 1}}},
      {"6_1", "U1- O2+ U3+ O1- U4- O5- U6- O3+ U2+ O6- U5- O4-", 6,
       {{-8, 1}, {-4, -1}, {0, 2}, {4, -2}, {8, 1}, {12, -1}, {16, 1}}},
      {"6_2", "U1- O2+ U3+ O1- U4- O5- U6- O3+ U2+ O4- U5- O6-", 6,
       {{-4, 1}, {0, -1}, {4, 2}, {8, -2}, {12, 2}, {16, -2}, {20, 1}}},
      {"6_3", "O1+ U2+ O3+ U1+ O4- U5- O2+ U3+ O6- U4- O5- U6-", 6,
       {{-12, -1}, {-8, 2}, {-4, -2}, {0, 3}, {4, -2}, {8, 2}, {12, -1}}},
  };
  return records;
}

inline const std::vector<CompositeRecord>& composite_records() {
  static const std::vector<CompositeRecord> records = {
      {"granny", {"trefoil+", "trefoil+"}, {0, 3},
       {{-32, 1}, {-28, -2}, {-24, 1}, {-20, -2}, {-16, 2}, {-8, 1}}},
      {"square", {"trefoil+", "trefoil-"}, {0, 3},
       {{-12, -1}, {-8, 1}, {-4, -1}, {0, 3}, {4, -1}, {8, 1}, {12, -1}}},
      // Block structure trefoil | figure-eight | trefoil.
      {"trefoil+#figure8#trefoil+", {"trefoil+", "figure8", "trefoil+"}, {0, 3, 5},
       {{-40, 1}, {-36, -3}, {-32, 4}, {-28, -6}, {-24, 8}, {-20, -7}, {-16, 6},
        {-12, -5}, {-8, 3}, {-4, -1}, {0, 1}}},
  };
  return records;
}

inline std::vector<KnotEntry> build_entries() {
  std::vector<KnotEntry> out;
  for (const auto& r : prime_records())
    out.push_back({r.name, parse_gauss(r.code), r.jones, r.crossing_number, {}, {}});
  for (const auto& r : composite_records()) {
    KnotEntry e;
    e.name = r.name;
    e.expected_jones = r.jones;
    e.components = r.components;
    e.splice_positions = r.splice_positions;
    for (std::size_t k = 0; k < r.components.size(); ++k) {
      const auto it = std::find_if(out.begin(), out.end(),
                                   [&](const KnotEntry& x) { return x.name == r.components[k]; });
      if (it == out.end()) throw UnknownKnot("unknown component " + r.components[k]);
      e.code = connect_sum(e.code, it->code, r.splice_positions.at(k));
    }
    e.crossing_number = e.code.crossings();
    out.push_back(std::move(e));
  }
  std::stable_sort(out.begin(), out.end(), [](const KnotEntry& a, const KnotEntry& b) {
    return a.crossing_number != b.crossing_number ? a.crossing_number < b.crossing_number
                                                  : a.name < b.name;
  });
  return out;
}

}  // namespace detail

/// Every entry, ordered by (crossing number, name).
inline const std::vector<KnotEntry>& all_entries() {
  static const std::vector<KnotEntry> entries = detail::build_entries();
  return entries;
}

/// Exact, case-insensitive name lookup.
inline const KnotEntry& lookup(std::string_view name) {
  const auto key = detail::lowercase(name);
  for (const auto& e : all_entries())
    if (detail::lowercase(e.name) == key) return e;
  throw UnknownKnot("unknown knot '" + std::string(name) + "'");
}

/// Recomputes every expected polynomial with the reference bracket.
inline std::vector<KnotEntry> bake_entries() {
  auto entries = all_entries();
  for (auto& e : entries) e.expected_jones = oracle::jones_reference(e.code);
  return entries;
}

// Table text format: one record per line, three tab-separated fields
//   name <TAB> gauss code <TAB> jones JSON term list
// Lines starting with '#' and blank lines are ignored.

inline std::string serialize_table(const std::vector<KnotEntry>& entries) {
  std::string out = "# name\tgauss code\tjones (JSON term list in q = t^(1/4))\n";
  for (const auto& e : entries)
    out += e.name + '\t' + serialize_gauss(e.code) + '\t' + to_json_terms(e.expected_jones).dump() + '\n';
  return out;
}

struct TableRecord {
  std::string name;
  SignedGaussCode code;
  LaurentPoly jones;
};

inline std::vector<TableRecord> parse_table(std::istream& in) {
  std::vector<TableRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos)
      throw ParseError("table line " + std::to_string(lineno) + ": expected 3 tab-separated fields");
    TableRecord r;
    r.name = line.substr(0, t1);
    r.code = parse_gauss(std::string_view(line).substr(t1 + 1, t2 - t1 - 1));
    try {
      r.jones = from_json_terms(nlohmann::json::parse(line.substr(t2 + 1)));
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError("table line " + std::to_string(lineno) + ": " + ex.what());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace trip_jones
