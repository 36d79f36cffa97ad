#pragma once

// Command-line front end. `run` is kept separate from main() so tests can
// drive it with in-memory streams.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "trip_jones/trip_jones.hpp"

namespace trip_jones::cli {

enum ExitCode : int {
  ok = 0,
  io_error = 1,
  parse_error = 2,
  validation_error = 3,
  resource_error = 4,
  verification_failed = 5,
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// One knot input given on the command line, in order of appearance.
struct Source {
  enum class Kind { gauss, knot, file } kind;
  std::string value;

  SignedGaussCode load() const {
    switch (kind) {
      case Kind::gauss: return parse_gauss(value);
      case Kind::knot: return lookup(value).code;
      case Kind::file: return parse_gauss(read_file(value));
    }
    return {};
  }
};

inline void add_sources(CLI::App* cmd, std::vector<Source>& sources, bool many) {
  auto push = [&sources](Source::Kind k) {
    return [&sources, k](const std::string& v) { sources.push_back({k, v}); };
  };
  const char* suffix = many ? " (repeatable)" : "";
  auto* g = cmd->add_option_function<std::string>("--gauss", push(Source::Kind::gauss),
                                                  std::string("signed Gauss code") + suffix);
  auto* k = cmd->add_option_function<std::string>("--knot", push(Source::Kind::knot),
                                                  std::string("knot table name") + suffix);
  auto* f = cmd->add_option_function<std::string>("--file", push(Source::Kind::file),
                                                  std::string("file holding a Gauss code") + suffix);
  for (auto* o : {g, k, f}) {
    o->trigger_on_parse();
    if (many) o->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  }
}

inline SignedGaussCode single_input(const std::vector<Source>& sources) {
  if (sources.size() != 1)
    throw CLI::ValidationError("input", "exactly one of --gauss, --knot, --file is required");
  return sources.front().load();
}

inline std::vector<SignedGaussCode> many_inputs(const std::vector<Source>& sources) {
  if (sources.empty())
    throw CLI::ValidationError("input", "at least one --gauss, --knot or --file is required");
  std::vector<SignedGaussCode> out;
  for (const auto& s : sources) out.push_back(s.load());
  return out;
}

inline std::string join_positions(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jones polynomials of knots from signed Gauss codes via trip matrices", "trip_jones"};
  app.require_subcommand(1);

  std::vector<detail::Source> sources;
  bool json = false;
  unsigned threads = 1;
  std::size_t at = 0;
  bool table_tsv = false, table_bake = false;
  std::string matrix_a, matrix_b;
  std::size_t bench_min = 8, bench_max = 20;
  std::uint64_t seed = 1;

  auto* jones_cmd = app.add_subcommand("jones", "print the Jones polynomial");
  detail::add_sources(jones_cmd, sources, false);
  jones_cmd->add_flag("--json", json, "emit a JSON result object");
  jones_cmd->add_option("--threads", threads, "state-sum workers")->check(CLI::Range(1u, 1024u));

  auto* matrix_cmd = app.add_subcommand("matrix", "print the trip matrix");
  detail::add_sources(matrix_cmd, sources, false);

  auto* bracket_cmd = app.add_subcommand("bracket", "print the reference Kauffman bracket in q");
  detail::add_sources(bracket_cmd, sources, false);

  auto* delta_cmd = app.add_subcommand("delta-eq", "decide row-column-swap equivalence of two matrix files");
  delta_cmd->add_option("first", matrix_a, "matrix file")->required();
  delta_cmd->add_option("second", matrix_b, "matrix file")->required();

  auto* consum_cmd = app.add_subcommand("consum", "connect-sum codes left to right");
  detail::add_sources(consum_cmd, sources, true);
  consum_cmd->add_option("--at", at, "insertion position into the accumulated word");

  auto* verify_cmd = app.add_subcommand("verify-mult", "check multiplicativity over a connect sum");
  detail::add_sources(verify_cmd, sources, true);

  auto* table_cmd = app.add_subcommand("table", "list the built-in knot table");
  table_cmd->add_flag("--tsv", table_tsv, "print the serialized table file");
  table_cmd->add_flag("--bake", table_bake, "recompute expected polynomials with the reference bracket");

  auto* bench_cmd = app.add_subcommand("bench", "time state sums on random codes of growing size");
  bench_cmd->add_option("--min-n", bench_min, "smallest crossing count")->check(CLI::Range(1, 24));
  bench_cmd->add_option("--max-n", bench_max, "largest crossing count")->check(CLI::Range(1, 24));
  bench_cmd->add_option("--threads", threads, "state-sum workers")->check(CLI::Range(1u, 1024u));
  bench_cmd->add_option("--seed", seed, "random seed");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return parse_error;
  }

  try {
    if (jones_cmd->parsed()) {
      const auto code = detail::single_input(sources);
      const auto t = build_trip_matrix(code);
      const auto v = jones_from_trip(t, calibrated, {threads, EnumerationOrder::gray});
      if (json) {
        nlohmann::json j;
        j["input"] = serialize_gauss(code);
        j["n"] = code.crossings();
        j["writhe"] = writhe(t);
        j["jones"] = to_json_terms(v);
        j["variable"] = v.is_integral_in_t() ? "t" : "q";
        out << j.dump() << '\n';
      } else {
        out << render(v) << '\n';
      }
    } else if (matrix_cmd->parsed()) {
      out << format_matrix(build_trip_matrix(detail::single_input(sources)).matrix());
    } else if (bracket_cmd->parsed()) {
      out << render(oracle::kauffman_bracket(detail::single_input(sources)), Variable::q) << '\n';
    } else if (delta_cmd->parsed()) {
      const TripMatrix a(parse_matrix(detail::read_file(matrix_a)));
      const TripMatrix b(parse_matrix(detail::read_file(matrix_b)));
      if (const auto w = find_delta_witness(a, b)) {
        out << "true\nwitness " << w->to_cycle_string() << '\n';
      } else {
        out << "false\n";
      }
    } else if (consum_cmd->parsed()) {
      const auto codes = detail::many_inputs(sources);
      SignedGaussCode acc = codes.front();
      for (std::size_t k = 1; k < codes.size(); ++k) acc = connect_sum(acc, codes[k], at);
      out << serialize_gauss(acc) << '\n';
    } else if (verify_cmd->parsed()) {
      const auto codes = detail::many_inputs(sources);
      const auto report = verify_multiplicative(codes);
      const auto& first = report.checks.front();
      if (report.passed())
        out << "equal; " << first.states_paired << " states paired\n";
      else
        out << "NOT equal\n";
      out << "product: " << render(report.product) << '\n';
      for (const auto& c : report.checks) {
        out << "splice at [" << detail::join_positions(c.insert_positions) << "]: "
            << serialize_gauss(c.composite) << '\n'
            << "  jones: " << render(c.composite_jones) << (c.jones_equal ? "" : "  (mismatch)")
            << '\n'
            << "  writhe additive: " << (c.writhe_additive ? "yes" : "no") << '\n'
            << "  states paired: " << c.states_paired << " of " << c.states_total << '\n';
        if (c.counterexample) out << "  first unpaired state mask: " << *c.counterexample << '\n';
      }
      return report.passed() ? ok : verification_failed;
    } else if (table_cmd->parsed()) {
      const auto entries = table_bake ? bake_entries() : all_entries();
      if (table_tsv || table_bake) {
        out << serialize_table(entries);
      } else {
        for (const auto& e : entries)
          out << std::left << std::setw(28) << e.name << std::setw(4) << e.crossing_number
              << render(e.expected_jones) << '\n';
      }
    } else if (bench_cmd->parsed()) {
      std::mt19937_64 rng(seed);
      out << "n\tstates\tthreads\tms\n";
      for (std::size_t n = bench_min; n <= bench_max; ++n) {
        const auto t = build_trip_matrix(random_gauss_code(n, rng));
        const auto start = std::chrono::steady_clock::now();
        const auto v = state_sum(t, {threads, EnumerationOrder::gray});
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        out << n << '\t' << (std::uint64_t{1} << n) << '\t' << threads << '\t' << std::fixed
            << std::setprecision(1) << ms << '\n';
        (void)v;
      }
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return parse_error;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return parse_error;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return validation_error;
  } catch (const UnknownKnot& e) {
    err << "validation error: " << e.what() << '\n';
    return validation_error;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return resource_error;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return resource_error;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return io_error;
  }
  return ok;
}

}  // namespace trip_jones::cli
