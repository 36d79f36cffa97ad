// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "trip_jones/trip_jones.hpp"

using namespace trip_jones;

namespace {

struct Check {
  bool ok = true;
  std::string why;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

const Gf2Matrix figure8_rows = Gf2Matrix::from_rows({"0011", "0011", "1110", "1101"});
const Gf2Matrix figure8_second_rows = Gf2Matrix::from_rows({"1110", "1001", "1001", "0111"});
const Gf2Matrix composite_rows = Gf2Matrix::from_rows({
    "1110000000", "1110000000", "1110000000",
    "0000011000", "0000011000", "0001110000", "0001101000",
    "0000000111", "0000000111", "0000000111",
});

std::string data(const char* name) { return std::string(TRIP_JONES_DATA_DIR) + "/" + name; }

// ---- oracles local to this file ----

// Trip count by walking the word: from the over visit of j forward to the next
// visit of j, parity of visits to i.
bool walked_entry(const SignedGaussCode& code, std::uint32_t i, std::uint32_t j) {
  const auto w = code.word();
  if (i == j) return code.sign(i) > 0;
  std::size_t start = 0;
  while (!(w[start].crossing == j && w[start].layer == Layer::over)) ++start;
  int count = 0;
  for (std::size_t k = 1; k < w.size(); ++k) {
    const auto& v = w[(start + k) % w.size()];
    if (v.crossing == j) break;
    if (v.crossing == i) ++count;
  }
  return count % 2 == 1;
}

// Kernel size by enumeration; only used for small n.
std::size_t kernel_nullity(const Gf2Matrix& m) {
  const std::size_t n = m.size();
  std::size_t kernel = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    bool zero = true;
    for (std::size_t i = 0; i < n && zero; ++i) {
      int dot = 0;
      for (std::size_t j = 0; j < n; ++j) dot ^= (m.get(i, j) && ((x >> j) & 1u)) ? 1 : 0;
      zero = dot == 0;
    }
    kernel += zero;
  }
  std::size_t k = 0;
  while ((std::size_t{1} << k) < kernel) ++k;
  return k;
}

TripMatrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
  Gf2Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const bool v = rng() & 1u;
      m.set(i, j, v);
      m.set(j, i, v);
    }
  return TripMatrix(std::move(m));
}

// ---- criteria ----

Check figure_eight_matrix() {
  Check c;
  const auto code = lookup("figure8").code;
  const auto t = build_trip_matrix(code);
  c.expect(t.matrix() == figure8_rows, "matrix differs:\n" + format_matrix(t.matrix()));
  for (std::uint32_t i = 1; i <= 4; ++i)
    for (std::uint32_t j = 1; j <= 4; ++j)
      c.expect(t(i, j) == walked_entry(code, i, j), "walked trip count disagrees");
  return c;
}

Check relabeling_example() {
  Check c;
  const TripMatrix first(figure8_rows);
  c.expect(delta_swap(first, 1, 3).matrix() == figure8_second_rows, "delta(1,3) mismatch");
  const auto w = find_delta_witness(first, TripMatrix(figure8_second_rows));
  c.expect(w.has_value() && w->to_cycle_string() == "(1 3)", "witness is not (1 3)");
  std::ostringstream out, err;
  const int code = cli::run({"delta-eq", data("figure8_first.txt"), data("figure8_second.txt")}, out, err);
  c.expect(code == 0 && out.str() == "true\nwitness (1 3)\n", "delta-eq output: " + out.str() + err.str());
  return c;
}

Check composite_blocks() {
  Check c;
  const TripMatrix trefoil(Gf2Matrix::ones(3));
  const TripMatrix composite = block_compose({trefoil, TripMatrix(figure8_rows), trefoil});
  c.expect(composite.matrix() == composite_rows, "block_compose mismatch");
  const std::vector<std::size_t> want{3, 4, 3};
  c.expect(block_decompose(composite).sizes() == want, "decompose sizes");
  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < 20; ++trial) {
    const auto shuffled = apply_permutation(composite, CrossingPermutation::random(10, rng));
    auto sizes = block_decompose(shuffled).sizes();
    std::vector<std::size_t> sorted = sizes;
    std::sort(sorted.begin(), sorted.end());
    c.expect(sorted == std::vector<std::size_t>{3, 3, 4}, "shuffled decompose sizes");
    // The 4-block must still be the figure-eight block up to relabeling.
    for (const auto& g : block_decompose(shuffled).groups)
      if (g.size() == 4)
        c.expect(delta_equivalent(principal_submatrix(shuffled, g), TripMatrix(figure8_rows)),
                 "recovered 4-block is not the figure-eight block");
  }
  return c;
}

Check calibration_anchor() {
  Check c;
  const TripMatrix ones(Gf2Matrix::ones(3));
  int integral = 0;
  int chosen = 0;
  for (int eps : {+1, -1}) {
    if (jones_from_trip(ones, Calibration{eps}).is_integral_in_t()) {
      ++integral;
      chosen = eps;
    }
  }
  c.expect(integral == 1, "integral for " + std::to_string(integral) + " signs");
  c.expect(chosen == calibrated.writhe_exponent_sign, "calibrated sign differs from the integral one");
  const LaurentPoly anchor{{-16, -1}, {-12, 1}, {-4, 1}};
  const auto v = jones_from_trip(ones);
  c.expect(v == anchor, "got " + render(v));
  return c;
}

Check figure_eight_jones() {
  Check c;
  const LaurentPoly want{{-8, 1}, {-4, -1}, {0, 1}, {4, -1}, {8, 1}};
  const auto v = jones(lookup("figure8").code);
  c.expect(v == want, "got " + render(v));
  c.expect(render(v) == "t^-2 - t^-1 + 1 - t + t^2", "render: " + render(v));
  return c;
}

Check oracle_equivalence() {
  Check c;
  const auto& all = all_entries();
  c.expect(all.size() >= 12, "table too small");
  for (const auto& e : all)
    c.expect(jones(e.code) == oracle::jones_reference(e.code), "table entry " + e.name);
  std::mt19937_64 rng(1006);
  int done = 0;
  while (done < 50) {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    if (a.crossing_number + b.crossing_number > 14) continue;
    const auto pos = rng() % (a.code.word().size() + 1);
    const auto composite = connect_sum(a.code, b.code, pos);
    c.expect(jones(composite) == oracle::jones_reference(composite), a.name + " # " + b.name);
    ++done;
  }
  return c;
}

Check multiplicativity() {
  Check c;
  const auto& all = all_entries();
  for (const auto& a : all)
    for (const auto& b : all) {
      if (a.crossing_number + b.crossing_number > 12) continue;
      const std::vector<SignedGaussCode> pair{a.code, b.code};
      c.expect(verify_multiplicative(pair).passed(), a.name + " , " + b.name);
    }
  const std::vector<SignedGaussCode> three{lookup("trefoil+").code, lookup("figure8").code,
                                           lookup("trefoil+").code};
  const auto report = verify_multiplicative(three);
  c.expect(report.passed(), "three-factor case");
  c.expect(report.product == lookup("trefoil+#figure8#trefoil+").expected_jones, "three-factor value");
  return c;
}

Check additivity() {
  Check c;
  std::mt19937_64 rng(1008);
  for (int trial = 0; trial < 1000 && c.ok; ++trial) {
    const std::size_t na = 1 + rng() % 8, nb = 1 + rng() % 8;
    const auto a = random_symmetric(na, rng);
    const auto b = random_symmetric(nb, rng);
    const auto t = block_compose({a, b});
    c.expect(rank(t.matrix()) == rank(a.matrix()) + rank(b.matrix()), "rank additivity");
    c.expect(kernel_nullity(t.matrix()) == kernel_nullity(a.matrix()) + kernel_nullity(b.matrix()),
             "nullity additivity");
    c.expect(writhe(t) == writhe(a) + writhe(b), "writhe additivity");

    const std::size_t sizes_arr[] = {na, nb};
    const auto partition = BlockPartition::contiguous(sizes_arr);
    const State s{rng() & ((std::uint64_t{1} << t.size()) - 1), t.size()};
    const auto parts = split_state(s, partition);
    c.expect(parts[0].a_count() + parts[1].a_count() == s.a_count(), "A-count additivity");
    c.expect(parts[0].b_count() + parts[1].b_count() == s.b_count(), "B-count additivity");
    // Toggled nullity splits too, so each summand factors.
    const auto whole = nullity(toggle_diagonal(t.matrix(), ToggleMask::from_bits(s.mask)));
    const auto left = nullity(toggle_diagonal(a.matrix(), ToggleMask::from_bits(parts[0].mask)));
    const auto right = nullity(toggle_diagonal(b.matrix(), ToggleMask::from_bits(parts[1].mask)));
    c.expect(whole == left + right, "state nullity additivity");
  }
  return c;
}

Check delta_calculus() {
  Check c;
  std::mt19937_64 rng(1009);
  for (int trial = 0; trial < 1000 && c.ok; ++trial) {
    const auto code = random_gauss_code(1 + rng() % 9, rng);
    const auto p = CrossingPermutation::random(code.crossings(), rng);
    const auto t = build_trip_matrix(code);

    const std::size_t i = rng() % t.size(), j = rng() % t.size();
    Gf2Matrix rows_first = t.matrix(), cols_first = t.matrix();
    rows_first.swap_rows(i, j);
    rows_first.swap_columns(i, j);
    cols_first.swap_columns(i, j);
    cols_first.swap_rows(i, j);
    c.expect(rows_first == cols_first, "swap order matters");

    const auto relabeled = relabel(code, p);
    c.expect(build_trip_matrix(relabeled) == apply_permutation(t, p), "build does not commute with relabel");
    c.expect(jones(relabeled) == jones(code), "jones changed under relabel");
    c.expect(jones_from_trip(apply_permutation(t, p)) == jones_from_trip(t), "jones changed under permutation");
    c.expect(jones_from_trip(TripMatrix(rows_first)) == jones_from_trip(t), "jones changed under swap");
  }
  return c;
}

Check performance() {
  Check c;
  std::mt19937_64 rng(1010);
  const auto t = build_trip_matrix(random_gauss_code(20, rng));
  const auto start = std::chrono::steady_clock::now();
  const auto single = state_sum(t, {.threads = 1});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 60.0, "took " + std::to_string(secs) + " s");
  for (unsigned threads : {2u, 4u, 7u})
    c.expect(state_sum(t, {.threads = threads}) == single, "threads=" + std::to_string(threads) + " differs");
  c.expect(state_sum(t, {.threads = 1, .order = EnumerationOrder::lexicographic}) == single,
           "enumeration order changes result");
  std::printf("  (20-crossing state sum, 1 thread: %.2f s)\n", secs);
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria = {
      {"figure-eight trip matrix", figure_eight_matrix},
      {"relabeling example and witness", relabeling_example},
      {"composite block structure", composite_blocks},
      {"calibration anchor", calibration_anchor},
      {"figure-eight Jones polynomial", figure_eight_jones},
      {"engine equals bracket oracle", oracle_equivalence},
      {"multiplicativity under connected sum", multiplicativity},
      {"block additivity properties", additivity},
      {"relabeling calculus properties", delta_calculus},
      {"20-crossing performance and thread determinism", performance},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.why = std::string("exception: ") + e.what();
    }
    if (c.ok) {
      std::printf("PASS %2d %s\n", index, name);
    } else {
      std::printf("FAIL %2d %s: %s\n", index, name, c.why.c_str());
      ++failed;
    }
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", index - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
