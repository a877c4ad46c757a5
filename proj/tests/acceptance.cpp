// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            run every criterion
//   acceptance 3 5        run only the listed criteria
//
// Exit status is nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iterator>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "hexcolor/analysis.hpp"
#include "hexcolor/coloring.hpp"
#include "hexcolor/evaluator.hpp"
#include "hexcolor/geometry.hpp"
#include "hexcolor/optimizer.hpp"
#include "oracles.hpp"

using namespace hexcolor;

namespace {

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, std::string note) {
    if (ok) return;
    pass = false;
    notes.push_back(std::move(note));
  }
};

struct Timed {
  SolveAllResult result;
  double seconds = 0.0;
};

std::map<int, Timed>& cache() {
  static std::map<int, Timed> c;
  return c;
}

const Timed& solved(int k) {
  auto& c = cache();
  if (auto it = c.find(k); it != c.end()) return it->second;
  const auto t0 = std::chrono::steady_clock::now();
  SolveAllResult r = solve_all(k);
  const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c.emplace(k, Timed{std::move(r), sec}).first->second;
}

Verdict table_regression() {
  Verdict v;
  const auto& table = embedded_reference();
  double worst = 0.0;
  double slowest = 0.0;
  for (int k = 3; k <= 30; ++k) {
    const Timed& t = solved(k);
    const ReferenceRow* row = find_row(table, k);
    const double delta = t.result.champion.d - row->d_approx;
    worst = std::max(worst, std::abs(delta));
    slowest = std::max(slowest, t.seconds);
    v.require(std::abs(delta) <= 1e-4,
              fmt::format("k={} d={:.6f} reference={:.6f} delta={:+.2e}", k, t.result.champion.d, row->d_approx, delta));
    v.require(t.seconds <= 5.0, fmt::format("k={} took {:.2f}s (budget 5s)", k, t.seconds));
  }
  v.notes.push_back(fmt::format("k=3..30 worst |delta|={:.2e}, slowest k {:.2f}s", worst, slowest));
  return v;
}

Verdict exact_rationals() {
  Verdict v;
  struct Case {
    int k;
    HexClass cls;
    Fraction expected;
  };
  const Case cases[] = {
      {8, HexClass::semi_regular, {49, 25}},
      {15, HexClass::semi_regular, {153, 32}},
      {24, HexClass::rectilinear, {869, 86}},
      {22, HexClass::rectilinear, {193496, 21275}},
  };
  for (const auto& c : cases) {
    const SolveResult& r = solved(c.k).result.champion;
    const bool close = std::abs(r.dsq - c.expected.value()) <= 1e-8;
    const bool exact = r.dsq_rational && *r.dsq_rational == c.expected;
    v.require(close && exact && r.class_tag == c.cls,
              fmt::format("k={} dsq={:.12f} reconstructed={} expected {}", c.k, r.dsq,
                          r.dsq_rational ? r.dsq_rational->str() : "none", c.expected.str()));
  }
  return v;
}

Verdict closed_form_cross_checks() {
  Verdict v;
  for (int k : {6, 20, 30}) {
    const double dsq = solve(k, HexClass::rectilinear).dsq;
    const double f = cubic_f(k).dsq;
    v.require(std::abs(dsq - f) < 1e-6, fmt::format("k={} solve d2={:.10f} cubic_f={:.10f}", k, dsq, f));
  }
  for (int k : {11, 23}) {
    const double dsq = solve(k, HexClass::rectilinear).dsq;
    const double q = quartic_dsq(k);
    v.require(std::abs(dsq - q) < 1e-6, fmt::format("k={} solve d2={:.10f} quartic={:.10f}", k, dsq, q));
  }
  return v;
}

Verdict loeschian_closed_form() {
  Verdict v;
  // Regular column of the reference table.
  const std::pair<int, Fraction> cases[] = {
      {4, {3, 4}},   {7, {7, 4}},   {9, {3, 1}},   {12, {4, 1}},  {13, {19, 4}},
      {16, {27, 4}}, {19, {31, 4}}, {21, {37, 4}}, {25, {12, 1}}, {27, {49, 4}},
      {28, {13, 1}}, {49, {27, 1}}, {84, {49, 1}}, {147, {367, 4}},
  };
  for (const auto& [k, expected] : cases) {
    const auto got = regular_dsq(k);
    v.require(got && *got == expected,
              fmt::format("k={} regular d2={} expected {}", k, got ? got->str() : "none", expected.str()));
  }
  return v;
}

Verdict record_spot_checks() {
  Verdict v;
  const auto& r112 = solved(112).result;
  v.require(r112.champion.class_tag == HexClass::rectilinear && r112.champion.dsq > 67.0 + 1e-3,
            fmt::format("k=112 champion {} d2={:.6f}", to_string(r112.champion.class_tag), r112.champion.dsq));
  v.require(cubic_f(156).dsq > 97.0, fmt::format("cubic_f(156)={:.6f}", cubic_f(156).dsq));
  const double reg756 = regular_dsq(756)->value();
  v.require(cubic_f(756).dsq > reg756, fmt::format("cubic_f(756)={:.6f} regular={:.6f}", cubic_f(756).dsq, reg756));
  return v;
}

Verdict property_suite() {
  Verdict v;
  std::vector<std::pair<int, TripleRepresentation>> triples;

  for (int k = 5; k <= 15; ++k) {
    const auto& r = solved(k).result;
    v.require(r.per_class[1].d >= r.per_class[0].d && r.per_class[2].d >= r.per_class[1].d,
              fmt::format("nesting k={}: {:.9f} {:.9f} {:.9f}", k, r.per_class[0].d, r.per_class[1].d,
                          r.per_class[2].d));
  }

  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> gap(0.02, std::numbers::pi - 0.02);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  int area_fail = 0;
  int rot_fail = 0;
  for (int n = 0; n < 1000; ++n) {
    double a = 0.0;
    double b = 0.0;
    do {
      a = gap(rng);
      b = gap(rng);
    } while (a + b >= std::numbers::pi - 0.02);
    const Hexagon h = hexagon_from_gaps(a, b);
    if (std::abs(lattice_basis(h).cell_area() - polygon_area(h)) > 1e-10) ++area_fail;
    const int k = 3 + n % 28;
    const auto all = schemes(k);
    const ColorScheme s = all[static_cast<std::size_t>(n) % all.size()];
    const double d = min_distance_over_offsets(h, s).d;
    const double dr = min_distance_over_offsets(h.rotated(angle(rng)), s).d;
    if (std::abs(d - dr) > 1e-10) ++rot_fail;
    triples.emplace_back(k, canonical_triple(h, s));
  }
  v.require(area_fail == 0, fmt::format("area identity failed on {} of 1000 shapes", area_fail));
  v.require(rot_fail == 0, fmt::format("rotation invariance failed on {} of 1000 shapes", rot_fail));

  const WindowPolicy narrow{.slack = 1, .min_window = 0, .geometric_guard = false};
  for (int k = 3; k <= 30; ++k) {
    const auto& r = solved(k).result;
    const WindowPolicy wide{.slack = 1,
                            .min_window = static_cast<int>(std::ceil(4.0 * std::sqrt(static_cast<double>(k)))),
                            .geometric_guard = false};
    for (const auto& c : r.per_class) {
      triples.emplace_back(k, c.triple);
      const Hexagon h = c.hexagon();
      const double dn = min_distance_over_offsets(h, c.scheme, narrow).d;
      const double dw = min_distance_over_offsets(h, c.scheme, wide).d;
      v.require(dn == dw, fmt::format("window bound k={} {}: {:.12f} vs {:.12f}", k, to_string(c.class_tag), dn, dw));
      v.require(std::abs(dn - c.d) <= 1e-12, fmt::format("k={} {} reported d differs from re-evaluation", k,
                                                           to_string(c.class_tag)));
    }
  }
  int bad_det = 0;
  for (const auto& [k, t] : triples) {
    if (t.determinant() != k) ++bad_det;
  }
  v.require(bad_det == 0, fmt::format("{} of {} triples violate k = i1 j2 - i2 j1", bad_det, triples.size()));

  double worst = 0.0;
  for (int k = 3; k <= 12; ++k) {
    const double grid = oracle::grid_optimum(k, 120);
    const double best = solved(k).result.champion.d;
    worst = std::max(worst, best - grid);
    v.require(grid <= best + 1e-9 && best - grid <= 2e-3,
              fmt::format("grid oracle k={}: grid {:.6f} solve {:.6f}", k, grid, best));
  }
  v.notes.push_back(fmt::format("{} triples checked; grid oracle worst gap {:.2e}", triples.size(), worst));
  return v;
}

Verdict non_monotonicity() {
  Verdict v;
  const auto& table = embedded_reference();
  const auto report = monotonicity_report(reference_distances(table));
  bool flags_29 = false;
  std::vector<std::string> step3;
  for (const auto& m : report) {
    if (m.k == 29 && m.k - m.n == 25) flags_29 = true;
    if (m.n == 3) step3.push_back(fmt::format("d({})<d({})", m.k, m.k - 3));
  }
  v.require(flags_29, "d(29) < d(25) not flagged");
  std::string listing;
  for (const auto& s : step3) listing += (listing.empty() ? "" : " ") + s;
  v.require(step3.empty(), fmt::format("{} k-3 violations in reference rows {}..{}: {}", step3.size(),
                                       table.front().k, table.back().k, listing));
  std::vector<ReferenceRow> baseline;
  std::copy_if(table.begin(), table.end(), std::back_inserter(baseline), [](const ReferenceRow& r) { return r.k <= 30; });
  const auto base = monotonicity_report(reference_distances(baseline));
  const bool base_29 = std::ranges::any_of(base, [](const MonotonicityViolation& m) { return m.k == 29 && m.n == 4; });
  const bool base_step3 = std::ranges::any_of(base, [](const MonotonicityViolation& m) { return m.n == 3; });
  v.notes.push_back(fmt::format("rows 3..30 alone: d(29)<d(25) {}, k-3 violations {}", base_29 ? "flagged" : "missed",
                                base_step3 ? "present" : "none"));
  return v;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "reference regression, k = 3..30", table_regression},
      {2, "exact rationals", exact_rationals},
      {3, "closed-form cross-checks", closed_form_cross_checks},
      {4, "Loeschian closed form", loeschian_closed_form},
      {5, "record spot checks", record_spot_checks},
      {6, "property suite", property_suite},
      {7, "non-monotonicity reproduction", non_monotonicity},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  bool all_pass = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.notes.push_back(std::string("exception: ") + e.what());
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    fmt::print("criterion {}: {} - {} ({:.1f}s)\n", c.id, v.pass ? "PASS" : "FAIL", c.name, sec);
    for (const auto& n : v.notes) fmt::print("    {}\n", n);
    all_pass = all_pass && v.pass;
  }
  return all_pass ? EXIT_SUCCESS : EXIT_FAILURE;
}
