#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "doctest.h"
#include "hexcolor/coloring.hpp"
#include "hexcolor/errors.hpp"
#include "hexcolor/geometry.hpp"
#include "oracles.hpp"

using namespace hexcolor;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

int divisor_sum(int k) {
  int s = 0;
  for (int d = 1; d <= k; ++d) {
    if (k % d == 0) s += d;
  }
  return s;
}

std::pair<double, double> random_gaps(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, kPi - 0.05);
  for (;;) {
    const double a = u(rng);
    const double b = u(rng);
    if (a + b < kPi - 0.05) return {a, b};
  }
}

}  // namespace

TEST_CASE("regular lattice basis") {
  const LatticeBasis b = lattice_basis(regular_hexagon());
  CHECK(b.e_i.x == Approx(std::sqrt(3.0) / 2.0));
  CHECK(b.e_i.y == Approx(0.0).scale(1.0));
  CHECK(b.e_j.x == Approx(std::sqrt(3.0) / 4.0));
  CHECK(b.e_j.y == Approx(0.75));
}

TEST_CASE("fundamental domain has the tile's area on random shapes") {
  std::mt19937_64 rng(17);
  for (int n = 0; n < 1000; ++n) {
    const auto [a, c] = random_gaps(rng);
    const Hexagon h = hexagon_from_gaps(a, c);
    const LatticeBasis b = lattice_basis(h);
    CHECK(b.cell_area() == Approx(polygon_area(h)).epsilon(1e-10).scale(1.0));
    const auto ob = oracle::basis(a, c);
    CHECK(b.e_i.x == Approx(ob[0].x).scale(1.0));
    CHECK(b.e_j.y == Approx(ob[1].y).scale(1.0));
  }
}

TEST_CASE("scheme enumeration is complete and ordered") {
  for (int k = 1; k <= 60; ++k) {
    const auto all = schemes(k);
    CHECK(static_cast<int>(all.size()) == divisor_sum(k));
    CHECK(std::is_sorted(all.begin(), all.end()));
    // Distinct sublattices: each is determined by its membership pattern on
    // a k x k block.
    std::set<std::vector<bool>> patterns;
    for (const auto& s : all) {
      std::vector<bool> pat;
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) pat.push_back(same_color(s, {i, j}));
      }
      patterns.insert(pat);
    }
    CHECK(patterns.size() == all.size());
  }
  CHECK_THROWS_AS(schemes(0), DomainError);
}

TEST_CASE("scheme validity") {
  CHECK(is_valid({7, 7, 2}));
  CHECK_FALSE(is_valid({7, 7, 7}));
  CHECK_FALSE(is_valid({8, 3, 0}));
  CHECK_FALSE(is_valid({0, 1, 0}));
  CHECK_THROWS_AS(require_valid({6, 4, 1}), DomainError);
}

TEST_CASE("same_color is the sublattice with index k") {
  const ColorScheme s{22, 11, 6};
  CHECK(same_color(s, {11, 0}));
  CHECK(same_color(s, {6, 2}));
  CHECK(same_color(s, {-5, 2}));
  CHECK(same_color(s, {12, 4}));
  CHECK_FALSE(same_color(s, {6, 1}));
  CHECK_FALSE(same_color(s, {1, 0}));
  int count = 0;
  for (int i = 0; i < 22; ++i) {
    for (int j = 0; j < 22; ++j) count += same_color(s, {i, j}) ? 1 : 0;
  }
  CHECK(count == 22);
}

TEST_CASE("offset enumeration") {
  CHECK(enumeration_window(7) == 7);
  CHECK(enumeration_window(9, 0) == 6);
  const ColorScheme s{7, 7, 2};
  const auto offs = same_color_offsets(s);
  std::set<TileIndex> seen(offs.begin(), offs.end());
  CHECK(seen.size() == offs.size());
  for (TileIndex t : offs) {
    CHECK(same_color(s, t));
    CHECK((t.j > 0 || (t.j == 0 && t.i > 0)));
    if (t != TileIndex{7, 0}) CHECK(std::abs(t.i) + t.j < 7);
  }
  CHECK(seen.count({2, 1}) == 1);
  CHECK(seen.count({7, 0}) == 1);
  // Generators are always listed, even when the window is too small.
  const auto tiny = same_color_offsets({30, 30, 7}, 2);
  CHECK(std::find(tiny.begin(), tiny.end(), TileIndex{30, 0}) != tiny.end());
  CHECK(std::find(tiny.begin(), tiny.end(), TileIndex{7, 1}) != tiny.end());
}

TEST_CASE("regular 7-coloring distance") {
  const auto od = min_distance_over_offsets(regular_hexagon(), {7, 7, 2});
  CHECK(od.d == Approx(std::sqrt(7.0) / 2.0));
  CHECK(min_distance_over_offsets(regular_hexagon(), {4, 2, 0}).d == Approx(std::sqrt(3.0) / 2.0));
  CHECK(min_distance_over_offsets(regular_hexagon(), {3, 3, 1}).d == Approx(0.5));
}

TEST_CASE("scheme distance matches the direct sublattice oracle") {
  std::mt19937_64 rng(23);
  for (int n = 0; n < 300; ++n) {
    const auto [a, c] = random_gaps(rng);
    const Hexagon h = hexagon_from_gaps(a, c);
    const int k = 3 + n % 28;
    const auto all = schemes(k);
    const ColorScheme s = all[static_cast<std::size_t>(n) % all.size()];
    CHECK(min_distance_over_offsets(h, s).d == Approx(oracle::scheme_distance(k, s.g, s.h, a, c)).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("bound sufficiency: the default window agrees with a 4 sqrt(k) window") {
  std::mt19937_64 rng(29);
  for (int k = 3; k <= 30; ++k) {
    const int wide = static_cast<int>(std::ceil(4.0 * std::sqrt(static_cast<double>(k))));
    for (int n = 0; n < 6; ++n) {
      const auto [a, c] = random_gaps(rng);
      const Hexagon h = hexagon_from_gaps(a, c);
      for (const auto& s : schemes(k)) {
        const double base = min_distance_over_offsets(h, s).d;
        const double big = min_distance_over_offsets(h, s, {.slack = 1, .min_window = wide}).d;
        CHECK(base == big);
      }
    }
  }
}

TEST_CASE("scheme distance is rotation invariant") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
  for (int n = 0; n < 200; ++n) {
    const auto [a, c] = random_gaps(rng);
    const Hexagon h = hexagon_from_gaps(a, c);
    const Hexagon hr = h.rotated(ang(rng));
    const int k = 3 + n % 20;
    for (const auto& s : schemes(k)) {
      CHECK(min_distance_over_offsets(hr, s).d == Approx(min_distance_over_offsets(h, s).d).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("SchemeDistance caches per window and matches the free function") {
  SchemeDistance eval({12, 6, 2});
  const Hexagon h1 = hexagon_from_gaps(1.0, 1.1);
  const Hexagon h2 = hexagon_from_gaps(0.9, 1.2);
  CHECK(eval(h1).d == min_distance_over_offsets(h1, {12, 6, 2}).d);
  CHECK(eval(h2).d == min_distance_over_offsets(h2, {12, 6, 2}).d);
  CHECK(eval(regular_hexagon()).d == Approx(2.0));
}

TEST_CASE("triple for the regular 7-coloring") {
  const auto t = canonical_triple(regular_hexagon(), {7, 7, 2});
  CHECK(t.determinant() == 7);
  CHECK(t.canonical);
  CHECK(t.d01 == Approx(std::sqrt(7.0) / 2.0));
  CHECK(t.d02 == Approx(t.d01));
  CHECK(t.d12 == Approx(t.d01));
  CHECK(t.t1.i > 0);
  CHECK(t.t1.j <= 0);
  CHECK(-t.t1.i <= t.t1.j);
  CHECK(t.t2.i >= 0);
  CHECK(t.t2.j > 0);
}

TEST_CASE("triple determinant equals k on random shapes") {
  std::mt19937_64 rng(37);
  for (int n = 0; n < 200; ++n) {
    const auto [a, c] = random_gaps(rng);
    const Hexagon h = hexagon_from_gaps(a, c);
    const int k = 3 + n % 40;
    for (const auto& s : schemes(k)) {
      const auto t = canonical_triple(h, s);
      CHECK(t.determinant() == k);
      const double dmin = min_distance_over_offsets(h, s).d;
      CHECK(t.min_distance() >= dmin - 1e-9);
      if (t.canonical) CHECK(t.min_distance() == Approx(dmin).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("shortest vector outside both sectors is found as t2 - t1") {
  // For the regular shape with (47, 6) the shortest offset is (-5, 7).
  const auto t = canonical_triple(regular_hexagon(), {47, 47, 6});
  CHECK(t.determinant() == 47);
  CHECK(t.min_distance() == Approx(min_distance_over_offsets(regular_hexagon(), {47, 47, 6}).d));
}

TEST_CASE("a window too small for any pair raises NoTripleError") {
  CHECK_THROWS_AS(canonical_triple(regular_hexagon(), {47, 47, 6}, 16), NoTripleError);
  CHECK_NOTHROW(canonical_triple(regular_hexagon(), {47, 47, 6}, 40));
}
