#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hexcolor/coloring.hpp"
#include "hexcolor/errors.hpp"
#include "hexcolor/geometry.hpp"
#include "oracles.hpp"

using namespace hexcolor;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

// Uniform shape from the open gap triangle, away from the degenerate edges.
std::pair<double, double> random_gaps(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.02, kPi - 0.02);
  for (;;) {
    const double a = u(rng);
    const double b = u(rng);
    if (a + b < kPi - 0.02) return {a, b};
  }
}

}  // namespace

TEST_CASE("vertices lie on the circle of diameter one, counterclockwise") {
  const Hexagon h = hexagon_from_gaps(0.7, 1.1);
  for (const Vec2& v : h.vertices()) CHECK(norm(v) == Approx(0.5).epsilon(1e-14));
  for (int m = 0; m < 6; ++m) CHECK(cross(h.vertex(m), h.vertex((m + 1) % 6)) > 0.0);
  CHECK(h.vertex(1).x == Approx(0.0).epsilon(1e-15));
  CHECK(h.vertex(1).y == Approx(0.5));
  CHECK(h.gap3() == Approx(kPi - 1.8));
}

TEST_CASE("edge lengths follow the gaps") {
  const Hexagon h = hexagon_from_gaps(0.4, 1.3);
  CHECK(norm(h.vertex(1) - h.vertex(0)) == Approx(std::sin(0.2)));
  CHECK(norm(h.vertex(2) - h.vertex(1)) == Approx(std::sin(0.65)));
  CHECK(norm(h.vertex(3) - h.vertex(2)) == Approx(h.r()));
  CHECK(h.r() == Approx(std::sin((kPi - 1.7) / 2.0)));
  CHECK(h.s() == Approx(std::sin(0.2)));
}

TEST_CASE("class tags") {
  CHECK(regular_hexagon().class_tag() == HexClass::regular);
  CHECK(hexagon_from_gaps(1.0, 1.0).class_tag() == HexClass::semi_regular);
  CHECK(hexagon_from_gaps(1.0, 0.9).class_tag() == HexClass::rectilinear);
  CHECK(hex_class_from_string("semi") == HexClass::semi_regular);
  CHECK(hex_class_from_string("rect") == HexClass::rectilinear);
  CHECK(hex_class_from_string("regular") == HexClass::regular);
  CHECK_THROWS_AS(hex_class_from_string("square"), DomainError);
}

TEST_CASE("semi-regular shape from its odd edge") {
  const Hexagon h = semi_regular_from_r(0.2);
  CHECK(h.r() == Approx(0.2));
  CHECK(h.gap1() == Approx(h.gap2()));
  CHECK(std::cos(h.gap1()) == Approx(0.2));
  CHECK(semi_regular_from_r(0.5).class_tag() == HexClass::regular);
}

TEST_CASE("degenerate gaps are rejected") {
  CHECK_THROWS_AS(hexagon_from_gaps(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(hexagon_from_gaps(1.0, -0.1), DomainError);
  CHECK_THROWS_AS(hexagon_from_gaps(1.5, kPi - 1.5), DomainError);
  CHECK_THROWS_AS(hexagon_from_gaps(2.0, 2.0), DomainError);
  CHECK_NOTHROW(hexagon_from_gaps(1e-6, 1.0));
}

TEST_CASE("regular hexagon area") {
  CHECK(polygon_area(regular_hexagon()) == Approx(3.0 * std::sqrt(3.0) / 8.0).epsilon(1e-14));
}

TEST_CASE("area equals the inscribed-triangle sum on random shapes") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 1000; ++n) {
    const auto [a, b] = random_gaps(rng);
    const double expected = (std::sin(a) + std::sin(b) + std::sin(a + b)) / 4.0;
    CHECK(polygon_area(hexagon_from_gaps(a, b)) == Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("segment distances") {
  const Segment s{{0.0, 0.0}, {1.0, 0.0}};
  CHECK(point_segment_distance({0.5, 2.0}, s) == Approx(2.0));
  CHECK(point_segment_distance({-3.0, 4.0}, s) == Approx(5.0));
  CHECK(point_segment_distance({1.0, 0.0}, s) == 0.0);
  CHECK(segment_distance(s, {{0.5, -1.0}, {0.5, 1.0}}) == 0.0);
  CHECK(segment_distance(s, {{2.0, 1.0}, {3.0, 1.0}}) == Approx(std::sqrt(2.0)));
  CHECK(segment_distance(s, {{0.0, 1.0}, {1.0, 1.0}}) == Approx(1.0));
  CHECK(segment_distance(s, {{1.0, 0.0}, {2.0, 5.0}}) == 0.0);
  // Degenerate segment.
  CHECK(segment_distance({{0.2, 0.3}, {0.2, 0.3}}, s) == Approx(0.3));
}

TEST_CASE("convex distance of unit squares") {
  const std::array<Vec2, 4> sq{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
  CHECK(convex_distance(sq, sq, {3.0, 0.0}) == Approx(2.0));
  CHECK(convex_distance(sq, sq, {2.0, 2.0}) == Approx(std::sqrt(2.0)));
  CHECK(convex_distance(sq, sq, {1.0, 0.5}) == 0.0);
  CHECK(convex_distance(sq, sq, {0.25, 0.25}) == 0.0);
  CHECK(convex_distance(sq, sq, {0.0, 0.0}) == 0.0);
}

TEST_CASE("cutoff returns a lower bound without edge tests") {
  const Hexagon h = regular_hexagon();
  const double exact = convex_distance(h, h, {10.0, 0.0});
  const double cut = convex_distance(h, h, {10.0, 0.0}, 1.0);
  CHECK(cut <= exact);
  CHECK(cut == Approx(9.0));
  CHECK(convex_distance(h, h, {10.0, 0.0}, 20.0) == Approx(exact));
}

TEST_CASE("edge-sharing neighbours touch, second neighbours do not") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 200; ++n) {
    const auto [a, b] = random_gaps(rng);
    const Hexagon h = hexagon_from_gaps(a, b);
    const LatticeBasis basis = lattice_basis(h);
    CHECK(convex_distance(h, h, basis.e_i) == Approx(0.0).epsilon(1e-12));
    CHECK(convex_distance(h, h, basis.e_j) == Approx(0.0).epsilon(1e-12));
    CHECK(convex_distance(h, h, basis.e_j - basis.e_i) == Approx(0.0).epsilon(1e-12));
    CHECK(convex_distance(h, h, 2.0 * basis.e_i) > 0.0);
  }
}

TEST_CASE("edge-pair distance agrees with the Minkowski oracle") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> off(-3.0, 3.0);
  for (int n = 0; n < 1000; ++n) {
    const auto [a, b] = random_gaps(rng);
    const Hexagon h = hexagon_from_gaps(a, b);
    const Vec2 t{off(rng), off(rng)};
    const double expected = oracle::minkowski_distance(a, b, {t.x, t.y});
    CHECK(convex_distance(h, h, t) == Approx(expected).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("boundary sampling brackets the distance from above") {
  const double a = 0.8;
  const double b = 1.2;
  const Hexagon h = hexagon_from_gaps(a, b);
  for (const oracle::P t : {oracle::P{1.3, 0.4}, oracle::P{-0.2, 1.7}, oracle::P{2.0, -2.0}}) {
    const double exact = convex_distance(h, h, {t.x, t.y});
    const double sampled = oracle::sampled_distance(a, b, t, 200);
    CHECK(sampled >= exact - 1e-12);
    CHECK(sampled - exact < 5e-3);
  }
}

TEST_CASE("distance is invariant under rotating the hexagon and the offset together") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> off(-2.5, 2.5);
  for (int n = 0; n < 500; ++n) {
    const auto [a, b] = random_gaps(rng);
    const Hexagon h = hexagon_from_gaps(a, b);
    const double phi = ang(rng);
    const Hexagon hr = h.rotated(phi);
    CHECK(hr.orientation() == Approx(h.orientation() + phi));
    const Vec2 t{off(rng), off(rng)};
    CHECK(convex_distance(hr, hr, rotate(t, phi)) == Approx(convex_distance(h, h, t)).epsilon(1e-10).scale(1.0));
  }
}
