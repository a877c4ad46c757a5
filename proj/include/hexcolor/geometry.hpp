#pragma once

#include <array>
#include <limits>
#include <span>
#include <string_view>

#include "hexcolor/vec2.hpp"

namespace hexcolor {

/// Hexagons closer than this (in radians) to a degenerate gap are rejected.
inline constexpr double kGeomEpsilon = 1e-9;

enum class HexClass { regular, semi_regular, rectilinear };

std::string_view to_string(HexClass c);
/// Accepts the long names and the CLI short forms ("semi", "rect").
HexClass hex_class_from_string(std::string_view name);

/// A centrally symmetric convex hexagon inscribed in the circle of diameter 1.
///
/// The shape is fixed by the two angular gaps between the consecutive
/// vertices u1, u2, u3 on the upper half of the circle; the remaining three
/// vertices are their antipodes.  Vertices are stored counterclockwise as
/// u1, u2, u3, -u1, -u2, -u3.  Construction places u2 at angle pi/2; use
/// rotated() for other orientations.
class Hexagon {
 public:
  double gap1() const { return gap1_; }
  double gap2() const { return gap2_; }
  double gap3() const;
  /// Polar angle of u2.
  double orientation() const { return orientation_; }

  const std::array<Vec2, 6>& vertices() const { return vertices_; }
  std::span<const Vec2> outline() const { return vertices_; }
  Vec2 vertex(int m) const { return vertices_[static_cast<std::size_t>(m)]; }

  HexClass class_tag() const { return class_tag_; }

  /// Length of the edge u3 -> -u1, sin(gap3 / 2).  For a semi-regular
  /// hexagon this is the odd edge, vertical in the construction gauge.
  double r() const;
  /// Length of the edge u1 -> u2, sin(gap1 / 2).
  double s() const;

  Hexagon rotated(double angle) const;

 private:
  friend Hexagon hexagon_from_gaps(double, double);

  Hexagon(double gap1, double gap2, double orientation);

  double gap1_;
  double gap2_;
  double orientation_;
  std::array<Vec2, 6> vertices_;
  HexClass class_tag_;
};

/// Throws DomainError when a gap is within kGeomEpsilon of 0 or when
/// gap1 + gap2 is within kGeomEpsilon of pi.
Hexagon hexagon_from_gaps(double gap1, double gap2);

/// The semi-regular hexagon (gap1 == gap2) whose odd edge has length r.
Hexagon semi_regular_from_r(double r);

Hexagon regular_hexagon();

struct Segment {
  Vec2 a;
  Vec2 b;
};

double point_segment_distance(Vec2 p, const Segment& s);

/// Minimum Euclidean distance between two closed segments; 0 iff they meet.
double segment_distance(const Segment& a, const Segment& b);

/// Minimum distance between convex counterclockwise polygons p and q + offset.
///
/// Evaluated as the minimum over all edge pairs, so cost is |p| * |q|
/// segment tests.  Returns 0 when the polygons touch or overlap.  When the
/// bounding circles are already at least `cutoff` apart, that separation is
/// returned without examining edges (it is a lower bound on the distance).
double convex_distance(std::span<const Vec2> p, std::span<const Vec2> q, Vec2 offset,
                       double cutoff = std::numeric_limits<double>::infinity());

double convex_distance(const Hexagon& p, const Hexagon& q, Vec2 offset,
                       double cutoff = std::numeric_limits<double>::infinity());

/// Shoelace area of a counterclockwise polygon.
double polygon_area(std::span<const Vec2> p);
double polygon_area(const Hexagon& h);

}  // namespace hexcolor
