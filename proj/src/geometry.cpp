#include "hexcolor/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hexcolor/errors.hpp"

namespace hexcolor {

namespace {

constexpr double kShapeTol = 1e-12;

HexClass classify_gaps(double gap1, double gap2) {
  constexpr double third = std::numbers::pi / 3.0;
  if (std::abs(gap1 - gap2) > kShapeTol) return HexClass::rectilinear;
  if (std::abs(gap1 - third) <= kShapeTol) return HexClass::regular;
  return HexClass::semi_regular;
}

Vec2 on_circle(double angle) { return {0.5 * std::cos(angle), 0.5 * std::sin(angle)}; }

}  // namespace

std::string_view to_string(HexClass c) {
  switch (c) {
    case HexClass::regular:
      return "regular";
    case HexClass::semi_regular:
      return "semi_regular";
    case HexClass::rectilinear:
      return "rectilinear";
  }
  return "unknown";
}

HexClass hex_class_from_string(std::string_view name) {
  if (name == "regular") return HexClass::regular;
  if (name == "semi_regular" || name == "semi") return HexClass::semi_regular;
  if (name == "rectilinear" || name == "rect") return HexClass::rectilinear;
  throw DomainError("unknown hexagon class '" + std::string(name) + "'");
}

Hexagon::Hexagon(double gap1, double gap2, double orientation)
    : gap1_(gap1), gap2_(gap2), orientation_(orientation), class_tag_(classify_gaps(gap1, gap2)) {
  const Vec2 u1 = on_circle(orientation - gap1);
  const Vec2 u2 = on_circle(orientation);
  const Vec2 u3 = on_circle(orientation + gap2);
  vertices_ = {u1, u2, u3, -u1, -u2, -u3};
}

double Hexagon::gap3() const { return std::numbers::pi - gap1_ - gap2_; }

double Hexagon::r() const { return std::sin(0.5 * gap3()); }

double Hexagon::s() const { return std::sin(0.5 * gap1_); }

Hexagon Hexagon::rotated(double angle) const { return Hexagon(gap1_, gap2_, orientation_ + angle); }

Hexagon hexagon_from_gaps(double gap1, double gap2) {
  if (!(gap1 > kGeomEpsilon) || !(gap2 > kGeomEpsilon) ||
      !(gap1 + gap2 < std::numbers::pi - kGeomEpsilon)) {
    throw DomainError("degenerate hexagon gaps (" + std::to_string(gap1) + ", " +
                      std::to_string(gap2) + ")");
  }
  return Hexagon(gap1, gap2, 0.5 * std::numbers::pi);
}

Hexagon semi_regular_from_r(double r) {
  if (!(r > 0.0) || !(r < 1.0)) {
    throw DomainError("semi-regular edge length must lie in (0, 1), got " + std::to_string(r));
  }
  // sin(gap3 / 2) = sin(pi / 2 - gap) = cos(gap)
  const double gap = std::acos(r);
  return hexagon_from_gaps(gap, gap);
}

Hexagon regular_hexagon() { return hexagon_from_gaps(std::numbers::pi / 3.0, std::numbers::pi / 3.0); }

double point_segment_distance(Vec2 p, const Segment& s) {
  const Vec2 d = s.b - s.a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return norm(p - s.a);
  const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
  return norm(p - (s.a + t * d));
}

double segment_distance(const Segment& a, const Segment& b) {
  const double o1 = cross(a.b - a.a, b.a - a.a);
  const double o2 = cross(a.b - a.a, b.b - a.a);
  const double o3 = cross(b.b - b.a, a.a - b.a);
  const double o4 = cross(b.b - b.a, a.b - b.a);
  if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0))) {
    return 0.0;
  }
  return std::min({point_segment_distance(a.a, b), point_segment_distance(a.b, b),
                   point_segment_distance(b.a, a), point_segment_distance(b.b, a)});
}

namespace {

struct Circle {
  Vec2 center;
  double radius;
};

Circle bounding_circle(std::span<const Vec2> p) {
  Vec2 c{};
  for (Vec2 v : p) c += v;
  c = (1.0 / static_cast<double>(p.size())) * c;
  double r = 0.0;
  for (Vec2 v : p) r = std::max(r, norm(v - c));
  return {c, r};
}

bool contains(std::span<const Vec2> poly, Vec2 pt) {
  const std::size_t n = poly.size();
  for (std::size_t m = 0; m < n; ++m) {
    if (cross(poly[(m + 1) % n] - poly[m], pt - poly[m]) < 0.0) return false;
  }
  return true;
}

}  // namespace

double convex_distance(std::span<const Vec2> p, std::span<const Vec2> q, Vec2 offset, double cutoff) {
  if (p.empty() || q.empty()) return std::numeric_limits<double>::infinity();
  const Circle cp = bounding_circle(p);
  const Circle cq = bounding_circle(q);
  const double separation = norm(cq.center + offset - cp.center) - cp.radius - cq.radius;
  if (separation >= cutoff) return separation;

  if (contains(p, q[0] + offset) || contains(q, p[0] - offset)) return 0.0;

  double best = std::numeric_limits<double>::infinity();
  const std::size_t np = p.size();
  const std::size_t nq = q.size();
  for (std::size_t a = 0; a < np; ++a) {
    const Segment ea{p[a], p[(a + 1) % np]};
    for (std::size_t b = 0; b < nq; ++b) {
      const Segment eb{q[b] + offset, q[(b + 1) % nq] + offset};
      best = std::min(best, segment_distance(ea, eb));
      if (best == 0.0) return 0.0;
    }
  }
  return best;
}

double convex_distance(const Hexagon& p, const Hexagon& q, Vec2 offset, double cutoff) {
  return convex_distance(p.outline(), q.outline(), offset, cutoff);
}

double polygon_area(std::span<const Vec2> p) {
  double twice = 0.0;
  const std::size_t n = p.size();
  for (std::size_t m = 0; m < n; ++m) twice += cross(p[m], p[(m + 1) % n]);
  return 0.5 * twice;
}

double polygon_area(const Hexagon& h) { return polygon_area(h.outline()); }

}  // namespace hexcolor
