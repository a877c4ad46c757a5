#include "hexcolor/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <tuple>

#include "hexcolor/errors.hpp"

namespace hexcolor {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int ceil_div(int a, int b) { return -floor_div(-a, b); }

// Lagrange reduction of the sublattice basis in the Euclidean metric of the
// tile centers; returns the shortest vector.
TileIndex shortest_sublattice_vector(const LatticeBasis& basis, const ColorScheme& s) {
  TileIndex b1{s.g, 0};
  TileIndex b2{s.h, s.rows()};
  auto len2 = [&](TileIndex t) {
    const Vec2 c = basis.center(t);
    return dot(c, c);
  };
  for (int iter = 0; iter < 128; ++iter) {
    if (len2(b1) > len2(b2)) std::swap(b1, b2);
    const Vec2 c1 = basis.center(b1);
    const double mu = std::round(dot(c1, basis.center(b2)) / dot(c1, c1));
    if (mu == 0.0) break;
    const int m = static_cast<int>(mu);
    b2 = b2 - TileIndex{m * b1.i, m * b1.j};
  }
  return len2(b1) <= len2(b2) ? b1 : b2;
}

}  // namespace

LatticeBasis lattice_basis(const Hexagon& h) {
  const Vec2 u1 = h.vertex(0);
  const Vec2 u2 = h.vertex(1);
  const Vec2 u3 = h.vertex(2);
  return {u1 - u3, u1 + u2};
}

bool is_valid(const ColorScheme& s) { return s.k >= 1 && s.g >= 1 && s.k % s.g == 0 && s.h >= 0 && s.h < s.g; }

void require_valid(const ColorScheme& s) {
  if (!is_valid(s)) {
    throw DomainError("invalid color scheme (k=" + std::to_string(s.k) + ", g=" + std::to_string(s.g) +
                      ", h=" + std::to_string(s.h) + ")");
  }
}

std::vector<ColorScheme> schemes(int k) {
  if (k < 1) throw DomainError("number of colors must be positive, got " + std::to_string(k));
  std::vector<ColorScheme> out;
  for (int g = 1; g <= k; ++g) {
    if (k % g != 0) continue;
    for (int h = 0; h < g; ++h) out.push_back({k, g, h});
  }
  return out;
}

bool same_color(const ColorScheme& s, TileIndex t) {
  const int q = s.rows();
  if (t.j % q != 0) return false;
  const long long a = t.j / q;
  const long long rem = (static_cast<long long>(t.i) - a * s.h) % s.g;
  return rem == 0;
}

int enumeration_window(int k, int slack) {
  return static_cast<int>(std::ceil(2.0 * std::sqrt(static_cast<double>(k)))) + slack;
}

std::vector<TileIndex> same_color_offsets(const ColorScheme& s, int window) {
  require_valid(s);
  const int q = s.rows();
  std::vector<TileIndex> out;
  for (int b = 1; b * s.g < window; ++b) out.push_back({b * s.g, 0});
  for (int a = 1; a * q < window; ++a) {
    const int j = a * q;
    const int reach = window - j - 1;  // |i| <= reach
    const int base = a * s.h;
    for (int b = ceil_div(-reach - base, s.g); b <= floor_div(reach - base, s.g); ++b) {
      out.push_back({base + b * s.g, j});
    }
  }
  for (TileIndex gen : {TileIndex{s.g, 0}, TileIndex{s.h, q}}) {
    if (std::find(out.begin(), out.end(), gen) == out.end()) out.push_back(gen);
  }
  return out;
}

std::vector<TileIndex> same_color_offsets(const ColorScheme& s) {
  return same_color_offsets(s, enumeration_window(s.k));
}

double tile_distance(const Hexagon& hex, const LatticeBasis& basis, TileIndex t, double cutoff) {
  return convex_distance(hex, hex, basis.center(t), cutoff);
}

int effective_window(const Hexagon& hex, const ColorScheme& s, const WindowPolicy& policy) {
  require_valid(s);
  int window = std::max(enumeration_window(s.k, policy.slack), policy.min_window);
  if (policy.geometric_guard) {
    // Any offset closer than the shortest vector's distance d0 has its
    // center within d0 + 1, which bounds |i| + |j| by Cramer's rule.
    const LatticeBasis basis = lattice_basis(hex);
    const TileIndex shortest = shortest_sublattice_vector(basis, s);
    const double d0 = tile_distance(hex, basis, shortest);
    const double reach = (d0 + 1.0) * (norm(basis.e_i) + norm(basis.e_j)) / basis.cell_area();
    if (reach < 1e6) window = std::max(window, static_cast<int>(std::ceil(reach)) + 1);
  }
  return window;
}

OffsetDistance min_distance_over_offsets(const Hexagon& hex, const ColorScheme& s, const WindowPolicy& policy) {
  SchemeDistance eval(s, policy);
  return eval(hex);
}

SchemeDistance::SchemeDistance(ColorScheme s, WindowPolicy policy) : scheme_(s), policy_(policy) {
  require_valid(scheme_);
}

const std::vector<TileIndex>& SchemeDistance::offsets_for(const Hexagon& hex) {
  const int window = effective_window(hex, scheme_, policy_);
  if (window != cached_window_) {
    offsets_ = same_color_offsets(scheme_, window);
    cached_window_ = window;
  }
  return offsets_;
}

OffsetDistance SchemeDistance::operator()(const Hexagon& hex) {
  const auto& offsets = offsets_for(hex);
  const LatticeBasis basis = lattice_basis(hex);

  // Visit offsets nearest-center first so the center-distance bound prunes
  // as much as possible.
  struct Candidate {
    double center_dist;
    TileIndex t;
  };
  std::vector<Candidate> order;
  order.reserve(offsets.size());
  for (TileIndex t : offsets) order.push_back({norm(basis.center(t)), t});
  std::sort(order.begin(), order.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.center_dist, a.t) < std::tie(b.center_dist, b.t);
  });

  OffsetDistance best{kInf, {}};
  for (const Candidate& c : order) {
    if (c.center_dist - 1.0 > best.d) break;
    const double d = tile_distance(hex, basis, c.t, best.d);
    if (d < best.d) best = {d, c.t};
  }
  return best;
}

double TripleRepresentation::min_distance() const { return std::min({d01, d02, d12}); }

namespace {

constexpr double kEquidistantTol = 1e-7;
constexpr double kMinMatchTol = 1e-9;

bool in_sector1(TileIndex t) { return t.i > 0 && -t.i <= t.j && t.j <= 0; }
bool in_sector2(TileIndex t) { return t.i >= 0 && t.j > 0; }

// Strict weak ordering on (max distance, distance sum, indices) with a small
// tolerance on the real-valued keys.
bool better_triple(const TripleRepresentation& a, const TripleRepresentation& b) {
  const double amax = std::max({a.d01, a.d02, a.d12});
  const double bmax = std::max({b.d01, b.d02, b.d12});
  if (std::abs(amax - bmax) > kMinMatchTol) return amax < bmax;
  const double asum = a.d01 + a.d02 + a.d12;
  const double bsum = b.d01 + b.d02 + b.d12;
  if (std::abs(asum - bsum) > kMinMatchTol) return asum < bsum;
  return std::tie(a.t1, a.t2) < std::tie(b.t1, b.t2);
}

// With require_min, only pairs whose smallest distance equals dmin qualify.
TripleRepresentation pick_triple(const Hexagon& hex, const ColorScheme& s, int window, double dmin,
                                 bool require_min = true) {
  const LatticeBasis basis = lattice_basis(hex);
  std::vector<TileIndex> first;
  std::vector<TileIndex> second;
  for (TileIndex t : same_color_offsets(s, window)) {
    for (TileIndex u : {t, -t}) {
      if (in_sector1(u)) first.push_back(u);
      if (in_sector2(u)) second.push_back(u);
    }
  }

  bool have_canonical = false;
  bool have_any = false;
  TripleRepresentation best;
  for (TileIndex t1 : first) {
    const double d01 = tile_distance(hex, basis, t1);
    for (TileIndex t2 : second) {
      const long long det = static_cast<long long>(t1.i) * t2.j - static_cast<long long>(t2.i) * t1.j;
      if (det != s.k) continue;
      TripleRepresentation cand;
      cand.t1 = t1;
      cand.t2 = t2;
      cand.d01 = d01;
      cand.d02 = tile_distance(hex, basis, t2);
      cand.d12 = tile_distance(hex, basis, t2 - t1);
      if (require_min && std::abs(cand.min_distance() - dmin) > kMinMatchTol) continue;
      cand.canonical = require_min && std::abs(cand.d01 - cand.d02) <= kEquidistantTol &&
                       std::max(cand.d01, cand.d02) <= cand.d12 + kEquidistantTol;
      if (have_canonical && !cand.canonical) continue;
      if (!have_any || (cand.canonical && !have_canonical) || better_triple(cand, best)) {
        best = cand;
        have_any = true;
        have_canonical = have_canonical || cand.canonical;
      }
    }
  }
  if (!have_any) {
    throw NoTripleError("no admissible tile pair for k=" + std::to_string(s.k) + " (g=" + std::to_string(s.g) +
                        ", h=" + std::to_string(s.h) + ") within window " + std::to_string(window));
  }
  return best;
}

}  // namespace

TripleRepresentation canonical_triple(const Hexagon& hex, const ColorScheme& s, const WindowPolicy& policy) {
  const double dmin = min_distance_over_offsets(hex, s, policy).d;
  const int window = effective_window(hex, s, policy);
  // The shortest vector may only be reachable as t2 - t1, with t1 and t2
  // longer than anything the distance window needs.
  for (int w = window; w <= 8 * window; w *= 2) {
    try {
      return pick_triple(hex, s, w, dmin);
    } catch (const NoTripleError&) {
    }
  }
  // On strongly skewed shapes the shortest offset can lie outside every
  // sector pair of determinant k; report the best pair that does exist.
  return pick_triple(hex, s, window, dmin, false);
}

TripleRepresentation canonical_triple(const Hexagon& hex, const ColorScheme& s, int window) {
  const LatticeBasis basis = lattice_basis(hex);
  double dmin = kInf;
  for (TileIndex t : same_color_offsets(s, window)) dmin = std::min(dmin, tile_distance(hex, basis, t));
  return pick_triple(hex, s, window, dmin);
}

}  // namespace hexcolor
