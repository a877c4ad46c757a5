#pragma once

#include <compare>
#include <vector>

#include "hexcolor/geometry.hpp"

namespace hexcolor {

/// Index of a tile in the oblique (i, j) system: tile (i, j) is centered at
/// i * e_i + j * e_j.
struct TileIndex {
  int i = 0;
  int j = 0;

  friend constexpr TileIndex operator+(TileIndex a, TileIndex b) { return {a.i + b.i, a.j + b.j}; }
  friend constexpr TileIndex operator-(TileIndex a, TileIndex b) { return {a.i - b.i, a.j - b.j}; }
  friend constexpr TileIndex operator-(TileIndex a) { return {-a.i, -a.j}; }
  friend constexpr auto operator<=>(const TileIndex&, const TileIndex&) = default;
};

struct LatticeBasis {
  Vec2 e_i;
  Vec2 e_j;

  Vec2 center(TileIndex t) const { return static_cast<double>(t.i) * e_i + static_cast<double>(t.j) * e_j; }
  /// Signed area of the fundamental parallelogram.
  double cell_area() const { return cross(e_i, e_j); }
};

/// e_i = u1 - u3, e_j = u1 + u2.  Translating the hexagon by e_i, e_j or
/// e_j - e_i gives an edge-sharing neighbour.
LatticeBasis lattice_basis(const Hexagon& h);

/// Same-colored tiles are the sublattice generated by (g, 0) and (h, k/g),
/// i.e. the index-k sublattice in Hermite normal form.
struct ColorScheme {
  int k = 1;
  int g = 1;
  int h = 0;

  int rows() const { return k / g; }
  friend constexpr auto operator<=>(const ColorScheme&, const ColorScheme&) = default;
};

bool is_valid(const ColorScheme& s);
/// Throws DomainError unless k >= 1, g | k and 0 <= h < g.
void require_valid(const ColorScheme& s);

/// All (g, h) with g | k and 0 <= h < g, lexicographically ordered.
std::vector<ColorScheme> schemes(int k);

/// True when tile t has the same color as tile (0, 0).
bool same_color(const ColorScheme& s, TileIndex t);

/// ceil(2 sqrt(k)) + slack.
int enumeration_window(int k, int slack = 1);

/// Same-colored offsets (a h + b g, a k/g) with a >= 0 and |i| + j < window,
/// excluding (0, 0); for a = 0 only b > 0 is listed.  The generators (g, 0)
/// and (h, k/g) are always present, appended when the window excludes them.
std::vector<TileIndex> same_color_offsets(const ColorScheme& s, int window);
std::vector<TileIndex> same_color_offsets(const ColorScheme& s);

/// How far the offset enumeration reaches.
struct WindowPolicy {
  int slack = 1;
  /// Extra floor on the window, e.g. to test bound sufficiency.
  int min_window = 0;
  /// Widen the window until it provably contains every offset that can beat
  /// the shortest sublattice vector.  Matters for strongly skewed hexagons.
  bool geometric_guard = true;
};

int effective_window(const Hexagon& hex, const ColorScheme& s, const WindowPolicy& policy = {});

struct OffsetDistance {
  double d = 0.0;
  TileIndex argmin;
};

/// Minimum tile distance between (0, 0) and every same-colored tile.
OffsetDistance min_distance_over_offsets(const Hexagon& hex, const ColorScheme& s,
                                         const WindowPolicy& policy = {});

/// Distance between tile (0, 0) and tile t.
double tile_distance(const Hexagon& hex, const LatticeBasis& basis, TileIndex t,
                     double cutoff = std::numeric_limits<double>::infinity());

/// Caches the offset list of one scheme for repeated evaluation on varying
/// hexagons.  Not thread-safe; use one instance per thread.
class SchemeDistance {
 public:
  explicit SchemeDistance(ColorScheme s, WindowPolicy policy = {});

  const ColorScheme& scheme() const { return scheme_; }
  OffsetDistance operator()(const Hexagon& hex);
  /// The enumerated offsets for the window this hexagon needs.
  const std::vector<TileIndex>& offsets_for(const Hexagon& hex);

 private:
  ColorScheme scheme_;
  WindowPolicy policy_;
  int cached_window_ = -1;
  std::vector<TileIndex> offsets_;
};

/// Tiles (0, 0), t1, t2 realizing the smallest same-color distances.
struct TripleRepresentation {
  TileIndex t1;
  TileIndex t2;
  double d01 = 0.0;
  double d02 = 0.0;
  double d12 = 0.0;
  bool canonical = false;

  long long determinant() const {
    return static_cast<long long>(t1.i) * t2.j - static_cast<long long>(t2.i) * t1.j;
  }
  double min_distance() const;
};

/// t1 lies between the +(i - j) and +i directions (i1 > 0, -i1 <= j1 <= 0),
/// t2 between +i and +j (i2 >= 0, j2 > 0), and i1 j2 - i2 j1 = k.  Among
/// pairs whose smallest distance equals the scheme minimum, an equidistant
/// one (d01 = d02 <= d12 within 1e-7) is preferred; ties and the fallback are
/// ordered by largest distance, then distance sum, then indices.
///
/// The policy form widens its search window up to eightfold; if no pair
/// still attains the minimum (possible on strongly skewed shapes), it returns
/// the best sector pair of determinant k with canonical = false.  The
/// explicit form searches only offsets inside `window` and throws
/// NoTripleError when no pair attains the minimum there.
TripleRepresentation canonical_triple(const Hexagon& hex, const ColorScheme& s,
                                      const WindowPolicy& policy = {});
TripleRepresentation canonical_triple(const Hexagon& hex, const ColorScheme& s, int window);

}  // namespace hexcolor
