#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hexcolor/analysis.hpp"
#include "hexcolor/coloring.hpp"
#include "hexcolor/optimizer.hpp"

namespace hexcolor {

inline constexpr std::string_view kSchemaVersion = "1";

/// Serializable view of a SolveResult.  Floating fields hold values already
/// rounded to 15 significant digits, so a document survives a JSON round
/// trip unchanged.
struct ResultDocument {
  struct Triple {
    int i1 = 0;
    int j1 = 0;
    int i2 = 0;
    int j2 = 0;
    double d01 = 0.0;
    double d02 = 0.0;
    double d12 = 0.0;
    bool canonical = false;

    friend bool operator==(const Triple&, const Triple&) = default;
  };

  std::string schema_version{kSchemaVersion};
  int k = 0;
  std::string class_name;
  int g = 1;
  int h = 0;
  std::array<double, 2> gaps{};
  double r = 0.0;
  double s = 0.0;
  double d = 0.0;
  double dsq = 0.0;
  std::optional<Fraction> dsq_rational;
  Triple triple;
  std::string classification;
  SolveOptions opts;

  friend bool operator==(const ResultDocument& a, const ResultDocument& b);
};

double round_significant(double x, int digits = 15);

ResultDocument make_document(const SolveResult& result, const SolveOptions& opts);
std::string serialize(const ResultDocument& doc);
/// Throws std::runtime_error on malformed input or an unknown schema version.
ResultDocument parse_document(std::string_view json);

/// `k=<k> class=<c> d=<d> d2=<d2> g=<g> h=<h> triple=(i1,j1),(i2,j2)`.
std::string summary_line(const SolveResult& result);

struct TableRow {
  SolveResult result;
  bool champion = false;
};

inline constexpr std::string_view kTableHeader =
    "k,class,g,h,gap1,gap2,r,s,d,dsq,dsq_rational,i1,j1,i2,j2,canonical,classification,champion";

std::string table_csv(const std::vector<TableRow>& rows);

/// Writes to a sibling temporary file and renames it over `path`.  Throws
/// std::runtime_error on failure.
void write_file_atomic(const std::string& path, std::string_view content);

/// Drawing units per tile diameter.
inline constexpr double kSvgScale = 100.0;

struct SvgTile {
  TileIndex index;
  std::array<Vec2, 6> outline;
  bool base_color = false;
};

struct SvgScene {
  double min_x = 0.0;
  double min_y = 0.0;
  double width = 0.0;
  double height = 0.0;
  std::vector<SvgTile> tiles;
  /// Drawn e_i and e_j from the origin tile.
  std::optional<std::array<Vec2, 2>> axes;
  /// Centers of the two triple tiles.
  std::optional<std::array<Vec2, 2>> triple;

  int base_color_count() const;
};

/// Tiles with |i|, |j| <= extent, rotated so that e_i points along +x and
/// scaled to kSvgScale units per diameter, y pointing down.  Tiles of the
/// origin's color are marked.  Throws DomainError if extent < 1.
SvgScene render_svg(const Hexagon& hex, const ColorScheme& scheme, int extent,
                    const std::optional<TripleRepresentation>& triple = std::nullopt, bool axes = true);

std::string to_svg(const SvgScene& scene);

}  // namespace hexcolor
