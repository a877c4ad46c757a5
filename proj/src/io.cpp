#include "hexcolor/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "json.hpp"

#include "hexcolor/errors.hpp"

namespace hexcolor {

using nlohmann::json;

bool operator==(const ResultDocument& a, const ResultDocument& b) {
  const auto& oa = a.opts;
  const auto& ob = b.opts;
  return a.schema_version == b.schema_version && a.k == b.k && a.class_name == b.class_name && a.g == b.g &&
         a.h == b.h && a.gaps == b.gaps && a.r == b.r && a.s == b.s && a.d == b.d && a.dsq == b.dsq &&
         a.dsq_rational == b.dsq_rational && a.triple == b.triple && a.classification == b.classification &&
         oa.starts_per_axis == ob.starts_per_axis && oa.coarse_grid == ob.coarse_grid &&
         oa.value_tol == ob.value_tol && oa.param_tol == ob.param_tol && oa.max_iters == ob.max_iters &&
         oa.enumeration_slack == ob.enumeration_slack;
}

double round_significant(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  return std::stod(fmt::format("{:.{}g}", x, digits));
}

ResultDocument make_document(const SolveResult& result, const SolveOptions& opts) {
  ResultDocument doc;
  doc.k = result.k;
  doc.class_name = std::string(to_string(result.class_tag));
  doc.g = result.scheme.g;
  doc.h = result.scheme.h;
  doc.gaps = {round_significant(result.gap1), round_significant(result.gap2)};
  doc.r = round_significant(result.r);
  doc.s = round_significant(result.s);
  doc.d = round_significant(result.d);
  doc.dsq = round_significant(result.dsq);
  doc.dsq_rational = result.dsq_rational;
  const auto& t = result.triple;
  doc.triple = {t.t1.i,
                t.t1.j,
                t.t2.i,
                t.t2.j,
                round_significant(t.d01),
                round_significant(t.d02),
                round_significant(t.d12),
                t.canonical};
  doc.classification = std::string(to_string(classify(result)));
  doc.opts = opts;
  return doc;
}

std::string serialize(const ResultDocument& doc) {
  json j;
  j["schema_version"] = doc.schema_version;
  j["k"] = doc.k;
  j["class"] = doc.class_name;
  j["g"] = doc.g;
  j["h"] = doc.h;
  j["gaps"] = {doc.gaps[0], doc.gaps[1]};
  j["r"] = doc.r;
  j["s"] = doc.s;
  j["d"] = doc.d;
  j["dsq"] = doc.dsq;
  if (doc.dsq_rational) {
    j["dsq_rational"] = {{"num", doc.dsq_rational->num}, {"den", doc.dsq_rational->den}};
  } else {
    j["dsq_rational"] = nullptr;
  }
  const auto& t = doc.triple;
  j["triple"] = {{"i1", t.i1},   {"j1", t.j1},   {"i2", t.i2},   {"j2", t.j2},
                 {"d01", t.d01}, {"d02", t.d02}, {"d12", t.d12}, {"canonical", t.canonical}};
  j["classification"] = doc.classification;
  const auto& o = doc.opts;
  j["opts"] = {{"starts_per_axis", o.starts_per_axis}, {"coarse_grid", o.coarse_grid},
               {"value_tol", o.value_tol},             {"param_tol", o.param_tol},
               {"max_iters", o.max_iters},             {"enumeration_slack", o.enumeration_slack}};
  return j.dump(2) + "\n";
}

ResultDocument parse_document(std::string_view text) {
  try {
    const json j = json::parse(text);
    ResultDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    if (doc.schema_version != kSchemaVersion) {
      throw std::runtime_error("unsupported schema_version " + doc.schema_version);
    }
    doc.k = j.at("k").get<int>();
    doc.class_name = j.at("class").get<std::string>();
    doc.g = j.at("g").get<int>();
    doc.h = j.at("h").get<int>();
    doc.gaps = {j.at("gaps").at(0).get<double>(), j.at("gaps").at(1).get<double>()};
    doc.r = j.at("r").get<double>();
    doc.s = j.at("s").get<double>();
    doc.d = j.at("d").get<double>();
    doc.dsq = j.at("dsq").get<double>();
    if (const auto& q = j.at("dsq_rational"); !q.is_null()) {
      doc.dsq_rational = Fraction(q.at("num").get<std::int64_t>(), q.at("den").get<std::int64_t>());
    }
    const auto& t = j.at("triple");
    doc.triple = {t.at("i1").get<int>(),     t.at("j1").get<int>(),     t.at("i2").get<int>(),
                  t.at("j2").get<int>(),     t.at("d01").get<double>(), t.at("d02").get<double>(),
                  t.at("d12").get<double>(), t.at("canonical").get<bool>()};
    doc.classification = j.at("classification").get<std::string>();
    const auto& o = j.at("opts");
    doc.opts.starts_per_axis = o.at("starts_per_axis").get<int>();
    doc.opts.coarse_grid = o.at("coarse_grid").get<int>();
    doc.opts.value_tol = o.at("value_tol").get<double>();
    doc.opts.param_tol = o.at("param_tol").get<double>();
    doc.opts.max_iters = o.at("max_iters").get<int>();
    doc.opts.enumeration_slack = o.at("enumeration_slack").get<int>();
    return doc;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed result document: ") + e.what());
  }
}

std::string summary_line(const SolveResult& r) {
  return fmt::format("k={} class={} d={:.6f} d2={:.6f} g={} h={} triple=({},{}),({},{})", r.k, to_string(r.class_tag),
                     r.d, r.dsq, r.scheme.g, r.scheme.h, r.triple.t1.i, r.triple.t1.j, r.triple.t2.i, r.triple.t2.j);
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::string out(kTableHeader);
  out += '\n';
  for (const auto& row : rows) {
    const auto& r = row.result;
    const auto& t = r.triple;
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.k, to_string(r.class_tag),
                       r.scheme.g, r.scheme.h, round_significant(r.gap1), round_significant(r.gap2),
                       round_significant(r.r), round_significant(r.s), round_significant(r.d),
                       round_significant(r.dsq), r.dsq_rational ? r.dsq_rational->str() : "", t.t1.i, t.t1.j,
                       t.t2.i, t.t2.j, t.canonical ? 1 : 0, to_string(classify(r)), row.champion ? 1 : 0);
  }
  return out;
}

void write_file_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw std::runtime_error("cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw std::runtime_error("cannot rename into " + path + ": " + ec.message());
  }
}

int SvgScene::base_color_count() const {
  return static_cast<int>(std::count_if(tiles.begin(), tiles.end(), [](const SvgTile& t) { return t.base_color; }));
}

SvgScene render_svg(const Hexagon& hex, const ColorScheme& scheme, int extent,
                    const std::optional<TripleRepresentation>& triple, bool axes) {
  if (extent < 1) throw DomainError("extent must be at least 1");
  require_valid(scheme);
  const LatticeBasis basis = lattice_basis(hex);
  const double angle = -std::atan2(basis.e_i.y, basis.e_i.x);
  auto place = [&](Vec2 p) {
    const Vec2 q = rotate(p, angle);
    return Vec2{kSvgScale * q.x, -kSvgScale * q.y};
  };

  SvgScene scene;
  double lo_x = std::numeric_limits<double>::infinity();
  double lo_y = lo_x;
  double hi_x = -lo_x;
  double hi_y = -lo_x;
  for (int j = extent; j >= -extent; --j) {
    for (int i = -extent; i <= extent; ++i) {
      SvgTile tile;
      tile.index = {i, j};
      tile.base_color = same_color(scheme, tile.index);
      const Vec2 c = basis.center(tile.index);
      for (int m = 0; m < 6; ++m) {
        const Vec2 p = place(c + hex.vertex(m));
        tile.outline[static_cast<std::size_t>(m)] = p;
        lo_x = std::min(lo_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_x = std::max(hi_x, p.x);
        hi_y = std::max(hi_y, p.y);
      }
      scene.tiles.push_back(tile);
    }
  }
  const double margin = 0.1 * kSvgScale;
  scene.min_x = lo_x - margin;
  scene.min_y = lo_y - margin;
  scene.width = hi_x - lo_x + 2.0 * margin;
  scene.height = hi_y - lo_y + 2.0 * margin;
  if (axes) scene.axes = std::array<Vec2, 2>{place(basis.e_i), place(basis.e_j)};
  if (triple) scene.triple = std::array<Vec2, 2>{place(basis.center(triple->t1)), place(basis.center(triple->t2))};
  return scene;
}

namespace {

std::string num(double x) { return fmt::format("{:.3f}", x); }

}  // namespace

std::string to_svg(const SvgScene& scene) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\" width=\"{}\" "
      "height=\"{}\">\n",
      num(scene.min_x), num(scene.min_y), num(scene.width), num(scene.height), num(scene.width), num(scene.height));
  out += "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
         "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#c0392b\"/></marker></defs>\n";
  out += "<g stroke=\"#000000\" stroke-width=\"1\">\n";
  for (const auto& tile : scene.tiles) {
    std::string pts;
    for (const auto& p : tile.outline) {
      if (!pts.empty()) pts += ' ';
      pts += num(p.x) + "," + num(p.y);
    }
    out += fmt::format("<polygon data-i=\"{}\" data-j=\"{}\" fill=\"{}\" points=\"{}\"/>\n", tile.index.i,
                       tile.index.j, tile.base_color ? "#b3b3b3" : "#ffffff", pts);
  }
  out += "</g>\n";
  if (scene.axes) {
    for (const auto& tip : *scene.axes) {
      out += fmt::format(
          "<line x1=\"0\" y1=\"0\" x2=\"{}\" y2=\"{}\" stroke=\"#c0392b\" stroke-width=\"2\" "
          "marker-end=\"url(#arrow)\"/>\n",
          num(tip.x), num(tip.y));
    }
  }
  if (scene.triple) {
    out += "<circle cx=\"0\" cy=\"0\" r=\"6\" fill=\"#2c3e50\"/>\n";
    for (const auto& c : *scene.triple) {
      out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"6\" fill=\"#2c3e50\"/>\n", num(c.x), num(c.y));
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace hexcolor
