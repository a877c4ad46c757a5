#include "hexcolor/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <ostream>

#include <fmt/format.h>

#include "CLI11.hpp"

#include "hexcolor/analysis.hpp"
#include "hexcolor/errors.hpp"
#include "hexcolor/evaluator.hpp"
#include "hexcolor/io.hpp"
#include "hexcolor/optimizer.hpp"

namespace hexcolor {

namespace {

const std::vector<std::string> kClassNames{"regular", "semi", "rect", "semi_regular", "rectilinear"};

struct SolveArgs {
  int k = 0;
  std::string cls = "all";
  int grid = SolveOptions{}.coarse_grid;
  int starts = SolveOptions{}.starts_per_axis;
  int extent = 4;
  std::string json;
  std::string svg;
};

struct TableArgs {
  int kmin = 0;
  int kmax = 0;
  std::vector<std::string> classes{"regular", "semi", "rect"};
  int grid = SolveOptions{}.coarse_grid;
  int starts = SolveOptions{}.starts_per_axis;
  std::string csv;
};

struct VerifyArgs {
  std::string reference;
  int kmin = 3;
  int kmax = 30;
};

SolveOptions options_from(int grid, int starts) {
  SolveOptions opts;
  opts.coarse_grid = grid;
  opts.starts_per_axis = starts;
  return opts;
}

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const SolveOptions opts = options_from(a.grid, a.starts);
  opts.validate();
  const SolveResult result = a.cls == "all" ? solve_all(a.k, opts).champion
                                            : solve(a.k, hex_class_from_string(a.cls), opts);
  out << summary_line(result) << '\n';
  if (!a.json.empty()) write_file_atomic(a.json, serialize(make_document(result, opts)));
  if (!a.svg.empty()) {
    write_file_atomic(a.svg, to_svg(render_svg(result.hexagon(), result.scheme, a.extent, result.triple)));
  }
  return kExitOk;
}

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
  if (a.kmin > a.kmax) {
    err << "error: --kmin must not exceed --kmax\n";
    return kExitUsage;
  }
  const SolveOptions opts = options_from(a.grid, a.starts);
  opts.validate();
  std::vector<HexClass> wanted;
  for (const auto& name : a.classes) {
    const HexClass c = hex_class_from_string(name);
    if (std::find(wanted.begin(), wanted.end(), c) == wanted.end()) wanted.push_back(c);
  }
  std::sort(wanted.begin(), wanted.end());

  std::vector<TableRow> rows;
  for (int k = a.kmin; k <= a.kmax; ++k) {
    const std::size_t first = rows.size();
    std::size_t best = first;
    for (HexClass c : wanted) {
      rows.push_back({solve(k, c, opts), false});
      if (rows.back().result.d > rows[best].result.d + 1e-9) best = rows.size() - 1;
    }
    rows[best].champion = true;
  }
  const std::string csv = table_csv(rows);
  if (a.csv.empty()) {
    out << csv;
  } else {
    write_file_atomic(a.csv, csv);
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.kmin > a.kmax || a.kmin < 3) {
    err << "error: need 3 <= --kmin <= --kmax\n";
    return kExitUsage;
  }
  std::vector<ReferenceRow> table;
  if (a.reference.empty()) {
    table = embedded_reference();
  } else {
    if (!std::filesystem::is_regular_file(a.reference)) {
      err << "error: reference file not found: " << a.reference << '\n';
      return kExitUsage;
    }
    try {
      table = load_reference(a.reference);
    } catch (const ReferenceFormatError& e) {
      err << "verification failed: " << e.what() << '\n';
      return kExitVerify;
    }
  }

  std::vector<SolveResult> champions;
  for (int k = a.kmin; k <= a.kmax; ++k) champions.push_back(solve_all(k).champion);
  ComparisonReport report;
  try {
    report = compare_reference(champions, table);
  } catch (const MissingRowError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerify;
  }

  for (const auto& e : report.entries) {
    if (e.status == ComparisonStatus::match) continue;
    const char* note = e.status == ComparisonStatus::above_reference ? "  <-- ABOVE REFERENCE" : "";
    err << fmt::format("k={} {} d={:.6f} reference={:.6f} delta={:+.3e}{}\n", e.k, to_string(e.status), e.d,
                       e.reference, e.delta, note);
  }
  for (const auto& v : monotonicity_report(reference_distances(table))) {
    out << fmt::format("monotonicity: d({}) < d({}) ({:.6f} < {:.6f})\n", v.k, v.k - v.n, v.d_k, v.d_prev);
  }
  const int matched = report.count(ComparisonStatus::match);
  out << fmt::format("verify k={}..{} match={} below={} above={} worst_delta={:.3e}\n", a.kmin, a.kmax, matched,
                     report.count(ComparisonStatus::below_reference), report.count(ComparisonStatus::above_reference),
                     report.worst_abs_delta);
  return report.all_match() ? kExitOk : kExitVerify;
}

int cmd_closedform(int k, std::ostream& out) {
  if (k < 1) throw DomainError("k must be positive");
  bool any = false;
  if (const auto reg = regular_dsq(k)) {
    out << fmt::format("loeschian d2={} d={:.6f}\n", reg->str(), std::sqrt(reg->value()));
    any = true;
  }
  if (pronic_index(k).value_or(0) >= 2) {
    const auto root = cubic_f(k);
    out << fmt::format("cubic_f d2={:.6f} d={:.6f}\n", root.dsq, std::sqrt(root.dsq));
    any = true;
  }
  if (has_quartic(k)) {
    const double dsq = quartic_dsq(k);
    out << fmt::format("quartic d2={:.6f} d={:.6f}\n", dsq, std::sqrt(dsq));
    any = true;
  }
  if (!any) out << "none\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal hexagon shapes and colorings for k-colored hexagonal tilings", "hexcolor"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Optimize d(k) for one k");
  solve_cmd->add_option("--k", solve_args.k, "Number of colors")->required();
  solve_cmd->add_option("--class", solve_args.cls, "regular|semi|rect|all")
      ->check(CLI::IsMember([] {
        auto names = kClassNames;
        names.push_back("all");
        return names;
      }()));
  solve_cmd->add_option("--grid", solve_args.grid, "Coarse samples per axis")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--starts", solve_args.starts, "Refined starts per axis")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--json", solve_args.json, "Write the result document here");
  solve_cmd->add_option("--svg", solve_args.svg, "Write a drawing of the tiling here");
  solve_cmd->add_option("--extent", solve_args.extent, "Tiles drawn for |i|,|j| <= extent")->check(CLI::PositiveNumber);

  TableArgs table_args;
  auto* table_cmd = app.add_subcommand("table", "Solve a range of k and emit CSV");
  table_cmd->add_option("--kmin", table_args.kmin)->required();
  table_cmd->add_option("--kmax", table_args.kmax)->required();
  table_cmd->add_option("--classes", table_args.classes, "Subset of regular, semi, rect")
      ->check(CLI::IsMember(kClassNames))
      ->delimiter(',');
  table_cmd->add_option("--grid", table_args.grid)->check(CLI::PositiveNumber);
  table_cmd->add_option("--starts", table_args.starts)->check(CLI::PositiveNumber);
  table_cmd->add_option("--csv", table_args.csv, "Write CSV here instead of stdout");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Compare champions with the reference table");
  verify_cmd->add_option("--reference", verify_args.reference, "Reference CSV (default: bundled table)");
  verify_cmd->add_option("--kmin", verify_args.kmin);
  verify_cmd->add_option("--kmax", verify_args.kmax);

  int closed_k = 0;
  auto* closed_cmd = app.add_subcommand("closedform", "Print the closed forms that apply to k");
  closed_cmd->add_option("--k", closed_k)->required();

  std::vector<const char*> argv{"hexcolor"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_args, out);
    if (*table_cmd) return cmd_table(table_args, out, err);
    if (*verify_cmd) return cmd_verify(verify_args, out, err);
    if (*closed_cmd) return cmd_closedform(closed_k, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hexcolor
