#include "hexcolor/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "hexcolor/errors.hpp"
#include "hexcolor/evaluator.hpp"
#include "hexcolor/local_search.hpp"

namespace hexcolor {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kClassTieTol = 1e-9;
// Keeps sampled shapes strictly inside the constructor's accepted range.
constexpr double kDomainMargin = 4.0 * kGeomEpsilon;

double rank_tol(double d) { return 1e-12 * std::max(1.0, d); }

// Continuous parameters of a class: none, (g) with both gaps g, or (g1, g2).
struct Family {
  HexClass cls;

  int dims() const {
    switch (cls) {
      case HexClass::regular: return 0;
      case HexClass::semi_regular: return 1;
      case HexClass::rectilinear: return 2;
    }
    return 0;
  }

  bool in_domain(std::span<const double> x) const {
    switch (cls) {
      case HexClass::regular: return true;
      case HexClass::semi_regular: return x[0] > kDomainMargin && 2.0 * x[0] < kPi - kDomainMargin;
      case HexClass::rectilinear:
        return x[0] > kDomainMargin && x[1] > kDomainMargin && x[0] + x[1] < kPi - kDomainMargin;
    }
    return false;
  }

  std::array<double, 2> gaps(std::span<const double> x) const {
    switch (cls) {
      case HexClass::regular: return {kPi / 3.0, kPi / 3.0};
      case HexClass::semi_regular: return {x[0], x[0]};
      case HexClass::rectilinear: return {x[0], x[1]};
    }
    return {};
  }

  Hexagon hexagon(std::span<const double> x) const {
    const auto g = gaps(x);
    return hexagon_from_gaps(g[0], g[1]);
  }
};

class SchemeObjective {
 public:
  SchemeObjective(const ColorScheme& s, HexClass cls, int slack)
      : family_{cls}, distance_(s, WindowPolicy{.slack = slack}), slack_(slack) {}

  const Family& family() const { return family_; }
  const ColorScheme& scheme() const { return distance_.scheme(); }
  int slack() const { return slack_; }

  double operator()(std::span<const double> x) {
    if (!family_.in_domain(x)) return -1.0;
    return distance_(family_.hexagon(x)).d;
  }

  const std::vector<TileIndex>& offsets_for(std::span<const double> x) {
    return distance_.offsets_for(family_.hexagon(x));
  }

 private:
  Family family_;
  SchemeDistance distance_;
  int slack_;
};

struct Candidate {
  std::vector<double> x;
  double d = -1.0;
};

void keep_better(Candidate& best, std::vector<double> x, double d) {
  if (d > best.d) {
    best.x = std::move(x);
    best.d = d;
  }
}

struct GridPoint {
  int index;
  double d;
};

// Local maxima with positive value, best first, at most `cap` of them.
std::vector<GridPoint> pick_starts(std::vector<GridPoint> maxima, int cap) {
  std::stable_sort(maxima.begin(), maxima.end(), [](const GridPoint& a, const GridPoint& b) { return a.d > b.d; });
  if (static_cast<int>(maxima.size()) > cap) maxima.resize(static_cast<std::size_t>(cap));
  return maxima;
}

Candidate refine_semi(SchemeObjective& obj, const SolveOptions& opts, std::span<const double> seeds) {
  const int n = opts.coarse_grid;
  const double lo = kDomainMargin;
  const double hi = kPi / 2.0 - kDomainMargin;
  const double step = (hi - lo) / n;
  auto f1 = [&obj](double g) {
    const std::array<double, 2> x{g, g};
    return obj(x);
  };

  std::vector<double> vals(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = f1(lo + (i + 0.5) * step);

  std::vector<GridPoint> maxima;
  for (int i = 0; i < n; ++i) {
    const double v = vals[static_cast<std::size_t>(i)];
    if (v <= 0.0) continue;
    if (i > 0 && vals[static_cast<std::size_t>(i - 1)] > v) continue;
    if (i + 1 < n && vals[static_cast<std::size_t>(i + 1)] > v) continue;
    maxima.push_back({i, v});
  }

  Candidate best;
  auto refine_around = [&](double center, double center_value) {
    keep_better(best, {center}, center_value);
    const double a = std::max(lo, center - step);
    const double b = std::min(hi, center + step);
    const auto opt = golden_section_maximize(f1, a, b, opts.param_tol, opts.max_iters);
    keep_better(best, opt.x, opt.value);
  };

  for (const auto& m : pick_starts(maxima, opts.starts_per_axis * opts.starts_per_axis)) {
    refine_around(lo + (m.index + 0.5) * step, m.d);
  }
  for (double seed : seeds) {
    if (seed > lo && seed < hi) refine_around(seed, f1(seed));
  }
  if (best.d < 0.0) best = {{kPi / 3.0}, f1(kPi / 3.0)};
  return best;
}

Candidate refine_rect(SchemeObjective& obj, const SolveOptions& opts, std::span<const std::array<double, 2>> seeds) {
  const int n = opts.coarse_grid;
  const double step = kPi / n;
  const NelderMeadOptions nm{opts.value_tol, opts.param_tol, opts.max_iters};
  auto f2 = [&obj](std::span<const double> x) { return obj(x); };

  std::vector<double> vals(static_cast<std::size_t>(n * n), -1.0);
  auto at = [&](int i, int j) -> double& { return vals[static_cast<std::size_t>(i * n + j)]; };
  auto point = [&](int i, int j) { return std::vector<double>{(i + 0.5) * step, (j + 0.5) * step}; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; i + j < n; ++j) at(i, j) = f2(point(i, j));
  }

  std::vector<GridPoint> maxima;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; i + j < n; ++j) {
      const double v = at(i, j);
      if (v <= 0.0) continue;
      bool is_max = true;
      for (int di = -1; di <= 1 && is_max; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          const int a = i + di;
          const int b = j + dj;
          if ((di == 0 && dj == 0) || a < 0 || b < 0 || a >= n || b >= n) continue;
          if (at(a, b) > v) {
            is_max = false;
            break;
          }
        }
      }
      if (is_max) maxima.push_back({i * n + j, v});
    }
  }

  Candidate best;
  for (const auto& m : pick_starts(maxima, opts.starts_per_axis * opts.starts_per_axis)) {
    auto x0 = point(m.index / n, m.index % n);
    keep_better(best, x0, m.d);
    const auto opt = nelder_mead_maximize(f2, std::move(x0), step, nm);
    keep_better(best, opt.x, opt.value);
  }
  for (const auto& seed : seeds) {
    std::vector<double> x0{seed[0], seed[1]};
    if (!obj.family().in_domain(x0)) continue;
    keep_better(best, x0, f2(x0));
    const auto opt = nelder_mead_maximize(f2, std::move(x0), step, nm);
    keep_better(best, opt.x, opt.value);
  }
  if (best.d < 0.0) {
    std::vector<double> x0{kPi / 3.0, kPi / 3.0};
    best = {x0, f2(x0)};
  }
  return best;
}

void polish(SchemeObjective& obj, Candidate& cand) {
  const Family& fam = obj.family();
  if (fam.dims() == 0 || cand.d <= 0.0) return;
  const std::vector<TileIndex> offsets = obj.offsets_for(cand.x);

  MaximinPieces problem;
  problem.dims = fam.dims();
  problem.count = static_cast<int>(offsets.size());
  problem.piece = [&fam, &offsets](std::span<const double> x, int a) {
    if (!fam.in_domain(x)) return -1.0;
    const Hexagon hex = fam.hexagon(x);
    return tile_distance(hex, lattice_basis(hex), offsets[static_cast<std::size_t>(a)]);
  };
  problem.objective = [&obj](std::span<const double> x) { return obj(x); };
  problem.in_domain = [&fam](std::span<const double> x) { return fam.in_domain(x); };

  if (auto improved = polish_active_set(problem, cand.x); improved && improved->value > cand.d) {
    cand.x = std::move(improved->x);
    cand.d = improved->value;
  }
}

SolveResult finalize(int k, const ColorScheme& scheme, HexClass cls, const Candidate& cand, int slack) {
  const Family fam{cls};
  const auto gaps = fam.gaps(cand.x);
  const Hexagon hex = hexagon_from_gaps(gaps[0], gaps[1]);
  const WindowPolicy policy{.slack = slack};

  SolveResult res;
  res.k = k;
  res.class_tag = cls;
  res.scheme = scheme;
  res.gap1 = gaps[0];
  res.gap2 = gaps[1];
  res.r = hex.r();
  res.s = hex.s();
  res.d = min_distance_over_offsets(hex, scheme, policy).d;
  res.dsq = res.d * res.d;
  res.triple = canonical_triple(hex, scheme, policy);
  res.dsq_rational = reconstruct_dsq(res.dsq);
  res.closed_form_tag = closed_form_for(k, res.dsq);
  return res;
}

// Higher d wins; near-equal values go to the smaller scheme.
bool scheme_better(double d_a, const ColorScheme& a, double d_b, const ColorScheme& b) {
  const double tol = rank_tol(std::max(d_a, d_b));
  if (d_a > d_b + tol) return true;
  if (d_b > d_a + tol) return false;
  return a < b;
}

struct SchemeRun {
  SchemeObjective obj;
  Candidate cand;
};

// Scan and refine every scheme, then polish those close to the leader and
// return the index of the winner.
std::size_t run_schemes(std::vector<SchemeRun>& runs, const std::function<Candidate(SchemeRun&)>& refine) {
  double lead = -1.0;
  for (auto& run : runs) {
    run.cand = refine(run);
    lead = std::max(lead, run.cand.d);
  }
  const double margin = 1e-3 * std::max(1.0, lead);
  for (auto& run : runs) {
    if (run.cand.d >= lead - margin) polish(run.obj, run.cand);
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (scheme_better(runs[i].cand.d, runs[i].obj.scheme(), runs[best].cand.d, runs[best].obj.scheme())) best = i;
  }
  return best;
}

std::vector<SchemeRun> make_runs(int k, HexClass cls, const SolveOptions& opts) {
  std::vector<SchemeRun> runs;
  for (const auto& s : schemes(k)) runs.push_back({SchemeObjective(s, cls, opts.enumeration_slack), {}});
  return runs;
}

void require_k(int k) {
  if (k < 3) throw DomainError("k must be at least 3");
}

}  // namespace

void SolveOptions::validate() const {
  if (starts_per_axis < 1 || coarse_grid < 1 || max_iters < 1 || enumeration_slack < 1) {
    throw DomainError("solve options must be positive");
  }
  if (!(value_tol > 0.0 && value_tol < 1e-6) || !(param_tol > 0.0 && param_tol < 1e-6)) {
    throw DomainError("solve tolerances must lie in (0, 1e-6)");
  }
}

std::string_view to_string(ClosedFormTag tag) {
  switch (tag) {
    case ClosedFormTag::none: return "none";
    case ClosedFormTag::loeschian: return "loeschian";
    case ClosedFormTag::cubic_f: return "cubic_f";
    case ClosedFormTag::quartic: return "quartic";
  }
  return "none";
}

SolveResult optimize_scheme(int k, const ColorScheme& scheme, HexClass cls, const SolveOptions& opts) {
  opts.validate();
  require_valid(scheme);
  if (scheme.k != k) throw DomainError("scheme index does not match k");

  SchemeObjective obj(scheme, cls, opts.enumeration_slack);
  Candidate cand;
  switch (cls) {
    case HexClass::regular: cand = {{}, obj({})}; break;
    case HexClass::semi_regular: {
      const double seed = kPi / 3.0;
      cand = refine_semi(obj, opts, std::span<const double>(&seed, 1));
      break;
    }
    case HexClass::rectilinear: {
      SchemeObjective semi(scheme, HexClass::semi_regular, opts.enumeration_slack);
      const double seed = kPi / 3.0;
      Candidate s = refine_semi(semi, opts, std::span<const double>(&seed, 1));
      polish(semi, s);
      const std::array<std::array<double, 2>, 2> seeds{{{kPi / 3.0, kPi / 3.0}, {s.x[0], s.x[0]}}};
      cand = refine_rect(obj, opts, seeds);
      break;
    }
  }
  polish(obj, cand);
  return finalize(k, scheme, cls, cand, opts.enumeration_slack);
}

SolveResult solve(int k, HexClass cls, const SolveOptions& opts) {
  opts.validate();
  require_k(k);
  const double pi3 = kPi / 3.0;

  auto reg_runs = make_runs(k, HexClass::regular, opts);
  const auto reg_best = run_schemes(reg_runs, [](SchemeRun& run) { return Candidate{{}, run.obj({})}; });
  ColorScheme scheme = reg_runs[reg_best].obj.scheme();
  Candidate best{{pi3, pi3}, reg_runs[reg_best].cand.d};
  if (cls == HexClass::regular) return finalize(k, scheme, cls, reg_runs[reg_best].cand, opts.enumeration_slack);

  // Each class contains the previous one, so a strictly better optimum of the
  // smaller class (a scheme tie resolved the other way) is carried forward.
  const auto carry = [&](const std::vector<SchemeRun>& runs, std::size_t i) {
    const Candidate& c = runs[i].cand;
    if (c.d < best.d) return;
    scheme = runs[i].obj.scheme();
    best = Candidate{{c.x.front(), c.x.back()}, c.d};
  };

  auto semi_runs = make_runs(k, HexClass::semi_regular, opts);
  const auto semi_best = run_schemes(semi_runs, [&](SchemeRun& run) {
    return refine_semi(run.obj, opts, std::span<const double>(&pi3, 1));
  });
  carry(semi_runs, semi_best);
  if (cls == HexClass::semi_regular) {
    return finalize(k, scheme, cls, Candidate{{best.x[0]}, best.d}, opts.enumeration_slack);
  }

  auto rect_runs = make_runs(k, HexClass::rectilinear, opts);
  std::size_t idx = 0;
  const auto rect_best = run_schemes(rect_runs, [&](SchemeRun& run) {
    const double g = semi_runs[idx++].cand.x[0];
    const std::array<std::array<double, 2>, 2> seeds{{{pi3, pi3}, {g, g}}};
    return refine_rect(run.obj, opts, seeds);
  });
  carry(rect_runs, rect_best);
  return finalize(k, scheme, cls, best, opts.enumeration_slack);
}

SolveAllResult solve_all(int k, const SolveOptions& opts) {
  SolveAllResult out;
  for (HexClass c : {HexClass::regular, HexClass::semi_regular, HexClass::rectilinear}) {
    out.per_class[static_cast<std::size_t>(c)] = solve(k, c, opts);
  }
  out.champion = out.per_class[0];
  for (std::size_t i = 1; i < out.per_class.size(); ++i) {
    if (out.per_class[i].d > out.champion.d + kClassTieTol) out.champion = out.per_class[i];
  }
  return out;
}

ClosedFormTag closed_form_for(int k, double dsq) {
  constexpr double tol = 1e-7;
  if (k < 1 || !std::isfinite(dsq)) return ClosedFormTag::none;
  if (const auto reg = regular_dsq(k); reg && std::abs(reg->value() - dsq) < tol) return ClosedFormTag::loeschian;
  if (pronic_index(k).value_or(0) >= 2) {
    try {
      if (std::abs(cubic_f(k).dsq - dsq) < tol) return ClosedFormTag::cubic_f;
    } catch (const DomainError&) {
    }
  }
  if (has_quartic(k) && std::abs(quartic_dsq(k) - dsq) < tol) return ClosedFormTag::quartic;
  return ClosedFormTag::none;
}

std::optional<Fraction> reconstruct_dsq(double dsq) { return recover_exact_rational(dsq); }

}  // namespace hexcolor
