#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "hexcolor/coloring.hpp"
#include "hexcolor/geometry.hpp"
#include "hexcolor/rational.hpp"

namespace hexcolor {

struct SolveOptions {
  /// Cap on refined starts per scheme is starts_per_axis^2.
  int starts_per_axis = 12;
  /// Coarse samples per continuous axis.
  int coarse_grid = 48;
  double value_tol = 1e-12;
  double param_tol = 1e-12;
  int max_iters = 400;
  int enumeration_slack = 1;

  /// Throws DomainError unless every field is positive and both
  /// tolerances are below 1e-6.
  void validate() const;
};

enum class ClosedFormTag { none, loeschian, cubic_f, quartic };
std::string_view to_string(ClosedFormTag tag);

struct SolveResult {
  int k = 0;
  HexClass class_tag = HexClass::regular;
  ColorScheme scheme;
  double gap1 = 0.0;
  double gap2 = 0.0;
  double r = 0.0;
  double s = 0.0;
  double d = 0.0;
  double dsq = 0.0;
  TripleRepresentation triple;
  std::optional<Fraction> dsq_rational;
  ClosedFormTag closed_form_tag = ClosedFormTag::none;

  Hexagon hexagon() const { return hexagon_from_gaps(gap1, gap2); }
};

/// Best shape of the given class for one coloring scheme.  Regular shapes
/// are evaluated directly; semi-regular shapes are scanned along the gap and
/// refined by golden section; rectilinear shapes are scanned on a grid over
/// the gap triangle and refined by Nelder-Mead from the best grid maxima.
/// Every refinement ends with an active-set Newton polish.  The returned d is
/// a lower bound on the true optimum.
SolveResult optimize_scheme(int k, const ColorScheme& scheme, HexClass cls, const SolveOptions& opts = {});

/// Best over all index-k schemes for one hexagon class (k >= 3).
SolveResult solve(int k, HexClass cls, const SolveOptions& opts = {});

struct SolveAllResult {
  /// Indexed by regular, semi_regular, rectilinear.
  std::array<SolveResult, 3> per_class;
  SolveResult champion;
};

/// All three classes; the champion prefers the more restricted class when
/// distances agree within 1e-9.
SolveAllResult solve_all(int k, const SolveOptions& opts = {});

/// Closed-form value matching dsq within 1e-7, checked in the order
/// Löschian, cubic, quartic.
ClosedFormTag closed_form_for(int k, double dsq);

/// Exact d^2 when it is recoverable from a polished double; see analysis.
std::optional<Fraction> reconstruct_dsq(double dsq);

}  // namespace hexcolor
