#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace hexcolor {

using Objective = std::function<double(std::span<const double>)>;

struct NelderMeadOptions {
  double value_tol = 1e-12;
  double param_tol = 1e-12;
  int max_iters = 400;
};

struct LocalOptimum {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
};

/// Deterministic Nelder-Mead maximization from an axis-aligned initial
/// simplex of edge `step`.  The result is never worse than f(x0).
LocalOptimum nelder_mead_maximize(const Objective& f, std::vector<double> x0, double step,
                                  const NelderMeadOptions& opts = {});

/// Golden-section maximization on [lo, hi]; returns the best point evaluated.
LocalOptimum golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                                     double param_tol, int max_iters = 400);

/// Maximin problem max_x min_a f_a(x) seen through its pieces.
struct MaximinPieces {
  int dims = 0;
  int count = 0;
  /// Value of piece a at x.
  std::function<double(std::span<const double>, int)> piece;
  /// Full objective (minimum over every piece, including ones not listed).
  Objective objective;
  std::function<bool(std::span<const double>)> in_domain;
};

struct PolishOptions {
  /// Size of the lowest-valued piece pool from which active sets are drawn.
  int pool = 4;
  /// Pieces farther than this above the minimum never enter the pool.
  double pool_gap = 1e-2;
  int max_newton = 40;
  double grad_step = 1e-5;
  double hess_step = 1e-4;
};

/// Newton iteration on the first-order conditions of the maximin,
///   f_a(x) = t for a in A,  sum lambda_a grad f_a(x) = 0,  sum lambda_a = 1,
/// for every candidate active set A of up to dims + 1 pieces near the
/// minimum at x0.  Derivatives come from central differences.  A solution
/// counts only when it stays in the domain, has nonnegative multipliers and
/// no other piece dips below t.  Returns the best such point if it improves
/// on f(x0), otherwise nothing.
std::optional<LocalOptimum> polish_active_set(const MaximinPieces& problem, std::span<const double> x0,
                                              const PolishOptions& opts = {});

}  // namespace hexcolor
