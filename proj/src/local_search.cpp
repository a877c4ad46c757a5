#include "hexcolor/local_search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

namespace hexcolor {

namespace {

struct Vertex {
  std::vector<double> x;
  double value;
};

std::vector<double> lerp(const std::vector<double>& from, const std::vector<double>& to, double t) {
  std::vector<double> out(from.size());
  for (std::size_t m = 0; m < from.size(); ++m) out[m] = from[m] + t * (to[m] - from[m]);
  return out;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t m = 0; m < a.size(); ++m) worst = std::max(worst, std::abs(a[m] - b[m]));
  return worst;
}

// Solves a x = b in place by Gaussian elimination with partial pivoting.
// Row-major n x n.  Returns false on a (numerically) singular matrix.
bool solve_dense(std::vector<double>& a, std::vector<double>& b, int n) {
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int row = col + 1; row < n; ++row) {
      if (std::abs(a[row * n + col]) > std::abs(a[pivot * n + col])) pivot = row;
    }
    if (std::abs(a[pivot * n + col]) < 1e-300) return false;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a[col * n + c], a[pivot * n + c]);
      std::swap(b[col], b[pivot]);
    }
    for (int row = col + 1; row < n; ++row) {
      const double factor = a[row * n + col] / a[col * n + col];
      if (factor == 0.0) continue;
      for (int c = col; c < n; ++c) a[row * n + c] -= factor * a[col * n + c];
      b[row] -= factor * b[col];
    }
  }
  for (int row = n - 1; row >= 0; --row) {
    double acc = b[row];
    for (int c = row + 1; c < n; ++c) acc -= a[row * n + c] * b[c];
    b[row] = acc / a[row * n + row];
    if (!std::isfinite(b[row])) return false;
  }
  return true;
}

}  // namespace

LocalOptimum nelder_mead_maximize(const Objective& f, std::vector<double> x0, double step,
                                  const NelderMeadOptions& opts) {
  const std::size_t n = x0.size();
  std::vector<Vertex> simplex;
  simplex.push_back({x0, f(x0)});
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<double> x = x0;
    x[m] += step;
    simplex.push_back({x, f(x)});
  }

  auto order = [&] {
    std::stable_sort(simplex.begin(), simplex.end(),
                     [](const Vertex& a, const Vertex& b) { return a.value > b.value; });
  };

  int iter = 0;
  for (; iter < opts.max_iters; ++iter) {
    order();
    const Vertex& best = simplex.front();
    const Vertex& worst = simplex.back();
    double spread = 0.0;
    for (const Vertex& v : simplex) spread = std::max(spread, max_abs_diff(v.x, best.x));
    if (std::abs(best.value - worst.value) <= opts.value_tol * (1.0 + std::abs(best.value)) &&
        spread <= opts.param_tol) {
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t m = 0; m < n; ++m) centroid[m] += simplex[v].x[m] / static_cast<double>(n);
    }

    const std::vector<double> reflected = lerp(centroid, worst.x, -1.0);
    const double fr = f(reflected);
    if (fr > best.value) {
      const std::vector<double> expanded = lerp(centroid, worst.x, -2.0);
      const double fe = f(expanded);
      simplex.back() = fe > fr ? Vertex{expanded, fe} : Vertex{reflected, fr};
      continue;
    }
    if (fr > simplex[n - 1].value) {
      simplex.back() = {reflected, fr};
      continue;
    }
    if (fr > worst.value) {
      const std::vector<double> outside = lerp(centroid, reflected, 0.5);
      const double fo = f(outside);
      if (fo >= fr) {
        simplex.back() = {outside, fo};
        continue;
      }
    } else {
      const std::vector<double> inside = lerp(centroid, worst.x, 0.5);
      const double fi = f(inside);
      if (fi > worst.value) {
        simplex.back() = {inside, fi};
        continue;
      }
    }
    for (std::size_t v = 1; v <= n; ++v) {
      simplex[v].x = lerp(simplex.front().x, simplex[v].x, 0.5);
      simplex[v].value = f(simplex[v].x);
    }
  }
  order();
  return {simplex.front().x, simplex.front().value, iter};
}

LocalOptimum golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                                     double param_tol, int max_iters) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  LocalOptimum best{{fc >= fd ? c : d}, std::max(fc, fd), 0};
  int iter = 0;
  for (; iter < max_iters && b - a > param_tol; ++iter) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      if (fc > best.value) best = {{c}, fc, iter};
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      if (fd > best.value) best = {{d}, fd, iter};
    }
  }
  best.iterations = iter;
  return best;
}

namespace {

struct PieceDerivatives {
  double value;
  std::vector<double> grad;
  std::vector<double> hess;  // dims x dims
};

PieceDerivatives differentiate(const MaximinPieces& p, std::span<const double> x, int a, const PolishOptions& o) {
  const int n = p.dims;
  PieceDerivatives out{p.piece(x, a), std::vector<double>(n), std::vector<double>(n * n)};
  std::vector<double> y(x.begin(), x.end());
  auto at = [&](int i, double di, int j, double dj) {
    y.assign(x.begin(), x.end());
    y[i] += di;
    if (j >= 0) y[j] += dj;
    return p.piece(y, a);
  };
  const double hg = o.grad_step;
  const double hh = o.hess_step;
  for (int i = 0; i < n; ++i) {
    out.grad[i] = (at(i, hg, -1, 0) - at(i, -hg, -1, 0)) / (2.0 * hg);
    out.hess[i * n + i] = (at(i, hh, -1, 0) - 2.0 * out.value + at(i, -hh, -1, 0)) / (hh * hh);
    for (int j = 0; j < i; ++j) {
      const double mixed = (at(i, hh, j, hh) - at(i, hh, j, -hh) - at(i, -hh, j, hh) + at(i, -hh, j, -hh)) /
                           (4.0 * hh * hh);
      out.hess[i * n + j] = mixed;
      out.hess[j * n + i] = mixed;
    }
  }
  return out;
}

struct KktState {
  std::vector<double> x;
  double t;
  std::vector<double> lambda;
};

// Residual of the first-order system and its Jacobian.
std::vector<double> kkt_residual(const MaximinPieces& p, const std::vector<int>& active, const KktState& s,
                                 const PolishOptions& o, std::vector<double>* jac) {
  const int n = p.dims;
  const int m = static_cast<int>(active.size());
  const int size = n + 1 + m;
  std::vector<double> r(size, 0.0);
  jac->assign(static_cast<std::size_t>(size) * size, 0.0);
  const int stat_row = m;
  const int sum_row = m + n;
  double lambda_sum = 0.0;
  for (int q = 0; q < m; ++q) {
    lambda_sum += s.lambda[q];
    const PieceDerivatives der = differentiate(p, s.x, active[q], o);
    r[q] = der.value - s.t;
    for (int i = 0; i < n; ++i) {
      (*jac)[q * size + i] = der.grad[i];
      r[stat_row + i] += s.lambda[q] * der.grad[i];
      (*jac)[(stat_row + i) * size + (n + 1 + q)] = der.grad[i];
      for (int j = 0; j < n; ++j) (*jac)[(stat_row + i) * size + j] += s.lambda[q] * der.hess[i * n + j];
    }
    (*jac)[q * size + n] = -1.0;
    (*jac)[sum_row * size + (n + 1 + q)] = 1.0;
  }
  r[sum_row] = lambda_sum - 1.0;
  return r;
}

double inf_norm(const std::vector<double>& v) {
  double worst = 0.0;
  for (double e : v) worst = std::max(worst, std::abs(e));
  return worst;
}

std::optional<KktState> newton_kkt(const MaximinPieces& p, const std::vector<int>& active, KktState s,
                                   const PolishOptions& o) {
  const int n = p.dims;
  const int m = static_cast<int>(active.size());
  const int size = n + 1 + m;
  std::vector<double> jac;
  std::vector<double> r = kkt_residual(p, active, s, o, &jac);
  for (int iter = 0; iter < o.max_newton; ++iter) {
    const double scale = 1.0 + std::abs(s.t);
    // Equality rows converge to roundoff; stationarity rows are limited by
    // the finite-difference gradients.
    double eq = 0.0;
    for (int q = 0; q < m; ++q) eq = std::max(eq, std::abs(r[q]));
    double stat = 0.0;
    for (int i = 0; i < n; ++i) stat = std::max(stat, std::abs(r[m + i]));
    if (eq <= 1e-14 * scale && stat <= 1e-7 && std::abs(r[m + n]) <= 1e-12) return s;

    std::vector<double> step = r;
    for (double& e : step) e = -e;
    std::vector<double> a = jac;
    if (!solve_dense(a, step, size)) return std::nullopt;

    const double before = inf_norm(r);
    double alpha = 1.0;
    bool moved = false;
    for (int halving = 0; halving < 30; ++halving, alpha *= 0.5) {
      KktState trial = s;
      for (int i = 0; i < n; ++i) trial.x[i] += alpha * step[i];
      trial.t += alpha * step[n];
      for (int q = 0; q < m; ++q) trial.lambda[q] += alpha * step[n + 1 + q];
      if (!p.in_domain(trial.x)) continue;
      std::vector<double> trial_jac;
      std::vector<double> tr = kkt_residual(p, active, trial, o, &trial_jac);
      if (inf_norm(tr) < before || halving == 29) {
        s = std::move(trial);
        r = std::move(tr);
        jac = std::move(trial_jac);
        moved = true;
        break;
      }
    }
    if (!moved) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<LocalOptimum> polish_active_set(const MaximinPieces& problem, std::span<const double> x0,
                                              const PolishOptions& opts) {
  if (problem.dims < 1 || problem.count < 1 || !problem.in_domain(x0)) return std::nullopt;
  const std::vector<double> start(x0.begin(), x0.end());
  const double incumbent = problem.objective(start);

  std::vector<std::pair<double, int>> values;
  for (int a = 0; a < problem.count; ++a) values.emplace_back(problem.piece(start, a), a);
  std::stable_sort(values.begin(), values.end());
  const double fmin = values.front().first;
  std::vector<int> pool;
  for (const auto& [v, a] : values) {
    if (static_cast<int>(pool.size()) >= opts.pool) break;
    if (v > fmin + opts.pool_gap * std::max(1.0, std::abs(fmin))) break;
    pool.push_back(a);
  }

  std::optional<LocalOptimum> best;
  const int subsets = 1 << pool.size();
  for (int mask = 1; mask < subsets; ++mask) {
    const int m = std::popcount(static_cast<unsigned>(mask));
    if (m > problem.dims + 1) continue;
    std::vector<int> active;
    double t0 = std::numeric_limits<double>::infinity();
    for (std::size_t q = 0; q < pool.size(); ++q) {
      if (mask & (1 << q)) {
        active.push_back(pool[q]);
        t0 = std::min(t0, problem.piece(start, pool[q]));
      }
    }
    KktState init{start, t0, std::vector<double>(m, 1.0 / m)};
    const auto solved = newton_kkt(problem, active, init, opts);
    if (!solved) continue;
    if (*std::min_element(solved->lambda.begin(), solved->lambda.end()) < -1e-9) continue;
    const double value = problem.objective(solved->x);
    if (value < solved->t - 1e-10) continue;
    if (!best || value > best->value) best = LocalOptimum{solved->x, value, 0};
  }
  if (best && best->value >= incumbent) return best;
  return std::nullopt;
}

}  // namespace hexcolor
