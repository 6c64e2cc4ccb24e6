#include "ionclock/fit.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "ionclock/errors.hpp"

namespace ionclock {

namespace {

// Solve A x = b in place, A row-major n x n. Partial pivoting.
bool solve_linear(std::vector<double> a, std::vector<double> b, int n,
                  std::vector<double>& x) {
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::fabs(a[r * n + col]) > std::fabs(a[pivot * n + col])) pivot = r;
    }
    if (std::fabs(a[pivot * n + col]) < 1e-300) return false;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a[col * n + c], a[pivot * n + c]);
      std::swap(b[col], b[pivot]);
    }
    double inv = 1.0 / a[col * n + col];
    for (int r = col + 1; r < n; ++r) {
      double f = a[r * n + col] * inv;
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      b[r] -= f * b[col];
    }
  }
  x.assign(n, 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r * n + c] * x[c];
    x[r] = s / a[r * n + r];
  }
  return true;
}

double chi2_of(const std::vector<double>& r) {
  double s = 0.0;
  for (double v : r) s += v * v;
  return s;
}

}  // namespace

LevMarResult levmar_fit(const ResidualFn& fn, std::vector<double> initial,
                        int n_residuals, const LevMarOptions& options) {
  const int np = static_cast<int>(initial.size());
  const int nr = n_residuals;
  LevMarResult result;
  result.params = std::move(initial);

  std::vector<double> residuals(nr), trial_residuals(nr);
  fn(result.params, residuals);
  result.chi2 = chi2_of(residuals);

  std::vector<double> jac(static_cast<size_t>(nr) * np);
  std::vector<double> jtj(static_cast<size_t>(np) * np), jtr(np), step;
  double lambda = options.initial_lambda;

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    result.iterations = iter + 1;

    // Central-difference Jacobian.
    for (int p = 0; p < np; ++p) {
      double h = 1e-7 * std::max(1.0, std::fabs(result.params[p]));
      std::vector<double> pp = result.params, pm = result.params;
      pp[p] += h;
      pm[p] -= h;
      std::vector<double> rp(nr), rm(nr);
      fn(pp, rp);
      fn(pm, rm);
      for (int i = 0; i < nr; ++i)
        jac[static_cast<size_t>(i) * np + p] = (rp[i] - rm[i]) / (2.0 * h);
    }

    for (int a = 0; a < np; ++a) {
      jtr[a] = 0.0;
      for (int i = 0; i < nr; ++i)
        jtr[a] += jac[static_cast<size_t>(i) * np + a] * residuals[i];
      for (int b = 0; b <= a; ++b) {
        double s = 0.0;
        for (int i = 0; i < nr; ++i)
          s += jac[static_cast<size_t>(i) * np + a] *
               jac[static_cast<size_t>(i) * np + b];
        jtj[static_cast<size_t>(a) * np + b] = s;
        jtj[static_cast<size_t>(b) * np + a] = s;
      }
    }

    bool improved = false;
    for (int attempt = 0; attempt < 16 && !improved; ++attempt) {
      std::vector<double> damped = jtj;
      for (int d = 0; d < np; ++d)
        damped[static_cast<size_t>(d) * np + d] *= 1.0 + lambda;
      std::vector<double> rhs(np);
      for (int d = 0; d < np; ++d) rhs[d] = -jtr[d];
      if (!solve_linear(damped, rhs, np, step)) {
        lambda *= 10.0;
        continue;
      }
      std::vector<double> trial = result.params;
      for (int d = 0; d < np; ++d) trial[d] += step[d];
      fn(trial, trial_residuals);
      double trial_chi2 = chi2_of(trial_residuals);
      if (trial_chi2 < result.chi2) {
        double rel_step = 0.0;
        for (int d = 0; d < np; ++d)
          rel_step = std::max(rel_step, std::fabs(step[d]) /
                                            std::max(1.0, std::fabs(trial[d])));
        double rel_gain = (result.chi2 - trial_chi2) / std::max(result.chi2, 1e-300);
        result.params = std::move(trial);
        residuals = trial_residuals;
        result.chi2 = trial_chi2;
        lambda = std::max(lambda * 0.3, 1e-12);
        improved = true;
        if (rel_step < options.step_tolerance || rel_gain < options.chi2_tolerance) {
          result.converged = true;
        }
      } else {
        lambda *= 10.0;
      }
    }
    if (!improved) {
      // Damping exhausted: local minimum to machine precision.
      result.converged = true;
    }
    if (result.converged) break;
  }

  // Covariance = (J^T J)^(-1) * chi2/dof via column solves.
  result.covariance.assign(static_cast<size_t>(np) * np, 0.0);
  double dof = std::max(1, nr - np);
  for (int c = 0; c < np; ++c) {
    std::vector<double> e(np, 0.0), col;
    e[c] = 1.0;
    if (solve_linear(jtj, e, np, col)) {
      for (int r = 0; r < np; ++r)
        result.covariance[static_cast<size_t>(r) * np + c] =
            col[r] * result.chi2 / dof;
    }
  }
  return result;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y,
                 const std::vector<double>& weights) {
  if (x.size() != y.size() || x.size() < 2)
    throw DataError("fit_line: need at least two (x, y) points");
  double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    double w = weights.empty() ? 1.0 : weights[i];
    sw += w;
    sx += w * x[i];
    sy += w * y[i];
    sxx += w * x[i] * x[i];
    sxy += w * x[i] * y[i];
  }
  double det = sw * sxx - sx * sx;
  if (std::fabs(det) < 1e-300) throw NumericalError("fit_line: degenerate abscissa");
  LineFit f;
  f.slope = (sw * sxy - sx * sy) / det;
  f.intercept = (sxx * sy - sx * sxy) / det;
  return f;
}

}  // namespace ionclock
