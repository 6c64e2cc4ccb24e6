#pragma once

#include <functional>
#include <vector>

namespace ionclock {

// Dense Levenberg-Marquardt for the handful of tiny (2-4 parameter)
// least-squares problems in this project. Jacobians are formed by central
// differences; the normal equations are solved by Gaussian elimination with
// partial pivoting, which is plenty at these sizes.

using ResidualFn =
    std::function<void(const std::vector<double>& params, std::vector<double>& residuals)>;

struct LevMarOptions {
  int max_iterations = 200;
  double step_tolerance = 1e-14;    // relative parameter step
  double chi2_tolerance = 1e-15;    // relative chi2 improvement
  double initial_lambda = 1e-3;
};

struct LevMarResult {
  std::vector<double> params;
  std::vector<double> covariance;  // row-major n x n, scaled by chi2/dof
  double chi2 = 0.0;
  int iterations = 0;
  bool converged = false;
};

LevMarResult levmar_fit(const ResidualFn& fn, std::vector<double> initial,
                        int n_residuals, const LevMarOptions& options = {});

// Ordinary least-squares line y = a + b x. Returns {a, b}.
struct LineFit {
  double intercept = 0.0;
  double slope = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y,
                 const std::vector<double>& weights = {});

}  // namespace ionclock
