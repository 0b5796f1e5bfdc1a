#pragma once

#include <functional>
#include <vector>

namespace ged {

struct OptimizeResult {
  std::vector<double> best_point;
  double best_value = 0.0;
  int evaluations = 0;
  bool converged = false;  // simplex collapsed below tol (vs. budget hit)
};

/// Derivative-free local minimization (Nelder-Mead simplex). Evaluates f at
/// most `budget` times, stops early once the simplex diameter falls below
/// tol, and always returns the best point seen — never worse than x0.
OptimizeResult minimize(const std::function<double(const std::vector<double>&)>& f,
                        const std::vector<double>& x0, int budget,
                        double tol = 1e-4, double initial_step = 0.5);

}  // namespace ged
