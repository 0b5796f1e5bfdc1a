#include "ged/optimize.hpp"

#include <algorithm>
#include <cmath>

#include "ged/errors.hpp"

namespace ged {

namespace {

struct Vertex {
  std::vector<double> x;
  double f;
};

}  // namespace

OptimizeResult minimize(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& x0, int budget, double tol,
    double initial_step) {
  if (budget < 1) throw ParamError("minimize: budget must be >= 1");
  const int dim = static_cast<int>(x0.size());

  OptimizeResult result;
  result.best_point = x0;

  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    const double v = f(x);
    ++evals;
    if (evals == 1 || v < result.best_value) {
      result.best_value = v;
      result.best_point = x;
    }
    return v;
  };

  std::vector<Vertex> simplex;
  simplex.push_back({x0, eval(x0)});
  result.evaluations = evals;
  if (dim == 0 || evals >= budget) return result;

  for (int i = 0; i < dim && evals < budget; ++i) {
    std::vector<double> x = x0;
    x[i] += initial_step;
    simplex.push_back({x, eval(x)});
  }

  // Standard coefficients: reflection 1, expansion 2, contraction 1/2,
  // shrink 1/2.
  const double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;

  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };

  while (evals < budget && static_cast<int>(simplex.size()) == dim + 1) {
    std::sort(simplex.begin(), simplex.end(), by_value);

    double diameter = 0.0;
    for (size_t v = 1; v < simplex.size(); ++v)
      for (int i = 0; i < dim; ++i)
        diameter =
            std::max(diameter, std::abs(simplex[v].x[i] - simplex[0].x[i]));
    if (diameter < tol) {
      result.converged = true;
      break;
    }

    std::vector<double> centroid(dim, 0.0);
    for (int v = 0; v < dim; ++v)
      for (int i = 0; i < dim; ++i) centroid[i] += simplex[v].x[i] / dim;

    Vertex& worst = simplex.back();
    auto along = [&](double t) {
      std::vector<double> x(dim);
      for (int i = 0; i < dim; ++i)
        x[i] = centroid[i] + t * (centroid[i] - worst.x[i]);
      return x;
    };

    const auto xr = along(kReflect);
    const double fr = eval(xr);
    if (fr < simplex[0].f) {
      if (evals < budget) {
        const auto xe = along(kExpand);
        const double fe = eval(xe);
        worst = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
      } else {
        worst = {xr, fr};
      }
      continue;
    }
    if (fr < simplex[dim - 1].f) {
      worst = {xr, fr};
      continue;
    }
    if (evals >= budget) break;
    const bool outside = fr < worst.f;
    const auto xc = along(outside ? kContract : -kContract);
    const double fc = eval(xc);
    if (fc < (outside ? fr : worst.f)) {
      worst = {xc, fc};
      continue;
    }
    // Shrink toward the best vertex.
    for (int v = 1; v <= dim && evals < budget; ++v) {
      for (int i = 0; i < dim; ++i)
        simplex[v].x[i] =
            simplex[0].x[i] + kShrink * (simplex[v].x[i] - simplex[0].x[i]);
      simplex[v].f = eval(simplex[v].x);
    }
  }

  result.evaluations = evals;
  return result;
}

}  // namespace ged
