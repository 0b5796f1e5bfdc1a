#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "ged/qubo.hpp"

namespace ged {

/// Geometric-cooling schedule parameters. Each restart proposes single-bit
/// flips while the temperature decays from t0 by the given factor until it
/// reaches t_min.
struct SaParams {
  double t0 = 0.0;     // 0 means "derive from the problem"
  double decay = 0.0;  // 0 means "derive from proposals_per_restart"
  double t_min = 1e-3;
  int shots = 1000;
  uint64_t seed = 0;

  /// Used only when decay is 0: the derived decay gives roughly this many
  /// proposals per restart (default 10 * num_vars^2).
  int proposals_per_restart = 0;
};

/// One (assignment, energy) pair per restart, aligned by index.
struct SampleSet {
  std::vector<Assignment> samples;
  std::vector<double> energies;

  int size() const { return static_cast<int>(samples.size()); }
};

/// Optional per-move observer, used by tests and trace output. Called after
/// every proposal with the temperature at which it was decided.
struct SaObserver {
  std::function<void(int shot, double temperature, double energy_before,
                     double energy_after, bool accepted)>
      on_step;
};

/// Resolves the zero/derived fields of params against a concrete problem.
SaParams resolve_sa_params(const QuboProblem& q, SaParams params);

/// Simulated annealing over the QUBO. Restarts are independent: restart i
/// draws its RNG stream from (seed, i), so results are reproducible and do
/// not depend on execution order.
SampleSet anneal(const QuboProblem& q, const SaParams& params,
                 const SaObserver* observer = nullptr);

/// Lowest-energy sample; ties broken by first occurrence.
std::pair<Assignment, double> best(const SampleSet& ss);

}  // namespace ged
