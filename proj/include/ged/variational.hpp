#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ged/qsim.hpp"
#include "ged/qubo.hpp"

namespace ged {

enum class VariationalMethod { VQE, QAOA };

struct VariationalOptions {
  int p = 1;
  int restarts = 8;
  int shots = 1024;
  uint64_t seed = 0;
  bool final_rotation_layer = true;  // VQE only
  int max_qubits = kDefaultQubitCap;
  int budget = 0;      // optimizer evaluations per restart; 0 = 500 * params
  double tol = 1e-4;   // optimizer convergence tolerance
};

struct RestartTrace {
  int restart = 0;
  double optimized_expectation = 0.0;
  double best_sampled_energy = 0.0;
  int evaluations = 0;
};

struct VariationalResult {
  Assignment best;            // globally lowest-energy sampled bitstring
  double best_energy = 0.0;
  std::optional<Assignment> best_valid;  // lowest-energy bijection-encoding sample
  double best_valid_energy = 0.0;
  std::optional<int> decoded_ged;        // from best_valid

  int num_qubits = 0;
  int num_params = 0;
  int depth = 0;
  int size = 0;
  int total_evaluations = 0;
  std::vector<RestartTrace> trace;
};

/// Runs the full variational loop: for each restart, draw theta0 uniformly
/// in [-pi, pi]^P, minimize the expectation of the problem Hamiltonian with
/// the derivative-free optimizer, then sample the optimized state and score
/// every sampled bitstring with the QUBO energy. Restart RNG streams are
/// derived from (seed, restart index), so the result is deterministic.
VariationalResult run_variational(const QuboProblem& q,
                                  VariationalMethod method,
                                  const VariationalOptions& opts);

std::string method_name(VariationalMethod m);

}  // namespace ged
