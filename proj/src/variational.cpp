#include "ged/variational.hpp"

#include <cmath>
#include <limits>

#include "ged/errors.hpp"
#include "ged/optimize.hpp"
#include "ged/rng.hpp"

namespace ged {

std::string method_name(VariationalMethod m) {
  return m == VariationalMethod::VQE ? "VQE" : "QAOA";
}

VariationalResult run_variational(const QuboProblem& q,
                                  VariationalMethod method,
                                  const VariationalOptions& opts) {
  if (opts.restarts < 1) throw ParamError("run_variational: restarts >= 1");
  if (opts.shots < 1) throw ParamError("run_variational: shots >= 1");
  const int num_qubits = q.num_vars();
  if (num_qubits > opts.max_qubits)
    throw CapacityError(
        "run_variational: problem needs " + std::to_string(num_qubits) +
        " qubits (n^2), above the cap of " + std::to_string(opts.max_qubits) +
        "; reduce the graph size or raise --max-qubits (<= 25)");

  const IsingModel ising = to_ising(q);
  const DiagonalHamiltonian ham = diagonal_from_ising(ising);
  const ParamCircuit circuit =
      method == VariationalMethod::VQE
          ? build_vqe_ansatz(num_qubits, opts.p, opts.final_rotation_layer)
          : build_qaoa_circuit(ising, opts.p);

  const int budget =
      opts.budget > 0 ? opts.budget : 500 * std::max(1, circuit.num_params);

  VariationalResult out;
  out.num_qubits = num_qubits;
  out.num_params = circuit.num_params;
  out.depth = circuit_depth(circuit);
  out.size = circuit_size(circuit);
  out.best_energy = std::numeric_limits<double>::infinity();
  out.best_valid_energy = std::numeric_limits<double>::infinity();

  for (int r = 0; r < opts.restarts; ++r) {
    Rng rng(derive_seed(opts.seed, r));
    std::vector<double> theta0(circuit.num_params);
    for (double& t : theta0) t = rng.uniform(-M_PI, M_PI);

    auto objective = [&](const std::vector<double>& theta) {
      return expectation(simulate(circuit, theta, opts.max_qubits), ham);
    };
    const OptimizeResult opt = minimize(objective, theta0, budget, opts.tol);

    const Statevector psi =
        simulate(circuit, opt.best_point, opts.max_qubits);
    const auto counts = sample(psi, opts.shots, derive_seed(opts.seed, r, 1));

    double restart_best = std::numeric_limits<double>::infinity();
    for (const auto& [basis, count] : counts) {
      (void)count;
      const Assignment x = assignment_from_bits(basis, num_qubits);
      const double e = energy(q, x);
      restart_best = std::min(restart_best, e);
      if (e < out.best_energy) {
        out.best_energy = e;
        out.best = x;
      }
      if (e < out.best_valid_energy && decode(x, q.n())) {
        out.best_valid_energy = e;
        out.best_valid = x;
      }
    }
    out.total_evaluations += opt.evaluations;
    out.trace.push_back({r, opt.best_value, restart_best, opt.evaluations});
  }

  if (out.best_valid) out.decoded_ged = ged_from_solution(q, *out.best_valid);
  return out;
}

}  // namespace ged
