#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "ged/qubo.hpp"

namespace ged {

inline constexpr int kDefaultQubitCap = 16;
inline constexpr int kMaxQubitCap = 25;  // ~0.5 GiB statevector

enum class GateKind { H, RX, RY, RZ, RZZ, CX };

/// One gate of a parameterized circuit. Rotation angles are either a
/// constant or scale * theta[param_slot]; H and CX carry no angle.
struct Gate {
  GateKind kind;
  int q1 = 0;
  int q2 = -1;         // second qubit for RZZ / CX target
  int param_slot = -1; // -1 means constant angle
  double angle = 0.0;  // constant angle when param_slot < 0
  double scale = 1.0;  // multiplies theta[param_slot]

  static Gate h(int q) { return {GateKind::H, q, -1, -1, 0.0, 1.0}; }
  static Gate cx(int control, int target) {
    return {GateKind::CX, control, target, -1, 0.0, 1.0};
  }
  static Gate rx(int q, int slot, double scale = 1.0) {
    return {GateKind::RX, q, -1, slot, 0.0, scale};
  }
  static Gate ry(int q, int slot, double scale = 1.0) {
    return {GateKind::RY, q, -1, slot, 0.0, scale};
  }
  static Gate ry_const(int q, double angle) {
    return {GateKind::RY, q, -1, -1, angle, 1.0};
  }
  static Gate rx_const(int q, double angle) {
    return {GateKind::RX, q, -1, -1, angle, 1.0};
  }
  static Gate rz(int q, int slot, double scale) {
    return {GateKind::RZ, q, -1, slot, 0.0, scale};
  }
  static Gate rzz(int qa, int qb, int slot, double scale) {
    return {GateKind::RZZ, qa, qb, slot, 0.0, scale};
  }
};

struct ParamCircuit {
  int num_qubits = 0;
  int num_params = 0;
  std::vector<Gate> gates;
};

/// Longest path in the gate dependency DAG (gates touching a common qubit
/// are ordered).
int circuit_depth(const ParamCircuit& c);
inline int circuit_size(const ParamCircuit& c) {
  return static_cast<int>(c.gates.size());
}

/// Dense amplitude vector over 2^num_qubits little-endian basis states
/// (bit l of the index is qubit l).
struct Statevector {
  int num_qubits = 0;
  std::vector<std::complex<double>> amplitudes;

  double norm2() const;
};

/// Runs the circuit on |0...0>. Gate semantics are the standard rotation
/// conventions, e.g. RY(t) = exp(-i t Y / 2). Guarded by max_qubits
/// (default 16; up to 25 when explicitly raised).
Statevector simulate(const ParamCircuit& c, const std::vector<double>& theta,
                     int max_qubits = kDefaultQubitCap);

/// Energies of all computational basis states. Bit l set means spin
/// s_l = +1 (equivalently x_l = 1).
struct DiagonalHamiltonian {
  std::vector<double> energies;

  int num_qubits = 0;
  double min_energy = 0.0;
  double max_energy = 0.0;
  double mean_energy = 0.0;
};

DiagonalHamiltonian diagonal_from_ising(const IsingModel& m);

/// <psi| H |psi> = sum_b |a_b|^2 energies[b].
double expectation(const Statevector& psi, const DiagonalHamiltonian& h);

/// Hardware-efficient ansatz: per repetition, two RY rotations per qubit
/// (distinct parameter slots) followed by a CX ladder over all ordered
/// pairs control j < target k. The optional final layer appends one more
/// double-RY block, giving 2*(p+1)*num_qubits parameters instead of
/// 2*p*num_qubits.
ParamCircuit build_vqe_ansatz(int num_qubits, int p,
                              bool final_rotation_layer = true);

/// Alternating-operator ansatz: H on every qubit, then p repetitions of a
/// phase layer (RZ with angle 2*gamma*c_i per linear term, RZZ with angle
/// 2*gamma*c_ij per coupling, where c are the coefficients of the diagonal
/// Hamiltonian's spin expansion) followed by an RX(beta) mixer on every
/// qubit. Parameter slots are ordered (gamma_1, beta_1, ..., gamma_p,
/// beta_p), so num_params = 2p.
ParamCircuit build_qaoa_circuit(const IsingModel& m, int p);

/// Born-rule sampling: counts per basis index, summing to shots.
std::map<uint64_t, int> sample(const Statevector& psi, int shots,
                               uint64_t seed);

}  // namespace ged
