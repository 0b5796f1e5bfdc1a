#include "ged/qsim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "ged/errors.hpp"
#include "ged/rng.hpp"

namespace ged {

int circuit_depth(const ParamCircuit& c) {
  std::vector<int> frontier(c.num_qubits, 0);
  int depth = 0;
  for (const Gate& g : c.gates) {
    int d = frontier[g.q1];
    if (g.q2 >= 0) d = std::max(d, frontier[g.q2]);
    ++d;
    frontier[g.q1] = d;
    if (g.q2 >= 0) frontier[g.q2] = d;
    depth = std::max(depth, d);
  }
  return depth;
}

double Statevector::norm2() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return s;
}

namespace {

using cd = std::complex<double>;

// Applies the 2x2 matrix [[m00, m01], [m10, m11]] to the target qubit.
void apply_single(std::vector<cd>& amp, int target, cd m00, cd m01, cd m10,
                  cd m11) {
  const uint64_t bit = uint64_t{1} << target;
  const uint64_t size = amp.size();
  for (uint64_t base = 0; base < size; ++base) {
    if (base & bit) continue;
    const cd a0 = amp[base];
    const cd a1 = amp[base | bit];
    amp[base] = m00 * a0 + m01 * a1;
    amp[base | bit] = m10 * a0 + m11 * a1;
  }
}

void apply_gate(std::vector<cd>& amp, const Gate& g, double angle) {
  constexpr cd I{0.0, 1.0};
  switch (g.kind) {
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      apply_single(amp, g.q1, r, r, r, -r);
      break;
    }
    case GateKind::RX: {
      const double c = std::cos(angle / 2), s = std::sin(angle / 2);
      apply_single(amp, g.q1, c, -I * s, -I * s, c);
      break;
    }
    case GateKind::RY: {
      const double c = std::cos(angle / 2), s = std::sin(angle / 2);
      apply_single(amp, g.q1, c, -s, s, c);
      break;
    }
    case GateKind::RZ: {
      const cd p0 = std::exp(-I * (angle / 2));
      const cd p1 = std::exp(I * (angle / 2));
      const uint64_t bit = uint64_t{1} << g.q1;
      for (uint64_t b = 0; b < amp.size(); ++b) amp[b] *= (b & bit) ? p1 : p0;
      break;
    }
    case GateKind::RZZ: {
      // exp(-i angle/2 Z Z): phase by the product of Z eigenvalues.
      const cd same = std::exp(-I * (angle / 2));
      const cd diff = std::exp(I * (angle / 2));
      const uint64_t b1 = uint64_t{1} << g.q1;
      const uint64_t b2 = uint64_t{1} << g.q2;
      for (uint64_t b = 0; b < amp.size(); ++b) {
        const bool z1 = b & b1, z2 = b & b2;
        amp[b] *= (z1 == z2) ? same : diff;
      }
      break;
    }
    case GateKind::CX: {
      const uint64_t cbit = uint64_t{1} << g.q1;
      const uint64_t tbit = uint64_t{1} << g.q2;
      for (uint64_t b = 0; b < amp.size(); ++b)
        if ((b & cbit) && !(b & tbit)) std::swap(amp[b], amp[b | tbit]);
      break;
    }
  }
}

}  // namespace

Statevector simulate(const ParamCircuit& c, const std::vector<double>& theta,
                     int max_qubits) {
  if (static_cast<int>(theta.size()) != c.num_params)
    throw ParamError("simulate: parameter vector length mismatch");
  if (max_qubits > kMaxQubitCap)
    throw CapacityError("simulate: qubit cap above " +
                        std::to_string(kMaxQubitCap) + " is not supported");
  if (c.num_qubits > max_qubits)
    throw CapacityError(
        "simulate: " + std::to_string(c.num_qubits) +
        " qubits exceeds the cap of " + std::to_string(max_qubits) +
        " (raise --max-qubits up to 25 to accept the memory cost)");

  Statevector psi;
  psi.num_qubits = c.num_qubits;
  psi.amplitudes.assign(uint64_t{1} << c.num_qubits, cd{0.0, 0.0});
  psi.amplitudes[0] = 1.0;
  for (const Gate& g : c.gates) {
    const double angle =
        g.param_slot >= 0 ? g.scale * theta[g.param_slot] : g.angle;
    apply_gate(psi.amplitudes, g, angle);
  }
  return psi;
}

DiagonalHamiltonian diagonal_from_ising(const IsingModel& m) {
  DiagonalHamiltonian h;
  h.num_qubits = m.num_spins;
  const uint64_t size = uint64_t{1} << m.num_spins;
  h.energies.resize(size);

  std::vector<std::vector<std::pair<int, double>>> adj(m.num_spins);
  for (const auto& [pair, j] : m.couplings) {
    adj[pair.first].emplace_back(pair.second, j);
    adj[pair.second].emplace_back(pair.first, j);
  }

  // Gray-code walk: consecutive codes differ in one spin, so each energy is
  // an O(degree) update instead of a full re-evaluation.
  std::vector<int> s(m.num_spins, -1);
  double e = ising_energy(m, s);
  uint64_t code = 0;
  for (uint64_t t = 0;; ++t) {
    h.energies[code] = e;
    if (t + 1 == size) break;
    const int flip = std::countr_zero(t + 1);
    double local = m.h[flip];
    for (const auto& [other, j] : adj[flip]) local += j * s[other];
    e += 2.0 * s[flip] * local;
    s[flip] = -s[flip];
    code ^= uint64_t{1} << flip;
  }

  h.min_energy = h.energies[0];
  h.max_energy = h.energies[0];
  double sum = 0.0;
  for (double v : h.energies) {
    h.min_energy = std::min(h.min_energy, v);
    h.max_energy = std::max(h.max_energy, v);
    sum += v;
  }
  h.mean_energy = sum / static_cast<double>(size);
  return h;
}

double expectation(const Statevector& psi, const DiagonalHamiltonian& h) {
  if (psi.amplitudes.size() != h.energies.size())
    throw ParamError("expectation: dimension mismatch");
  double e = 0.0;
  for (size_t b = 0; b < h.energies.size(); ++b)
    e += std::norm(psi.amplitudes[b]) * h.energies[b];
  return e;
}

ParamCircuit build_vqe_ansatz(int num_qubits, int p,
                              bool final_rotation_layer) {
  if (num_qubits < 1 || p < 1)
    throw ParamError("build_vqe_ansatz: need num_qubits >= 1 and p >= 1");
  ParamCircuit c;
  c.num_qubits = num_qubits;
  int slot = 0;
  auto rotation_layer = [&] {
    for (int q = 0; q < num_qubits; ++q) {
      c.gates.push_back(Gate::ry(q, slot++));
      c.gates.push_back(Gate::ry(q, slot++));
    }
  };
  for (int rep = 0; rep < p; ++rep) {
    rotation_layer();
    for (int j = 0; j < num_qubits; ++j)
      for (int k = j + 1; k < num_qubits; ++k)
        c.gates.push_back(Gate::cx(j, k));
  }
  if (final_rotation_layer) rotation_layer();
  c.num_params = slot;
  return c;
}

ParamCircuit build_qaoa_circuit(const IsingModel& m, int p) {
  if (m.num_spins < 1 || p < 1)
    throw ParamError("build_qaoa_circuit: need spins >= 1 and p >= 1");
  ParamCircuit c;
  c.num_qubits = m.num_spins;
  c.num_params = 2 * p;
  for (int q = 0; q < m.num_spins; ++q) c.gates.push_back(Gate::h(q));
  // Energy as a spin polynomial: sum_l c_l s_l + sum_{l<m} c_lm s_l s_m
  // with c_l = -h_l and c_lm = -J_lm. exp(-i gamma * c * s-product) is an
  // RZ/RZZ rotation of angle 2*gamma*c under our bit-to-spin convention.
  for (int rep = 0; rep < p; ++rep) {
    const int gamma_slot = 2 * rep;
    const int beta_slot = 2 * rep + 1;
    for (int q = 0; q < m.num_spins; ++q)
      if (m.h[q] != 0.0) c.gates.push_back(Gate::rz(q, gamma_slot, 2.0 * m.h[q]));
    for (const auto& [pair, j] : m.couplings)
      if (j != 0.0)
        c.gates.push_back(
            Gate::rzz(pair.first, pair.second, gamma_slot, -2.0 * j));
    for (int q = 0; q < m.num_spins; ++q)
      c.gates.push_back(Gate::rx(q, beta_slot));
  }
  return c;
}

std::map<uint64_t, int> sample(const Statevector& psi, int shots,
                               uint64_t seed) {
  if (shots < 0) throw ParamError("sample: negative shot count");
  std::vector<double> cdf(psi.amplitudes.size());
  double acc = 0.0;
  for (size_t b = 0; b < psi.amplitudes.size(); ++b) {
    acc += std::norm(psi.amplitudes[b]);
    cdf[b] = acc;
  }
  Rng rng(seed);
  std::map<uint64_t, int> counts;
  for (int s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const uint64_t idx = it == cdf.end() ? cdf.size() - 1
                                         : static_cast<uint64_t>(
                                               it - cdf.begin());
    ++counts[idx];
  }
  return counts;
}

}  // namespace ged
