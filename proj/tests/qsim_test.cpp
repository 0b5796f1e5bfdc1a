#include "ged/qsim.hpp"

#include <cmath>
#include <complex>

#include "doctest.h"
#include "fixtures.hpp"
#include "ged/errors.hpp"
#include "ged/optimize.hpp"
#include "ged/rng.hpp"
#include "ged/variational.hpp"

using namespace ged;

namespace {

ParamCircuit random_circuit(int num_qubits, int num_gates, uint64_t seed) {
  Rng rng(seed);
  ParamCircuit c;
  c.num_qubits = num_qubits;
  for (int i = 0; i < num_gates; ++i) {
    const int kind = rng.uniform_int(6);
    const int q1 = rng.uniform_int(num_qubits);
    int q2 = rng.uniform_int(num_qubits);
    while (q2 == q1) q2 = rng.uniform_int(num_qubits);
    const double angle = rng.uniform(-3.0, 3.0);
    switch (kind) {
      case 0: c.gates.push_back(Gate::h(q1)); break;
      case 1: c.gates.push_back(Gate::rx_const(q1, angle)); break;
      case 2: c.gates.push_back(Gate::ry_const(q1, angle)); break;
      case 3: c.gates.push_back({GateKind::RZ, q1, -1, -1, angle, 1.0}); break;
      case 4: c.gates.push_back({GateKind::RZZ, q1, q2, -1, angle, 1.0}); break;
      default: c.gates.push_back(Gate::cx(q1, q2)); break;
    }
  }
  return c;
}

IsingModel reference_ising() {
  return to_ising(build_qubo(fixtures::triangle(), fixtures::path3(), 1.0, 0.1));
}

}  // namespace

TEST_CASE("single-gate states") {
  ParamCircuit h1;
  h1.num_qubits = 1;
  h1.gates.push_back(Gate::h(0));
  const auto psi = simulate(h1, {});
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(psi.amplitudes[0] - std::complex<double>(r, 0)) < 1e-12);
  CHECK(std::abs(psi.amplitudes[1] - std::complex<double>(r, 0)) < 1e-12);

  ParamCircuit ry;
  ry.num_qubits = 1;
  ry.num_params = 1;
  ry.gates.push_back(Gate::ry(0, 0));
  const auto flipped = simulate(ry, {M_PI});
  CHECK(std::abs(flipped.amplitudes[0]) < 1e-12);
  CHECK(std::abs(flipped.amplitudes[1] - 1.0) < 1e-12);
}

TEST_CASE("norm is preserved by random gate sequences") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const auto c = random_circuit(8, 60, seed);
    CHECK(std::abs(simulate(c, {}).norm2() - 1.0) < 1e-9);
  }
}

TEST_CASE("simulate validates parameters and the qubit cap") {
  ParamCircuit c;
  c.num_qubits = 1;
  c.num_params = 1;
  c.gates.push_back(Gate::ry(0, 0));
  CHECK_THROWS_AS(simulate(c, {}), ParamError);

  const auto wide = build_vqe_ansatz(17, 1, false);
  std::vector<double> theta(wide.num_params, 0.1);
  CHECK_THROWS_AS(simulate(wide, theta), CapacityError);
  CHECK_NOTHROW(simulate(wide, theta, 17));
  CHECK_THROWS_AS(simulate(wide, theta, 26), CapacityError);
}

TEST_CASE("diagonal energies match the binary energies exhaustively") {
  for (uint64_t seed = 0; seed < 4; ++seed) {
    const int n = 2 + static_cast<int>(seed % 2);  // 4 or 9 variables... n^2
    const Graph g1 = random_graph(n, 0.5, seed + 200);
    const Graph g2 = random_graph(n, 0.5, seed + 300);
    const QuboProblem q = build_qubo(g1, g2, 1.0, 0.1);
    const auto ham = diagonal_from_ising(to_ising(q));
    REQUIRE(ham.energies.size() == (uint64_t{1} << q.num_vars()));
    double worst = 0.0;
    for (uint64_t b = 0; b < ham.energies.size(); ++b) {
      const double eq = energy(q, assignment_from_bits(b, q.num_vars()));
      worst = std::max(worst, std::abs(eq - ham.energies[b]));
    }
    CHECK(worst < 1e-9);
    CHECK(ham.min_energy <= ham.max_energy);
  }
}

TEST_CASE("expectation") {
  DiagonalHamiltonian h;
  h.num_qubits = 2;
  h.energies = {0.5, -1.0, 2.0, 3.0};
  h.min_energy = -1.0;
  h.max_energy = 3.0;
  h.mean_energy = 1.125;

  Statevector basis;
  basis.num_qubits = 2;
  basis.amplitudes = {0, 0, 1, 0};
  CHECK(expectation(basis, h) == doctest::Approx(2.0));

  Statevector uniform;
  uniform.num_qubits = 2;
  uniform.amplitudes.assign(4, std::complex<double>(0.5, 0.0));
  CHECK(expectation(uniform, h) == doctest::Approx(1.125));

  // Brute-force term-by-term oracle on a random state.
  Rng rng(12);
  Statevector psi;
  psi.num_qubits = 2;
  double norm = 0.0;
  for (int i = 0; i < 4; ++i) {
    psi.amplitudes.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
    norm += std::norm(psi.amplitudes[i]);
  }
  for (auto& a : psi.amplitudes) a /= std::sqrt(norm);
  double direct = 0.0;
  for (int b = 0; b < 4; ++b)
    direct += std::norm(psi.amplitudes[b]) * h.energies[b];
  CHECK(std::abs(expectation(psi, h) - direct) < 1e-12);

  Statevector wrong;
  wrong.num_qubits = 1;
  wrong.amplitudes = {1, 0};
  CHECK_THROWS_AS(expectation(wrong, h), ParamError);
}

TEST_CASE("vqe ansatz shape") {
  const auto small = build_vqe_ansatz(3, 1, false);
  CHECK(small.num_params == 6);
  int cx = 0;
  for (const auto& g : small.gates)
    if (g.kind == GateKind::CX) ++cx;
  CHECK(cx == 3);
  // Two stacked RY rotations per qubit, then the pairwise ladder.
  CHECK(small.gates[0].kind == GateKind::RY);
  CHECK(small.gates[0].q1 == 0);
  CHECK(small.gates[1].q1 == 0);
  CHECK(small.gates[0].param_slot != small.gates[1].param_slot);

  CHECK(build_vqe_ansatz(9, 1, true).num_params == 36);
  CHECK(build_vqe_ansatz(9, 3, true).num_params == 72);
  CHECK(build_vqe_ansatz(16, 3, true).num_params == 128);
}

TEST_CASE("qaoa circuit shape and uniform case") {
  const IsingModel m = reference_ising();
  CHECK(build_qaoa_circuit(m, 1).num_params == 2);
  CHECK(build_qaoa_circuit(m, 3).num_params == 6);

  // Slots interleave per repetition: phase gates take slot 2r, mixers 2r+1.
  const auto layered = build_qaoa_circuit(m, 2);
  int rep = -1;
  for (const auto& g : layered.gates) {
    if (g.kind == GateKind::H) continue;
    if (g.kind == GateKind::RZ || g.kind == GateKind::RZZ) {
      if (g.param_slot % 2 != 0 || g.param_slot / 2 <= rep) rep = 100;  // fail
      CHECK(g.param_slot % 2 == 0);
    } else {
      REQUIRE(g.kind == GateKind::RX);
      CHECK(g.param_slot % 2 == 1);
      rep = std::max(rep, g.param_slot / 2);
    }
  }
  CHECK(rep == 1);

  IsingModel zero;
  zero.num_spins = 2;
  zero.h = {0.0, 0.0};
  const auto c = build_qaoa_circuit(zero, 1);
  const auto psi = simulate(c, {0.7, 1.3});
  for (const auto& a : psi.amplitudes)
    CHECK(std::norm(a) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("qaoa at the origin leaves the uniform superposition") {
  const IsingModel m = reference_ising();
  const auto ham = diagonal_from_ising(m);
  const auto psi = simulate(build_qaoa_circuit(m, 1), {0.0, 0.0});
  CHECK(std::abs(expectation(psi, ham) - ham.mean_energy) < 1e-9);
}

TEST_CASE("expectation stays within the spectrum bounds") {
  const IsingModel m = reference_ising();
  const auto ham = diagonal_from_ising(m);
  const auto c = build_qaoa_circuit(m, 1);
  Rng rng(61);
  for (int trial = 0; trial < 25; ++trial) {
    const auto psi =
        simulate(c, {rng.uniform(-M_PI, M_PI), rng.uniform(-M_PI, M_PI)});
    const double e = expectation(psi, ham);
    CHECK(e >= ham.min_energy - 1e-9);
    CHECK(e <= ham.max_energy + 1e-9);
  }
}

TEST_CASE("phase layer equals direct diagonal evolution") {
  const IsingModel m = reference_ising();
  const auto ham = diagonal_from_ising(m);
  const double gamma = 0.37;
  // Phase layer only (mixer angle zero). The constant offset in the
  // Hamiltonian is a global phase the gates do not produce, so it is
  // removed from the direct side as well.
  const auto psi = simulate(build_qaoa_circuit(m, 1), {gamma, 0.0});
  const double r = 1.0 / std::sqrt(static_cast<double>(ham.energies.size()));
  for (uint64_t b = 0; b < ham.energies.size(); ++b) {
    const std::complex<double> direct =
        r * std::exp(std::complex<double>(0, -gamma) *
                     (ham.energies[b] - m.offset));
    CHECK(std::abs(psi.amplitudes[b] - direct) < 1e-9);
  }
}

TEST_CASE("phase and mixer layers do not commute") {
  const IsingModel m = reference_ising();
  REQUIRE(!m.couplings.empty());
  const double gamma = 0.3, beta = 0.3;

  const auto phase_then_mixer = simulate(build_qaoa_circuit(m, 1), {gamma, beta});

  // Same gates with the mixer applied before the phase layer.
  ParamCircuit swapped;
  swapped.num_qubits = m.num_spins;
  swapped.num_params = 2;
  for (int q = 0; q < m.num_spins; ++q) swapped.gates.push_back(Gate::h(q));
  for (int q = 0; q < m.num_spins; ++q)
    swapped.gates.push_back(Gate::rx(q, 1));
  for (int q = 0; q < m.num_spins; ++q)
    if (m.h[q] != 0.0) swapped.gates.push_back(Gate::rz(q, 0, 2.0 * m.h[q]));
  for (const auto& [pair, j] : m.couplings)
    if (j != 0.0)
      swapped.gates.push_back(Gate::rzz(pair.first, pair.second, 0, -2.0 * j));
  const auto mixer_then_phase = simulate(swapped, {gamma, beta});

  double max_diff = 0.0;
  for (size_t b = 0; b < phase_then_mixer.amplitudes.size(); ++b)
    max_diff = std::max(max_diff,
                        std::abs(phase_then_mixer.amplitudes[b] -
                                 mixer_then_phase.amplitudes[b]));
  CHECK(max_diff > 1e-6);
}

TEST_CASE("minimize: one-dimensional rotation landscape") {
  ParamCircuit c;
  c.num_qubits = 1;
  c.num_params = 1;
  c.gates.push_back(Gate::ry(0, 0));
  DiagonalHamiltonian h;
  h.num_qubits = 1;
  h.energies = {0.0, -1.0};

  auto objective = [&](const std::vector<double>& theta) {
    return expectation(simulate(c, theta), h);
  };
  const auto result = minimize(objective, {0.1}, 100);
  CHECK(result.best_value <= -0.99);
  CHECK(result.evaluations <= 100);
}

TEST_CASE("minimize: budget of one returns the start point") {
  int calls = 0;
  auto f = [&](const std::vector<double>& x) {
    ++calls;
    return x[0] * x[0];
  };
  const auto result = minimize(f, {2.0}, 1);
  CHECK(calls == 1);
  CHECK(result.best_point == std::vector<double>{2.0});
  CHECK(result.best_value == doctest::Approx(4.0));
  CHECK_THROWS_AS(minimize(f, {2.0}, 0), ParamError);
}

TEST_CASE("minimize never regresses from the start for qaoa") {
  const Graph k1(1, {});
  const QuboProblem q = build_qubo(k1, k1, 1.0, 0.1);
  const IsingModel m = to_ising(q);
  const auto ham = diagonal_from_ising(m);
  const auto c = build_qaoa_circuit(m, 1);
  auto objective = [&](const std::vector<double>& theta) {
    return expectation(simulate(c, theta), ham);
  };
  const auto result = minimize(objective, {0.0, 0.0}, 200);
  CHECK(result.best_value <= ham.mean_energy + 1e-12);
}

TEST_CASE("sampling") {
  Statevector basis;
  basis.num_qubits = 2;
  basis.amplitudes = {0, 0, 0, 1};
  const auto counts = sample(basis, 100, 4);
  REQUIRE(counts.size() == 1);
  CHECK(counts.at(3) == 100);

  ParamCircuit c;
  c.num_qubits = 2;
  c.gates.push_back(Gate::h(0));
  c.gates.push_back(Gate::h(1));
  const auto uniform = simulate(c, {});
  const auto u_counts = sample(uniform, 100000, 99);
  // Binomial: mean 25000, sigma = sqrt(1e5 * 0.25 * 0.75) ~ 136.9.
  for (const auto& [idx, count] : u_counts) {
    (void)idx;
    CHECK(std::abs(count - 25000) < 5 * 136.9);
  }

  const auto again = sample(uniform, 100000, 99);
  CHECK(u_counts == again);
}

TEST_CASE("sampling matches the squared amplitudes (chi-square)") {
  const auto c = random_circuit(3, 40, 5);
  const auto psi = simulate(c, {});
  const int shots = 100000;
  const auto counts = sample(psi, shots, 321);
  double stat = 0.0;
  int buckets = 0;
  for (int b = 0; b < 8; ++b) {
    const double expected = shots * std::norm(psi.amplitudes[b]);
    if (expected < 1e-9) continue;
    ++buckets;
    const auto it = counts.find(b);
    const double observed = it == counts.end() ? 0.0 : it->second;
    stat += (observed - expected) * (observed - expected) / expected;
  }
  // Critical value of chi-square at p = 0.001 for 7 degrees of freedom.
  REQUIRE(buckets == 8);
  CHECK(stat < 24.322);
}

TEST_CASE("run_variational on tiny instances") {
  const Graph k1(1, {});
  const QuboProblem q1 = build_qubo(k1, k1, 1.0, 0.1);
  VariationalOptions opts;
  opts.p = 1;
  opts.restarts = 8;
  opts.shots = 64;
  opts.seed = 7;
  const auto qaoa = run_variational(q1, VariationalMethod::QAOA, opts);
  CHECK(qaoa.best_energy == doctest::Approx(0.0));
  CHECK(qaoa.decoded_ged == 0);
  CHECK(qaoa.num_params == 2);

  const Graph pair2 = random_graph(2, 0.7, 5);
  const QuboProblem q2 = build_qubo(pair2, pair2, 1.0, 0.1);
  for (const auto method : {VariationalMethod::VQE, VariationalMethod::QAOA}) {
    VariationalOptions o;
    o.restarts = 6;
    o.shots = 256;
    o.seed = 11;
    o.budget = 400;
    const auto r = run_variational(q2, method, o);
    REQUIRE(r.decoded_ged.has_value());
    CHECK(*r.decoded_ged == 0);
  }
}

TEST_CASE("run_variational is deterministic and respects the cap") {
  const Graph g = random_graph(2, 0.5, 3);
  const QuboProblem q = build_qubo(g, g, 1.0, 0.1);
  VariationalOptions opts;
  opts.restarts = 4;
  opts.shots = 128;
  opts.seed = 13;
  opts.budget = 200;
  const auto a = run_variational(q, VariationalMethod::QAOA, opts);
  const auto b = run_variational(q, VariationalMethod::QAOA, opts);
  CHECK(a.best_energy == b.best_energy);
  CHECK(a.best.bits == b.best.bits);

  const Graph big = random_graph(5, 0.5, 3);
  const QuboProblem qbig = build_qubo(big, big, 1.0, 0.1);
  VariationalOptions capped;
  capped.max_qubits = 16;
  CHECK_THROWS_AS(run_variational(qbig, VariationalMethod::QAOA, capped),
                  CapacityError);
}

TEST_CASE("circuit depth and size") {
  ParamCircuit empty;
  empty.num_qubits = 3;
  CHECK(circuit_depth(empty) == 0);
  CHECK(circuit_size(empty) == 0);

  ParamCircuit c;
  c.num_qubits = 2;
  c.gates.push_back(Gate::h(0));
  c.gates.push_back(Gate::h(1));   // parallel with the first
  c.gates.push_back(Gate::cx(0, 1));
  CHECK(circuit_depth(c) == 2);
  CHECK(circuit_size(c) == 3);
}
