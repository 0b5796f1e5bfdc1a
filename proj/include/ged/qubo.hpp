#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ged/graph.hpp"

namespace ged {

/// Binary assignment of the QUBO variables, one entry in {0,1} per variable.
/// Variable l = i*n + j stands for "vertex i of the first graph is mapped to
/// vertex j of the second".
struct Assignment {
  std::vector<uint8_t> bits;

  int size() const { return static_cast<int>(bits.size()); }
};

/// QUBO encoding of a GED instance: minimize x^T Q x + offset over binary x.
/// Q is stored strictly upper-triangular plus diagonal; the offset restores
/// the constants dropped when the squared row/column penalties are expanded,
/// so the energy of any assignment equals alpha*hard + beta*soft exactly.
class QuboProblem {
 public:
  QuboProblem() = default;
  QuboProblem(int num_vars, double offset, double alpha, double beta, int n,
              int k);

  int num_vars() const { return num_vars_; }
  double offset() const { return offset_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  int n() const { return n_; }
  int padding() const { return k_; }

  double coeff(int l, int lp) const;  // requires l <= lp
  void add_coeff(int l, int lp, double value);

  /// Symmetric view used by solvers: coeff(min(l,m), max(l,m)), 0 on l == m.
  double pair_coeff(int l, int m) const;

  /// Graphs the problem was built from; empty when loaded from a file.
  const std::optional<std::pair<Graph, Graph>>& graphs() const {
    return graphs_;
  }
  void set_graphs(Graph g1, Graph g2) {
    graphs_ = std::make_pair(std::move(g1), std::move(g2));
  }
  void set_padding(int k) { k_ = k; }

  double max_abs_coeff() const;

 private:
  int num_vars_ = 0;
  double offset_ = 0.0;
  double alpha_ = 0.0;
  double beta_ = 0.0;
  int n_ = 0;
  int k_ = 0;
  std::vector<double> coeffs_;  // dense num_vars x num_vars, upper half used
  std::optional<std::pair<Graph, Graph>> graphs_;
};

/// Ising reformulation under x = (1+s)/2: energy is
/// -sum_{i<j} J_ij s_i s_j - sum_i h_i s_i + offset.
struct IsingModel {
  int num_spins = 0;
  std::vector<double> h;
  std::map<std::pair<int, int>, double> couplings;  // keys (i, j) with i < j
  double offset = 0.0;
};

/// Builds the QUBO for a pair of equal-size graphs. Hard constraint: each
/// row and column of the n x n variable grid must sum to one (penalty
/// weight alpha). Soft constraint: weight beta per edge mismatch.
QuboProblem build_qubo(const Graph& g1, const Graph& g2, double alpha,
                       double beta);

/// Pads the smaller graph with isolated vertices, builds the QUBO, and
/// records the padding count k so decoded distances include it.
QuboProblem build_ged_problem(const Graph& g1, const Graph& g2, double alpha,
                              double beta);

/// x^T Q x + offset.
double energy(const QuboProblem& q, const Assignment& x);

/// Reference evaluation of the row/column penalty, independent of the
/// matrix: sum over rows and columns of (1 - sum of entries)^2. Zero iff x
/// encodes a bijection.
double hard_penalty(const Graph& g1, const Graph& g2, const Assignment& x);

/// Reference evaluation of the edge-mismatch penalty: for every edge of g1,
/// counts mapped images missing in g2, and symmetrically for edges of g2.
double soft_penalty(const Graph& g1, const Graph& g2, const Assignment& x);

/// The bijection encoded by x if its n x n reshaping is a permutation
/// matrix, nullopt otherwise.
std::optional<Bijection> decode(const Assignment& x, int n);

/// GED value read off a valid solution: bijection cost plus the padding k.
/// nullopt when x does not decode to a bijection.
std::optional<int> ged_from_solution(const QuboProblem& q,
                                     const Assignment& x);

IsingModel to_ising(const QuboProblem& q);

double ising_energy(const IsingModel& m, const std::vector<int>& spins);

/// Spins for a basis index: bit l set means s_l = +1 (i.e. x_l = 1).
std::vector<int> spins_from_bits(uint64_t basis, int num_spins);

Assignment assignment_from_bits(uint64_t basis, int num_vars);

/// Text export: header line
///   # qubo num_vars=<q> offset=<f> alpha=<f> beta=<f> k=<k>
/// followed by one "l lp value" line per nonzero entry (15+ significant
/// digits). The Ising export mirrors it with "h i value" and "J i j value"
/// lines.
std::string qubo_to_text(const QuboProblem& q);
QuboProblem qubo_from_text(const std::string& text);
void write_qubo(const QuboProblem& q, const std::string& path);
QuboProblem read_qubo(const std::string& path);
std::string ising_to_text(const IsingModel& m);

}  // namespace ged
