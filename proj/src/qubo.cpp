#include "ged/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ged/errors.hpp"

namespace ged {

QuboProblem::QuboProblem(int num_vars, double offset, double alpha,
                         double beta, int n, int k)
    : num_vars_(num_vars), offset_(offset), alpha_(alpha), beta_(beta), n_(n),
      k_(k) {
  if (num_vars < 0) throw ParamError("qubo: negative variable count");
  coeffs_.assign(static_cast<size_t>(num_vars) * num_vars, 0.0);
}

double QuboProblem::coeff(int l, int lp) const {
  return coeffs_[static_cast<size_t>(l) * num_vars_ + lp];
}

void QuboProblem::add_coeff(int l, int lp, double value) {
  if (l > lp) std::swap(l, lp);
  coeffs_[static_cast<size_t>(l) * num_vars_ + lp] += value;
}

double QuboProblem::pair_coeff(int l, int m) const {
  if (l == m) return 0.0;
  if (l > m) std::swap(l, m);
  return coeffs_[static_cast<size_t>(l) * num_vars_ + m];
}

double QuboProblem::max_abs_coeff() const {
  double best = 0.0;
  for (double c : coeffs_) best = std::max(best, std::abs(c));
  return best;
}

QuboProblem build_qubo(const Graph& g1, const Graph& g2, double alpha,
                       double beta) {
  const int n = g1.vertex_count();
  if (g2.vertex_count() != n)
    throw ParamError("build_qubo: graphs must be padded to equal size first");
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw ParamError("build_qubo: alpha and beta must be positive");

  QuboProblem q(n * n, 2.0 * n * alpha, alpha, beta, n, 0);
  q.set_graphs(g1, g2);

  // Row and column penalties, squares expanded with x^2 = x: each variable
  // picks up -alpha from its row and -alpha from its column; each distinct
  // pair sharing a row or column gets +2*alpha.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int l = i * n + j;
      q.add_coeff(l, l, -2.0 * alpha);
      for (int jp = j + 1; jp < n; ++jp)
        q.add_coeff(l, i * n + jp, 2.0 * alpha);  // same row
      for (int ip = i + 1; ip < n; ++ip)
        q.add_coeff(l, ip * n + j, 2.0 * alpha);  // same column
    }
  }

  // Edge-mismatch terms. For an edge {i,j} of g1 and every ordered target
  // pair (ip, jp) that is not an edge of g2 (self-pairs included, graphs
  // are simple), mapping i->ip and j->jp costs beta. Symmetrically for
  // edges of g2 against non-edges of g1.
  for (const auto& [i, j] : g1.edges())
    for (int ip = 0; ip < n; ++ip)
      for (int jp = 0; jp < n; ++jp)
        if (!g2.has_edge(ip, jp)) q.add_coeff(i * n + ip, j * n + jp, beta);
  for (const auto& [ip, jp] : g2.edges())
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!g1.has_edge(i, j)) q.add_coeff(i * n + ip, j * n + jp, beta);

  return q;
}

QuboProblem build_ged_problem(const Graph& g1, const Graph& g2, double alpha,
                              double beta) {
  const int target = std::max(g1.vertex_count(), g2.vertex_count());
  auto [p1, k1] = pad_to(g1, target);
  auto [p2, k2] = pad_to(g2, target);
  QuboProblem q = build_qubo(p1, p2, alpha, beta);
  q.set_padding(k1 + k2);
  return q;
}

double energy(const QuboProblem& q, const Assignment& x) {
  if (x.size() != q.num_vars())
    throw ParamError("energy: assignment length mismatch");
  double e = q.offset();
  for (int l = 0; l < q.num_vars(); ++l) {
    if (!x.bits[l]) continue;
    e += q.coeff(l, l);
    for (int m = l + 1; m < q.num_vars(); ++m)
      if (x.bits[m]) e += q.coeff(l, m);
  }
  return e;
}

double hard_penalty(const Graph& g1, const Graph& g2, const Assignment& x) {
  const int n = g1.vertex_count();
  if (g2.vertex_count() != n || x.size() != n * n)
    throw ParamError("hard_penalty: size mismatch");
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    int row = 0;
    for (int j = 0; j < n; ++j) row += x.bits[i * n + j];
    total += (1.0 - row) * (1.0 - row);
  }
  for (int j = 0; j < n; ++j) {
    int col = 0;
    for (int i = 0; i < n; ++i) col += x.bits[i * n + j];
    total += (1.0 - col) * (1.0 - col);
  }
  return total;
}

double soft_penalty(const Graph& g1, const Graph& g2, const Assignment& x) {
  const int n = g1.vertex_count();
  if (g2.vertex_count() != n || x.size() != n * n)
    throw ParamError("soft_penalty: size mismatch");
  double total = 0.0;
  for (const auto& [i, j] : g1.edges())
    for (int ip = 0; ip < n; ++ip)
      for (int jp = 0; jp < n; ++jp)
        if (!g2.has_edge(ip, jp))
          total += x.bits[i * n + ip] * x.bits[j * n + jp];
  for (const auto& [ip, jp] : g2.edges())
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!g1.has_edge(i, j))
          total += x.bits[i * n + ip] * x.bits[j * n + jp];
  return total;
}

std::optional<Bijection> decode(const Assignment& x, int n) {
  if (x.size() != n * n) return std::nullopt;
  Bijection pi;
  pi.mapping.assign(n, -1);
  std::vector<uint8_t> used(n, 0);
  for (int i = 0; i < n; ++i) {
    int count = 0, image = -1;
    for (int j = 0; j < n; ++j) {
      if (x.bits[i * n + j]) {
        ++count;
        image = j;
      }
    }
    if (count != 1 || used[image]) return std::nullopt;
    used[image] = 1;
    pi.mapping[i] = image;
  }
  return pi;
}

std::optional<int> ged_from_solution(const QuboProblem& q,
                                     const Assignment& x) {
  auto pi = decode(x, q.n());
  if (!pi) return std::nullopt;
  if (q.graphs())
    return bijection_cost(q.graphs()->first, q.graphs()->second, *pi) +
           q.padding();
  // Loaded from file: a valid solution has zero hard penalty, so the
  // bijection cost is exactly energy/beta.
  return static_cast<int>(std::lround(energy(q, x) / q.beta())) + q.padding();
}

IsingModel to_ising(const QuboProblem& q) {
  const int nv = q.num_vars();
  IsingModel m;
  m.num_spins = nv;
  m.h.assign(nv, 0.0);
  m.offset = q.offset();
  for (int l = 0; l < nv; ++l) {
    const double d = q.coeff(l, l);
    m.h[l] -= d / 2.0;
    m.offset += d / 2.0;
    for (int lp = l + 1; lp < nv; ++lp) {
      const double c = q.coeff(l, lp);
      if (c == 0.0) continue;
      m.couplings[{l, lp}] = -c / 4.0;
      m.h[l] -= c / 4.0;
      m.h[lp] -= c / 4.0;
      m.offset += c / 4.0;
    }
  }
  return m;
}

double ising_energy(const IsingModel& m, const std::vector<int>& spins) {
  if (static_cast<int>(spins.size()) != m.num_spins)
    throw ParamError("ising_energy: spin vector length mismatch");
  double e = m.offset;
  for (int i = 0; i < m.num_spins; ++i) e -= m.h[i] * spins[i];
  for (const auto& [pair, j] : m.couplings)
    e -= j * spins[pair.first] * spins[pair.second];
  return e;
}

std::vector<int> spins_from_bits(uint64_t basis, int num_spins) {
  std::vector<int> s(num_spins);
  for (int i = 0; i < num_spins; ++i) s[i] = (basis >> i) & 1 ? 1 : -1;
  return s;
}

Assignment assignment_from_bits(uint64_t basis, int num_vars) {
  Assignment x;
  x.bits.resize(num_vars);
  for (int i = 0; i < num_vars; ++i)
    x.bits[i] = static_cast<uint8_t>((basis >> i) & 1);
  return x;
}

static std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string qubo_to_text(const QuboProblem& q) {
  std::ostringstream out;
  out << "# qubo num_vars=" << q.num_vars() << " offset="
      << fmt_double(q.offset()) << " alpha=" << fmt_double(q.alpha())
      << " beta=" << fmt_double(q.beta()) << " k=" << q.padding() << "\n";
  for (int l = 0; l < q.num_vars(); ++l)
    for (int lp = l; lp < q.num_vars(); ++lp)
      if (q.coeff(l, lp) != 0.0)
        out << l << " " << lp << " " << fmt_double(q.coeff(l, lp)) << "\n";
  return out.str();
}

QuboProblem qubo_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("# qubo", 0) != 0)
    throw ParamError("qubo file: missing '# qubo' header");

  auto field = [&line](const std::string& key) {
    auto pos = line.find(key + "=");
    if (pos == std::string::npos)
      throw ParamError("qubo file: header missing field " + key);
    return line.substr(pos + key.size() + 1);
  };
  const int num_vars = std::stoi(field("num_vars"));
  const double offset = std::stod(field("offset"));
  const double alpha = std::stod(field("alpha"));
  const double beta = std::stod(field("beta"));
  const int k = std::stoi(field("k"));
  const int n = static_cast<int>(std::lround(std::sqrt(num_vars)));
  QuboProblem q(num_vars, offset, alpha, beta, n, k);

  int l, lp;
  double value;
  while (in >> l >> lp >> value) {
    if (l < 0 || lp < l || lp >= num_vars)
      throw ParamError("qubo file: bad entry indices");
    q.add_coeff(l, lp, value);
  }
  return q;
}

void write_qubo(const QuboProblem& q, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParamError("cannot open for writing: " + path);
  out << qubo_to_text(q);
}

QuboProblem read_qubo(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParamError("cannot open qubo file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return qubo_from_text(buf.str());
}

std::string ising_to_text(const IsingModel& m) {
  std::ostringstream out;
  out << "# ising num_spins=" << m.num_spins << " offset="
      << fmt_double(m.offset) << "\n";
  for (int i = 0; i < m.num_spins; ++i)
    if (m.h[i] != 0.0) out << "h " << i << " " << fmt_double(m.h[i]) << "\n";
  for (const auto& [pair, j] : m.couplings)
    if (j != 0.0)
      out << "J " << pair.first << " " << pair.second << " " << fmt_double(j)
          << "\n";
  return out.str();
}

}  // namespace ged
