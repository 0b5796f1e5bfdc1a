#pragma once

// Shared instances and independent oracles used across the test suites.
// The two reference instances are small cycle graphs with known distances,
// checked by hand and by the exhaustive oracles below.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "ged/graph.hpp"
#include "ged/qubo.hpp"

namespace fixtures {

// 5-cycle 0-1-2-3-4-0.
inline ged::Graph cycle5() {
  return ged::Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
}

// 4-cycle 0-1-2-3-0; distance 4 from cycle5 (one edge insert, two edge
// deletes, one vertex delete).
inline ged::Graph cycle4() {
  return ged::Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

// The same 4-cycle embedded in 5 vertices with vertex 3 isolated
// (labels 0,1,2,4 form the cycle). Under the identity map against cycle5
// the mismatches are {2,3},{3,4} on one side and {2,4} on the other.
inline ged::Graph cycle4_padded_alt() {
  return ged::Graph(5, {{0, 1}, {1, 2}, {2, 4}, {0, 4}});
}

// cycle5 with edge {3,4} rewired to {2,4}; distance 2 from cycle5.
inline ged::Graph rewired_cycle5() {
  return ged::Graph(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {0, 4}});
}

// Triangle and 2-edge path on 3 vertices; distance 1.
inline ged::Graph triangle() { return ged::Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline ged::Graph path3() { return ged::Graph(3, {{0, 1}, {1, 2}}); }

inline ged::Assignment identity_assignment(int n) {
  ged::Assignment x;
  x.bits.assign(n * n, 0);
  for (int i = 0; i < n; ++i) x.bits[i * n + i] = 1;
  return x;
}

inline ged::Assignment permutation_assignment(const std::vector<int>& pi) {
  const int n = static_cast<int>(pi.size());
  ged::Assignment x;
  x.bits.assign(n * n, 0);
  for (int i = 0; i < n; ++i) x.bits[i * n + pi[i]] = 1;
  return x;
}

// Exhaustive sweep of all 2^num_vars assignments.
struct ExhaustiveMin {
  double energy;
  uint64_t argmin;
};

inline ExhaustiveMin exhaustive_min(const ged::QuboProblem& q) {
  ExhaustiveMin best{0.0, 0};
  const uint64_t total = uint64_t{1} << q.num_vars();
  for (uint64_t b = 0; b < total; ++b) {
    const double e = ged::energy(q, ged::assignment_from_bits(b, q.num_vars()));
    if (b == 0 || e < best.energy) best = {e, b};
  }
  return best;
}

// ---------------------------------------------------------------------
// Breadth-first search over edit operations (vertex insert/delete, edge
// insert/delete, deletes only where legal) as an oracle for the minimal
// mixed edit-path length. Graphs are compared up to isomorphism. Intended
// for inputs with at most 4 vertices; the walk allows one spare vertex
// beyond the larger input.
// ---------------------------------------------------------------------

namespace detail {

constexpr int kMaxVerts = 6;

inline int pair_bit(int u, int v) {
  if (u > v) std::swap(u, v);
  return u * kMaxVerts + v;  // sparse but simple fixed indexing
}

struct EditState {
  int n;
  uint64_t mask;
  bool operator<(const EditState& o) const {
    return n != o.n ? n < o.n : mask < o.mask;
  }
};

inline uint64_t relabel(uint64_t mask, int n,
                        const std::vector<int>& perm) {
  uint64_t out = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (mask & (uint64_t{1} << pair_bit(u, v)))
        out |= uint64_t{1} << pair_bit(perm[u], perm[v]);
  return out;
}

inline EditState canonical(EditState s) {
  std::vector<int> perm(s.n);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = relabel(s.mask, s.n, perm);
  while (std::next_permutation(perm.begin(), perm.end()))
    best = std::min(best, relabel(s.mask, s.n, perm));
  return {s.n, best};
}

inline EditState from_graph(const ged::Graph& g) {
  uint64_t mask = 0;
  for (const auto& [u, v] : g.edges())
    mask |= uint64_t{1} << pair_bit(u, v);
  return {g.vertex_count(), mask};
}

}  // namespace detail

inline int edit_path_oracle(const ged::Graph& g1, const ged::Graph& g2) {
  using detail::EditState;
  const int cap =
      std::min(detail::kMaxVerts,
               std::max(g1.vertex_count(), g2.vertex_count()) + 1);
  const EditState target = detail::canonical(detail::from_graph(g2));
  EditState start = detail::canonical(detail::from_graph(g1));

  std::map<EditState, int> dist;
  dist[start] = 0;
  std::queue<EditState> queue;
  queue.push(start);
  while (!queue.empty()) {
    const EditState cur = queue.front();
    queue.pop();
    const int d = dist[cur];
    if (cur.n == target.n && cur.mask == target.mask) return d;

    auto visit = [&](EditState next) {
      next = detail::canonical(next);
      if (!dist.count(next)) {
        dist[next] = d + 1;
        queue.push(next);
      }
    };

    if (cur.n < cap) visit({cur.n + 1, cur.mask});  // insert vertex
    for (int v = 0; v < cur.n; ++v) {               // delete isolated vertex
      if (cur.n == 1) break;
      bool isolated = true;
      for (int u = 0; u < cur.n && isolated; ++u)
        if (u != v && (cur.mask & (uint64_t{1} << detail::pair_bit(u, v))))
          isolated = false;
      if (!isolated) continue;
      std::vector<int> perm(cur.n);
      for (int u = 0; u < cur.n; ++u) perm[u] = u < v ? u : u - 1;
      perm[v] = cur.n - 1;  // moved out of range of the smaller graph
      uint64_t mask = 0;
      for (int a = 0; a < cur.n; ++a)
        for (int b = a + 1; b < cur.n; ++b)
          if ((cur.mask & (uint64_t{1} << detail::pair_bit(a, b))))
            mask |= uint64_t{1} << detail::pair_bit(perm[a], perm[b]);
      visit({cur.n - 1, mask});
    }
    for (int u = 0; u < cur.n; ++u)  // toggle edges
      for (int v = u + 1; v < cur.n; ++v)
        visit({cur.n, cur.mask ^ (uint64_t{1} << detail::pair_bit(u, v))});
  }
  return -1;  // unreachable for valid inputs
}

}  // namespace fixtures
