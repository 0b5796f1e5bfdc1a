#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ged {

/// Undirected simple graph on vertices 0..n-1. Edges are stored sorted with
/// u < v; duplicates collapse (set semantics). Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Throws ParamError on self-loops or out-of-range endpoints.
  Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Order-insensitive membership test; false for u == v or out of range.
  bool has_edge(int u, int v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<uint8_t> adj_;  // n*n dense lookup
};

/// Vertex bijection between two equal-size graphs: mapping[i] is the image
/// of vertex i.
struct Bijection {
  std::vector<int> mapping;

  int size() const { return static_cast<int>(mapping.size()); }
  bool is_permutation() const;
};

/// G(n,p) sampler: each of the n(n-1)/2 possible edges is present
/// independently with probability p. Deterministic for a fixed seed.
Graph random_graph(int n, double p, uint64_t seed);

/// Adds isolated vertices until the graph has target_n vertices.
/// Returns the padded graph and the number k of vertices added.
std::pair<Graph, int> pad_to(const Graph& g, int target_n);

/// Number of edges of g1 whose image under pi is missing in g2, plus the
/// number of edges of g2 whose preimage is missing in g1.
int bijection_cost(const Graph& g1, const Graph& g2, const Bijection& pi);

struct ExactGedResult {
  int value = 0;
  Bijection witness;  // on the padded vertex set, lexicographically smallest
  int padding = 0;    // k added to the smaller graph
};

/// Exact GED by factorial enumeration over all bijections of the padded
/// pair. Guarded at max_n vertices (default 10, ~3.6M permutations).
ExactGedResult exact_ged(const Graph& g1, const Graph& g2, int max_n = 10);

/// Graph file I/O. Canonical format is a JSON document with fields "n" and
/// "edges"; a line-oriented alternative (first line n, then one "u v" pair
/// per line) is accepted on read.
std::string to_json(const Graph& g);
Graph graph_from_json(const std::string& text);
void write_graph(const Graph& g, const std::string& path);
Graph read_graph(const std::string& path);

}  // namespace ged
