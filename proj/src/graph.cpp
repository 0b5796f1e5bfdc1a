#include "ged/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ged/errors.hpp"
#include "ged/rng.hpp"
#include "json.hpp"

namespace ged {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
    : n_(vertex_count) {
  if (n_ < 0) throw ParamError("graph: vertex count must be non-negative");
  adj_.assign(static_cast<size_t>(n_) * n_, 0);
  for (auto& [u, v] : edge_list) {
    if (u == v) throw ParamError("graph: self-loop " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_)
      throw ParamError("graph: edge endpoint out of range");
  }
  std::sort(edge_list.begin(), edge_list.end());
  edge_list.erase(std::unique(edge_list.begin(), edge_list.end()),
                  edge_list.end());
  edges_ = std::move(edge_list);
  for (const auto& [u, v] : edges_) {
    adj_[static_cast<size_t>(u) * n_ + v] = 1;
    adj_[static_cast<size_t>(v) * n_ + u] = 1;
  }
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  return adj_[static_cast<size_t>(u) * n_ + v] != 0;
}

bool Bijection::is_permutation() const {
  std::vector<uint8_t> seen(mapping.size(), 0);
  for (int m : mapping) {
    if (m < 0 || m >= size() || seen[m]) return false;
    seen[m] = 1;
  }
  return true;
}

Graph random_graph(int n, double p, uint64_t seed) {
  if (n < 1) throw ParamError("random_graph: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0))
    throw ParamError("random_graph: p must lie in [0,1]");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform() < p) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

std::pair<Graph, int> pad_to(const Graph& g, int target_n) {
  if (target_n < g.vertex_count())
    throw ParamError("pad_to: target vertex count below current size");
  int k = target_n - g.vertex_count();
  return {Graph(target_n, g.edges()), k};
}

int bijection_cost(const Graph& g1, const Graph& g2, const Bijection& pi) {
  const int n = g1.vertex_count();
  if (g2.vertex_count() != n || pi.size() != n)
    throw ParamError("bijection_cost: size mismatch");
  int cost = 0;
  for (const auto& [u, v] : g1.edges())
    if (!g2.has_edge(pi.mapping[u], pi.mapping[v])) ++cost;
  std::vector<int> inverse(n);
  for (int i = 0; i < n; ++i) inverse[pi.mapping[i]] = i;
  for (const auto& [u, v] : g2.edges())
    if (!g1.has_edge(inverse[u], inverse[v])) ++cost;
  return cost;
}

ExactGedResult exact_ged(const Graph& g1, const Graph& g2, int max_n) {
  if (g1.vertex_count() < 1 || g2.vertex_count() < 1)
    throw ParamError("exact_ged: graphs must be non-empty");
  const int n = std::max(g1.vertex_count(), g2.vertex_count());
  if (n > max_n)
    throw CapacityError("exact_ged: " + std::to_string(n) +
                        " vertices exceeds the factorial-oracle guard of " +
                        std::to_string(max_n));
  auto [a, ka] = pad_to(g1, n);
  auto [b, kb] = pad_to(g2, n);
  const int k = ka + kb;  // one of the two is zero

  Bijection pi;
  pi.mapping.resize(n);
  std::iota(pi.mapping.begin(), pi.mapping.end(), 0);

  ExactGedResult best;
  best.value = -1;
  best.padding = k;
  // next_permutation enumerates in lexicographic order, so keeping only
  // strict improvements yields the lexicographically smallest witness.
  do {
    int cost = bijection_cost(a, b, pi);
    if (best.value < 0 || cost < best.value - k) {
      best.value = cost + k;
      best.witness = pi;
    }
  } while (std::next_permutation(pi.mapping.begin(), pi.mapping.end()));
  return best;
}

std::string to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("n") || !j.contains("edges"))
    throw ParamError("graph json: missing 'n' or 'edges' field");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw ParamError("graph json: edge must be a two-element list");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(j["n"].get<int>(), std::move(edges));
}

static Graph graph_from_lines(const std::string& text) {
  std::istringstream in(text);
  int n;
  if (!(in >> n)) throw ParamError("graph file: expected vertex count");
  std::vector<std::pair<int, int>> edges;
  int u, v;
  while (in >> u >> v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

void write_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParamError("cannot open for writing: " + path);
  out << to_json(g) << "\n";
}

Graph read_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParamError("cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParamError("empty graph file: " + path);
  if (text[first] == '{') return graph_from_json(text);
  return graph_from_lines(text);
}

}  // namespace ged
