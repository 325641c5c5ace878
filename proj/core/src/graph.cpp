// SPDX-License-Identifier: Apache-2.0
#include "connlap/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace connlap {

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::string name)
    : vertex_count_(vertex_count), edges_(std::move(edges)), name_(std::move(name)) {
  if (vertex_count_ < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= vertex_count_ || b >= vertex_count_)
      throw std::invalid_argument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") has a label outside 0.." +
                                  std::to_string(vertex_count_ - 1));
    if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) + "," +
                                std::to_string(dup->second) + ")");
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(vertex_count_, 0);
  for (const auto& [a, b] : edges_) {
    ++d[a];
    ++d[b];
  }
  return d;
}

int Graph::max_degree() const {
  const auto d = degrees();
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

std::vector<std::vector<Vertex>> Graph::adjacency_lists() const {
  std::vector<std::vector<Vertex>> adj(vertex_count_);
  for (const auto& [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

bool Graph::is_regular() const {
  const auto d = degrees();
  return std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) == d.end();
}

bool Graph::is_bipartite() const {
  const auto adj = adjacency_lists();
  std::vector<int> color(vertex_count_, -1);
  for (int s = 0; s < vertex_count_; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w : adj[u]) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          q.push(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::vector<int> Graph::component_labels() const {
  std::vector<int> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [a, b] : edges_) {
    int ra = find_root(parent, a), rb = find_root(parent, b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<int> label(vertex_count_, -1), root_label(vertex_count_, -1);
  int next = 0;
  for (int v = 0; v < vertex_count_; ++v) {
    const int r = find_root(parent, v);
    if (root_label[r] == -1) root_label[r] = next++;
    label[v] = root_label[r];
  }
  return label;
}

int Graph::component_count() const {
  const auto labels = component_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool Graph::is_connected() const { return vertex_count_ > 0 && component_count() == 1; }

int Graph::diameter() const {
  if (!is_connected()) return -1;
  const auto adj = adjacency_lists();
  int best = 0;
  std::vector<int> dist(vertex_count_);
  for (int s = 0; s < vertex_count_; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      best = std::max(best, dist[u]);
      for (int w : adj[u])
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
    }
  }
  return best;
}

std::vector<Graph> Graph::components() const {
  const auto labels = component_labels();
  const int k = component_count();
  std::vector<int> local(vertex_count_), sizes(k, 0);
  for (int v = 0; v < vertex_count_; ++v) local[v] = sizes[labels[v]]++;
  std::vector<std::vector<Edge>> edges(k);
  for (const auto& [a, b] : edges_) edges[labels[a]].emplace_back(local[a], local[b]);
  std::vector<Graph> out;
  out.reserve(k);
  for (int c = 0; c < k; ++c) out.emplace_back(sizes[c], std::move(edges[c]));
  return out;
}

FVector f_vector(const Graph& g) { return {g.vertex_count(), g.edge_count()}; }

FVector stirling_map(const FVector& f) { return {f.vertices + f.edges, 2 * f.edges}; }

Graph barycentric_refine(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("cannot refine an empty graph");
  const int v = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(2 * g.edges().size());
  for (int k = 0; k < g.edge_count(); ++k) {
    const auto& [a, b] = g.edges()[k];
    edges.emplace_back(a, v + k);
    edges.emplace_back(b, v + k);
  }
  std::string name = g.name().empty() ? std::string{} : "bary(" + g.name() + ")";
  return Graph(v + g.edge_count(), std::move(edges), std::move(name));
}

Graph line_graph(const Graph& g) {
  const int e = g.edge_count();
  std::vector<std::vector<int>> incident(g.vertex_count());
  for (int k = 0; k < e; ++k) {
    incident[g.edges()[k].first].push_back(k);
    incident[g.edges()[k].second].push_back(k);
  }
  std::vector<Edge> edges;
  for (const auto& inc : incident)
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) edges.emplace_back(inc[i], inc[j]);
  // Two distinct edges of a simple graph share at most one vertex.
  std::string name = g.name().empty() ? std::string{} : "line(" + g.name() + ")";
  return Graph(e, std::move(edges), std::move(name));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const int shift = a.vertex_count();
  for (const auto& [x, y] : b.edges()) edges.emplace_back(x + shift, y + shift);
  std::string name;
  if (!a.name().empty() || !b.name().empty()) name = a.name() + "+" + b.name();
  return Graph(a.vertex_count() + b.vertex_count(), std::move(edges), std::move(name));
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count())
    throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& [a, b] : g.edges()) edges.emplace_back(perm[a], perm[b]);
  return Graph(g.vertex_count(), std::move(edges), g.name());
}

}  // namespace connlap
