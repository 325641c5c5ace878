// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace connlap {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..vertex_count-1.
///
/// Edges are stored normalized (first < second) and sorted lexicographically,
/// so two graphs with the same edge set compare equal regardless of the order
/// in which edges were supplied. Construction rejects self-loops, duplicate
/// edges and out-of-range labels.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges, std::string name = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::vector<int> degrees() const;
  int max_degree() const;
  std::vector<std::vector<Vertex>> adjacency_lists() const;
  bool has_edge(Vertex a, Vertex b) const;

  bool is_regular() const;
  bool is_bipartite() const;
  bool is_connected() const;
  /// Component id per vertex, numbered in order of smallest member.
  std::vector<int> component_labels() const;
  int component_count() const;
  /// Longest shortest path; -1 for disconnected graphs.
  int diameter() const;
  /// Induced subgraph on the vertices of one component, relabeled densely.
  std::vector<Graph> components() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::string name_;
};

/// f-vector (f0, f1) = (vertices, edges) of a 1-dimensional complex.
struct FVector {
  long long vertices = 0;
  long long edges = 0;
  friend bool operator==(const FVector&, const FVector&) = default;
};

FVector f_vector(const Graph& g);

/// Applies the refinement matrix S with S_ij = i! S2(j, i) restricted to
/// dimension one: S = [[1, 1], [0, 2]].
FVector stirling_map(const FVector& f);

/// Graph on V ∪ E joining each vertex to the edges that contain it. Vertex
/// labels 0..v-1 are kept, edge k becomes label v + k.
Graph barycentric_refine(const Graph& g);

/// Standard line graph; vertex k is edge k of g in sorted edge order.
Graph line_graph(const Graph& g);

/// Disjoint union with b's labels shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Relabels vertices by the permutation perm (old label i becomes perm[i]).
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace connlap
