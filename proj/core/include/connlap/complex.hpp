// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <compare>
#include <map>
#include <vector>

#include "connlap/graph.hpp"

namespace connlap {

/// A vertex {a} or an edge {a, b} with a < b.
class Simplex {
 public:
  static Simplex vertex(Vertex a) { return Simplex({a, -1}, 0); }
  static Simplex edge(Vertex a, Vertex b);

  int dim() const { return dim_; }
  /// ω(x) = (-1)^dim(x).
  int parity() const { return dim_ == 0 ? 1 : -1; }
  int size() const { return dim_ + 1; }
  Vertex operator[](int i) const { return v_[i]; }
  std::vector<Vertex> vertices() const;

  bool contains(Vertex a) const { return v_[0] == a || (dim_ == 1 && v_[1] == a); }
  bool is_face_of(const Simplex& other) const;
  bool intersects(const Simplex& other) const;

  /// Complex ordering: all vertices before all edges, then lexicographic.
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.v_ <=> b.v_;
  }
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  Simplex(std::array<Vertex, 2> v, int dim) : v_(v), dim_(dim) {}
  std::array<Vertex, 2> v_;
  int dim_;
};

/// The 1-dimensional simplicial complex of a graph: all vertices in ascending
/// label order, followed by all edges in lexicographic order. Position i of a
/// simplex is its row/column in every operator built from the complex.
class Complex {
 public:
  explicit Complex(Graph g);

  const Graph& graph() const { return graph_; }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  int size() const { return static_cast<int>(simplices_.size()); }
  int vertex_count() const { return graph_.vertex_count(); }
  int edge_count() const { return graph_.edge_count(); }
  const Simplex& operator[](int i) const { return simplices_[i]; }

  /// Position of x, or -1 when x is not a simplex of this complex.
  int find(const Simplex& x) const;
  /// Position of x; throws std::out_of_range when absent.
  int index_of(const Simplex& x) const;
  bool contains(const Simplex& x) const { return find(x) >= 0; }

  /// χ = Σ_x ω(x) = v - e.
  long long euler_characteristic() const;

 private:
  Graph graph_;
  std::vector<Simplex> simplices_;
  std::map<Simplex, int> index_;
};

/// Throws std::invalid_argument on a graph with no vertices.
Complex build_complex(const Graph& g);

/// Graph on the simplices of c, joining distinct intersecting simplices.
Graph connection_graph(const Complex& c);

/// St(x): positions of all simplices containing x (x included), ascending.
std::vector<int> star_of(const Complex& c, const Simplex& x);

/// χ(S(x)) of the unit sphere of x in the Barycentric refinement:
/// deg(x) for a vertex and 2 for an edge.
int sphere_chi(const Complex& c, const Simplex& x);

/// Σ ω over a set of simplex positions.
long long euler_characteristic(const Complex& c, const std::vector<int>& positions);

}  // namespace connlap
