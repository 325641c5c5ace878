// SPDX-License-Identifier: Apache-2.0
#include "connlap/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace connlap {

Simplex Simplex::edge(Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("edge simplex needs two distinct vertices");
  if (a > b) std::swap(a, b);
  return Simplex({a, b}, 1);
}

std::vector<Vertex> Simplex::vertices() const {
  return dim_ == 0 ? std::vector<Vertex>{v_[0]} : std::vector<Vertex>{v_[0], v_[1]};
}

bool Simplex::is_face_of(const Simplex& other) const {
  if (dim_ > other.dim_) return false;
  if (dim_ == other.dim_) return *this == other;
  return other.contains(v_[0]);
}

bool Simplex::intersects(const Simplex& other) const {
  for (int i = 0; i < size(); ++i)
    if (other.contains(v_[i])) return true;
  return false;
}

Complex::Complex(Graph g) : graph_(std::move(g)) {
  if (graph_.vertex_count() == 0) throw std::invalid_argument("complex of an empty graph");
  simplices_.reserve(graph_.vertex_count() + graph_.edge_count());
  for (Vertex v = 0; v < graph_.vertex_count(); ++v) simplices_.push_back(Simplex::vertex(v));
  // Graph keeps its edges sorted, which is already the lexicographic order.
  for (const auto& [a, b] : graph_.edges()) simplices_.push_back(Simplex::edge(a, b));
  for (int i = 0; i < size(); ++i) index_.emplace(simplices_[i], i);
}

int Complex::find(const Simplex& x) const {
  auto it = index_.find(x);
  return it == index_.end() ? -1 : it->second;
}

int Complex::index_of(const Simplex& x) const {
  const int i = find(x);
  if (i < 0) throw std::out_of_range("simplex is not part of the complex");
  return i;
}

long long Complex::euler_characteristic() const {
  long long chi = 0;
  for (const auto& s : simplices_) chi += s.parity();
  return chi;
}

Complex build_complex(const Graph& g) { return Complex(g); }

Graph connection_graph(const Complex& c) {
  const Graph& g = c.graph();
  const int v = g.vertex_count();
  std::vector<std::vector<int>> incident(v);
  for (int k = 0; k < g.edge_count(); ++k) {
    incident[g.edges()[k].first].push_back(v + k);
    incident[g.edges()[k].second].push_back(v + k);
  }
  // Two simplices meet iff they share a vertex a; every such pair lies in
  // {a} ∪ (edges at a). Distinct edges share at most one vertex, so no pair
  // is produced twice.
  std::vector<Edge> edges;
  for (int a = 0; a < v; ++a) {
    const auto& inc = incident[a];
    for (std::size_t i = 0; i < inc.size(); ++i) {
      edges.emplace_back(a, inc[i]);
      for (std::size_t j = i + 1; j < inc.size(); ++j) edges.emplace_back(inc[i], inc[j]);
    }
  }
  std::string name = g.name().empty() ? std::string{} : "conn(" + g.name() + ")";
  return Graph(c.size(), std::move(edges), std::move(name));
}

std::vector<int> star_of(const Complex& c, const Simplex& x) {
  c.index_of(x);
  std::vector<int> star;
  for (int i = 0; i < c.size(); ++i)
    if (x.is_face_of(c[i])) star.push_back(i);
  return star;
}

int sphere_chi(const Complex& c, const Simplex& x) {
  c.index_of(x);
  if (x.dim() == 1) return 2;
  int deg = 0;
  for (const auto& [a, b] : c.graph().edges())
    if (a == x[0] || b == x[0]) ++deg;
  return deg;
}

long long euler_characteristic(const Complex& c, const std::vector<int>& positions) {
  long long chi = 0;
  for (int i : positions) chi += c[i].parity();
  return chi;
}

}  // namespace connlap
