// SPDX-License-Identifier: Apache-2.0
#include "connlap/graph_io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace connlap {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ParsedGraph read_graph(std::istream& in) {
  std::map<long long, int> index;
  std::vector<long long> labels;
  std::vector<Edge> edges;
  std::string name;
  bool named = false;

  auto intern = [&](long long label) {
    auto [it, inserted] = index.emplace(label, static_cast<int>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      const std::string body = trim(t.substr(1));
      if (!named && body.rfind("name:", 0) == 0) {
        name = trim(body.substr(5));
        named = true;
      }
      continue;
    }
    std::istringstream fields(t);
    long long u = 0, v = 0;
    if (!(fields >> u)) throw std::runtime_error("line " + std::to_string(lineno) + ": expected \"u v\"");
    if (!(fields >> v)) {
      intern(u);
      continue;
    }
    std::string extra;
    if (fields >> extra)
      throw std::runtime_error("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
    if (u == v) throw std::runtime_error("line " + std::to_string(lineno) + ": self-loop");
    const int a = intern(u);
    const int b = intern(v);
    edges.emplace_back(a, b);
  }
  if (labels.empty()) throw std::runtime_error("graph file holds no vertices");
  return {Graph(static_cast<int>(labels.size()), std::move(edges), name), std::move(labels)};
}

ParsedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  ParsedGraph pg = read_graph(in);
  if (pg.graph.name().empty()) pg.graph.set_name(path);
  return pg;
}

void write_graph(std::ostream& out, const Graph& g) {
  if (!g.name().empty()) out << "# name: " << g.name() << '\n';
  const auto deg = g.degrees();
  for (int v = 0; v < g.vertex_count(); ++v)
    if (deg[v] == 0) out << v << '\n';
  for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

}  // namespace connlap
