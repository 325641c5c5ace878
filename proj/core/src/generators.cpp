// SPDX-License-Identifier: Apache-2.0
#include "connlap/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <set>
#include <stdexcept>

namespace connlap {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
  // Reject the tail that would bias the modulo.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

namespace gen {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph empty(int n) {
  require(n >= 1, "empty: need n >= 1");
  return Graph(n, {}, "empty:" + std::to_string(n));
}

Graph path(int n) {
  require(n >= 1, "path: need n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e), "path:" + std::to_string(n));
}

Graph cycle(int n) {
  require(n >= 3, "cycle: need n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e), "cycle:" + std::to_string(n));
}

Graph star(int d) {
  require(d >= 1, "star: need center degree >= 1");
  std::vector<Edge> e;
  for (int i = 1; i <= d; ++i) e.emplace_back(0, i);
  return Graph(d + 1, std::move(e), "star:" + std::to_string(d));
}

Graph wheel(int d) {
  require(d >= 3, "wheel: need center degree >= 3");
  std::vector<Edge> e;
  for (int i = 1; i <= d; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i % d + 1);
  }
  return Graph(d + 1, std::move(e), "wheel:" + std::to_string(d));
}

Graph complete(int n) {
  require(n >= 1, "complete: need n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e), "complete:" + std::to_string(n));
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete_bipartite: need a, b >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, std::move(e),
               "complete_bipartite:" + std::to_string(a) + "," + std::to_string(b));
}

Graph grid(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid: need rows, cols >= 1");
  std::vector<Edge> e;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph(rows * cols, std::move(e),
               "grid:" + std::to_string(rows) + "," + std::to_string(cols));
}

Graph petersen(int m, int k) {
  require(m >= 3, "petersen: need m >= 3");
  require(k >= 0, "petersen: need k >= 0");
  std::set<Edge> e;
  for (int i = 0; i < m; ++i) {
    e.emplace(std::min(i, (i + 1) % m), std::max(i, (i + 1) % m));
    e.emplace(i, m + i);
    const int j = (i + k) % m;
    if (j != i) e.emplace(m + std::min(i, j), m + std::max(i, j));
  }
  return Graph(2 * m, {e.begin(), e.end()},
               "petersen:" + std::to_string(m) + "," + std::to_string(k));
}

Graph figure_eight() {
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}};
  return Graph(7, std::move(e), "figure8");
}

Graph gnm(int n, int m, std::uint64_t seed) {
  require(n >= 1, "gnm: need n >= 1");
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  require(m >= 0 && m <= pairs, "gnm: m must lie in 0..n(n-1)/2");
  Rng rng(seed);
  std::set<Edge> chosen;
  while (static_cast<int>(chosen.size()) < m) {
    int a = static_cast<int>(rng.below(n));
    int b = static_cast<int>(rng.below(n));
    if (a == b) continue;
    chosen.emplace(std::min(a, b), std::max(a, b));
  }
  return Graph(n, {chosen.begin(), chosen.end()},
               "gnm:" + std::to_string(n) + "," + std::to_string(m) +
                   ":seed=" + std::to_string(seed));
}

Graph gnp(int n, double p, std::uint64_t seed) {
  require(n >= 1, "gnp: need n >= 1");
  require(p >= 0.0 && p <= 1.0, "gnp: p must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform01() < p) e.emplace_back(i, j);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", p);
  return Graph(n, std::move(e),
               "gnp:" + std::to_string(n) + "," + buf + ":seed=" + std::to_string(seed));
}

}  // namespace gen

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

long long parse_int(std::string_view s, std::string_view spec) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("bad integer '" + std::string(s) + "' in spec '" +
                                std::string(spec) + "'");
  return v;
}

std::uint64_t parse_u64(std::string_view s, std::string_view spec) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("bad seed '" + std::string(s) + "' in spec '" +
                                std::string(spec) + "'");
  return v;
}

double parse_double(std::string_view s, std::string_view spec) {
  try {
    std::size_t used = 0;
    const double v = std::stod(std::string(s), &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("bad number '" + std::string(s) + "' in spec '" +
                              std::string(spec) + "'");
}

}  // namespace

Graph generate(std::string_view spec, std::optional<std::uint64_t> default_seed) {
  if (spec.starts_with("bary:")) {
    Graph g = barycentric_refine(generate(spec.substr(5), default_seed));
    g.set_name(std::string(spec));
    return g;
  }
  if (spec.starts_with("line:")) {
    Graph g = line_graph(generate(spec.substr(5), default_seed));
    g.set_name(std::string(spec));
    return g;
  }

  auto parts = split(spec, ':');
  const std::string family(parts[0]);
  std::vector<std::string_view> params;
  if (parts.size() >= 2 && !parts[1].empty()) params = split(parts[1], ',');
  std::optional<std::uint64_t> seed = default_seed;
  for (std::size_t i = 2; i < parts.size(); ++i) {
    if (parts[i].starts_with("seed="))
      seed = parse_u64(parts[i].substr(5), spec);
    else
      throw std::invalid_argument("unknown option '" + std::string(parts[i]) + "' in spec '" +
                                  std::string(spec) + "'");
  }

  auto want = [&](std::size_t count) {
    if (params.size() != count)
      throw std::invalid_argument("family '" + family + "' takes " + std::to_string(count) +
                                  " parameter(s): '" + std::string(spec) + "'");
  };
  auto iparam = [&](std::size_t i) { return static_cast<int>(parse_int(params[i], spec)); };
  auto need_seed = [&]() -> std::uint64_t {
    if (!seed)
      throw std::invalid_argument("random family '" + family +
                                  "' needs an explicit seed (\":seed=N\" or --seed)");
    return *seed;
  };

  if (family == "empty") { want(1); return gen::empty(iparam(0)); }
  if (family == "path" || family == "linear") { want(1); return gen::path(iparam(0)); }
  if (family == "cycle") { want(1); return gen::cycle(iparam(0)); }
  if (family == "star") { want(1); return gen::star(iparam(0)); }
  if (family == "wheel") { want(1); return gen::wheel(iparam(0)); }
  if (family == "complete") { want(1); return gen::complete(iparam(0)); }
  if (family == "complete_bipartite") { want(2); return gen::complete_bipartite(iparam(0), iparam(1)); }
  if (family == "grid") { want(2); return gen::grid(iparam(0), iparam(1)); }
  if (family == "petersen") { want(2); return gen::petersen(iparam(0), iparam(1)); }
  if (family == "figure8") { want(0); return gen::figure_eight(); }
  if (family == "gnm") { want(2); return gen::gnm(iparam(0), iparam(1), need_seed()); }
  if (family == "gnp") {
    want(2);
    return gen::gnp(iparam(0), parse_double(params[1], spec), need_seed());
  }
  throw std::invalid_argument("unknown graph family '" + family + "'");
}

std::vector<std::string> expand_spec(std::string_view spec) {
  const auto dots = spec.find("..");
  if (dots == std::string_view::npos) return {std::string(spec)};
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  std::size_t lo_begin = dots;
  while (lo_begin > 0 && is_digit(spec[lo_begin - 1])) --lo_begin;
  std::size_t hi_end = dots + 2;
  while (hi_end < spec.size() && is_digit(spec[hi_end])) ++hi_end;
  long long step = 1;
  std::size_t tail = hi_end;
  if (spec.substr(hi_end, 2) == "..") {
    std::size_t step_end = hi_end + 2;
    while (step_end < spec.size() && is_digit(spec[step_end])) ++step_end;
    step = parse_int(spec.substr(hi_end + 2, step_end - hi_end - 2), spec);
    tail = step_end;
  }
  const long long lo = parse_int(spec.substr(lo_begin, dots - lo_begin), spec);
  const long long hi = parse_int(spec.substr(dots + 2, hi_end - dots - 2), spec);
  if (step <= 0 || hi < lo) throw std::invalid_argument("bad range in '" + std::string(spec) + "'");
  std::vector<std::string> out;
  for (long long v = lo; v <= hi; v += step) {
    std::string s(spec.substr(0, lo_begin));
    s += std::to_string(v);
    s += spec.substr(tail);
    for (auto& inner : expand_spec(s)) out.push_back(std::move(inner));
  }
  return out;
}

std::vector<std::string> generator_families() {
  return {"empty", "path", "linear", "cycle", "star", "wheel", "complete",
          "complete_bipartite", "grid", "petersen", "figure8", "gnm", "gnp"};
}

}  // namespace connlap
