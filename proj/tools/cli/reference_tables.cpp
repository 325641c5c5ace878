// SPDX-License-Identifier: Apache-2.0
#include "reference_tables.hpp"

#include <stdexcept>

namespace connlap::cli {

namespace {

ReferenceRow row(std::string spec, std::array<double, 6> v) { return {std::move(spec), v, {}, {}}; }

std::vector<ReferenceTable> build() {
  std::vector<ReferenceTable> t;
  t.push_back({"complete_bipartite", "K(3,k), k = 3..9",
               {row("complete_bipartite:3,3", {6, 6, 6.85714, 6.22655, 8.88889, 5.96667}),
                row("complete_bipartite:3,4", {7, 7, 7.875, 7.23871, 10.8126, 7.97143}),
                row("complete_bipartite:3,5", {8, 8, 8.88889, 8.24856, 12.6793, 9.975}),
                row("complete_bipartite:3,6", {9, 9, 9.9, 9.25665, 14.5115, 11.9778}),
                row("complete_bipartite:3,7", {10, 10, 10.9091, 10.2634, 16.3213, 13.98}),
                row("complete_bipartite:3,8", {11, 11, 11.9167, 11.269, 18.1156, 15.9818}),
                row("complete_bipartite:3,9", {12, 12, 12.9231, 12.2739, 19.8985, 17.9833})}});
  t.push_back({"cycle", "C(k), k = 4..10",
               {row("cycle:4", {4, 4, 4.8, 4.19371, 5.24008, 3.95}),
                row("cycle:5", {3.61803, 4, 4.8, 4.19371, 5.83333, 3.96}),
                row("cycle:6", {4, 4, 4.8, 4.19371, 6.36744, 3.97619}),
                row("cycle:7", {3.80194, 4, 4.8, 4.19371, 6.85714, 3.97959}),
                row("cycle:8", {4, 4, 4.8, 4.19371, 7.31193, 3.98611}),
                row("cycle:9", {3.87939, 4, 4.8, 4.19371, 7.73832, 3.98765}),
                row("cycle:10", {4, 4, 4.8, 4.19371, 8.14105, 3.99091})}});
  t.push_back({"complete", "K(k), k = 2..8",
               {row("complete:2", {2, 2, 2.66667, 2.20091, 2.17116, 1.83333}),
                row("complete:3", {3, 4, 4.8, 4.19371, 4.56245, 3.88889}),
                row("complete:4", {4, 6, 6.85714, 6.22655, 7.31193, 5.91667}),
                row("complete:5", {5, 8, 8.88889, 8.24856, 10.4174, 7.93333}),
                row("complete:6", {6, 10, 10.9091, 10.2634, 13.8539, 9.94444}),
                row("complete:7", {7, 12, 12.9231, 12.2739, 17.5971, 11.9524}),
                row("complete:8", {8, 14, 14.9333, 14.2817, 21.6258, 13.9583})}});
  t.push_back({"star", "star with center degree 3..9",
               {row("star:3", {4, 4, 4.8, 4.19371, 4.56245, 5.95}),
                row("star:4", {5, 5, 5.83333, 5.21154, 5.64311, 7.96}),
                row("star:5", {6, 6, 6.85714, 6.22655, 6.69818, 9.96667}),
                row("star:6", {7, 7, 7.875, 7.23871, 7.73832, 11.9714}),
                row("star:7", {8, 8, 8.88889, 8.24856, 8.76893, 13.975}),
                row("star:8", {9, 9, 9.9, 9.25665, 9.79308, 15.9778}),
                row("star:9", {10, 10, 10.9091, 10.2634, 10.8126, 17.98})}});
  t.push_back({"wheel", "wheel with center degree 4..10",
               {row("wheel:4", {5, 6.56155, 7.875, 6.99565, 8.64722, 7.96}),
                row("wheel:5", {6, 7.23607, 8.88889, 7.8263, 9.9, 9.96667}),
                row("wheel:6", {7, 8, 9.9, 8.69993, 11.0994, 11.9714}),
                row("wheel:7", {8, 8.82843, 10.9091, 9.60356, 12.2617, 13.975}),
                row("wheel:8", {9, 9.70156, 11.9167, 10.5285, 13.3969, 15.9778}),
                row("wheel:9", {10, 10.6056, 12.9231, 11.4687, 14.5115, 17.98}),
                row("wheel:10", {11, 11.5311, 13.9286, 12.4203, 15.6102, 19.9818})}});

  ReferenceTable petersen{"petersen", "generalized Petersen (6, k), k = 2..8",
                          {row("petersen:6,2", {5.23607, 6, 6.85714, 6.22655, 12.4305, 5.99074}),
                           row("petersen:6,3", {5.41421, 5.41421, 6.85714, 5.92748, 10.8126, 5.99074}),
                           row("petersen:6,4", {5.23607, 6, 6.85714, 6.22655, 12.4305, 5.99074}),
                           row("petersen:6,5", {6, 6, 6.85714, 6.22655, 12.4305, 5.99074}),
                           row("petersen:6,6", {5.23607, 5.23607, 6.85714, 5.87411, 10.8126, 5.99242}),
                           row("petersen:6,7", {6, 6, 6.85714, 6.22655, 12.4305, 5.99074}),
                           row("petersen:6,8", {5.23607, 6, 6.85714, 6.22655, 12.4305, 5.99074})}};
  // A skip of 6 is 0 mod 6. The reference walk3 and BHS values count a
  // self-loop at every inner vertex; complexes have no loops.
  auto& loops = petersen.rows[4];
  loops.expected_override[3] = 5.70684;
  loops.expected_override[4] = 9.57546;
  loops.note = "skip 0 mod 6: inner vertices are leaves without self-loops";
  t.push_back(std::move(petersen));

  t.push_back({"path", "path with 2..8 vertices",
               {row("path:2", {2, 2, 2.66667, 2.20091, 2.17116, 1.83333}),
                row("path:3", {3, 3, 3.75, 3.17771, 3.43141, 3.93333}),
                row("path:4", {3.41421, 3.41421, 4.8, 3.78886, 4.31043, 3.96429}),
                row("path:5", {3.61803, 3.61803, 4.8, 3.96987, 5.02531, 3.97778}),
                row("path:6", {3.73205, 3.73205, 4.8, 4.13272, 5.64311, 3.98485}),
                row("path:7", {3.80194, 3.80194, 4.8, 4.16348, 6.19493, 3.98901}),
                row("path:8", {3.84776, 3.84776, 4.8, 4.19371, 6.69818, 3.99167})}});
  t.push_back({"grid", "grid 6 x k, k = 2..8",
               {row("grid:6,2", {5.73205, 5.73205, 6.85714, 6.20288, 11.3786, 5.99359}),
                row("grid:6,3", {6.73205, 6.73205, 8.88889, 7.78401, 15.4104, 7.9963}),
                row("grid:6,4", {7.14626, 7.14626, 8.88889, 8.00389, 18.564, 7.99755}),
                row("grid:6,5", {7.35008, 7.35008, 8.88889, 8.211, 21.2437, 7.99825}),
                row("grid:6,6", {7.4641, 7.4641, 8.88889, 8.22357, 23.6148, 7.99868}),
                row("grid:6,7", {7.53399, 7.53399, 8.88889, 8.23608, 25.7644, 7.99896}),
                row("grid:6,8", {7.57981, 7.57981, 8.88889, 8.23608, 27.7449, 7.99917})}});
  return t;
}

}  // namespace

const std::vector<ReferenceTable>& reference_tables() {
  static const std::vector<ReferenceTable> tables = build();
  return tables;
}

const ReferenceTable& reference_table(const std::string& family) {
  for (const auto& t : reference_tables())
    if (t.family == family) return t;
  throw std::out_of_range("no reference table for family '" + family + "'");
}

}  // namespace connlap::cli
