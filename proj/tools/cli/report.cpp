// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <ostream>

#include "cli.hpp"
#include "connlap/bounds.hpp"
#include "connlap/generators.hpp"
#include "parallel.hpp"
#include "reference_tables.hpp"

namespace connlap::cli {

using json = nlohmann::ordered_json;

namespace {

std::array<double, 6> reference_columns(const BoundsReport& r) {
  return {r.rho, r.rho_abs, r.dual_vertex.value, r.kwalk.at(3).value, r.bhs.value, r.lsc.value};
}

struct ReferenceResult {
  std::string family;
  const ReferenceRow* row = nullptr;
  std::array<double, 6> ours{};
  double max_deviation = 0.0;
  bool match = false;
};

struct RandomRow {
  std::string family;
  double p = 0.0;
  std::uint64_t seed = 0;
  int vertices = 0, edges = 0;
  std::array<double, 6> values{};
  double shi = 0.0;
  bool sound = false;
};

bool below(double a, double b) { return std::isfinite(a) && std::isfinite(b) && a < b; }

json columns_json(const std::array<double, 6>& v) {
  json o = json::object();
  for (std::size_t c = 0; c < v.size(); ++c) o[kReferenceColumns[c]] = number_or_null(v[c]);
  return o;
}

}  // namespace

int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.report_seeds < 0) throw UsageError("--seeds must be >= 0");
  if (cfg.report_vertices < 1) throw UsageError("--vertices must be >= 1");
  for (double p : cfg.report_ps)
    if (!(p >= 0 && p <= 1)) throw UsageError("edge probabilities must lie in [0, 1]");

  std::vector<std::pair<std::string, const ReferenceRow*>> jobs;
  for (const auto& t : reference_tables())
    for (const auto& r : t.rows) jobs.emplace_back(t.family, &r);
  const auto reference = parallel_map(jobs, [](const auto& job) {
    ReferenceResult res{job.first, job.second, {}, 0.0, false};
    res.ours = reference_columns(bounds_report(generate(job.second->spec), {3}, false));
    for (std::size_t c = 0; c < res.ours.size(); ++c)
      res.max_deviation = std::max(res.max_deviation, std::abs(res.ours[c] - job.second->expected(c)));
    res.match = res.max_deviation <= kReferenceTolerance;
    return res;
  });

  struct RandomJob {
    bool bary;
    double p;
    std::uint64_t seed;
  };
  std::vector<RandomJob> random_jobs;
  if (cfg.report_random)
    for (bool bary : {false, true})
      for (double p : cfg.report_ps)
        for (int s = 0; s < cfg.report_seeds; ++s) random_jobs.push_back({bary, p, cfg.seed + static_cast<std::uint64_t>(s)});
  const auto random = parallel_map(random_jobs, [&](const RandomJob& job) {
    Graph g = gen::gnp(cfg.report_vertices, job.p, job.seed);
    if (job.bary) g = barycentric_refine(g);
    const BoundsReport r = bounds_report(g, {3}, false);
    RandomRow row{job.bary ? "bary:gnp" : "gnp", job.p, job.seed, r.vertices, r.edges, reference_columns(r), r.shi.value,
                  all_pass(soundness(r))};
    return row;
  });

  int mismatches = 0, unsound = 0;
  for (const auto& r : reference)
    if (!r.match) ++mismatches;
  for (const auto& r : random)
    if (!r.sound) ++unsound;

  struct Summary {
    std::string family;
    double p;
    int count = 0;
    std::array<double, 6> mean{};
    std::array<int, 6> present{};
    int dual_below_lsc = 0, walk3_below_lsc = 0, sound = 0;
  };
  std::vector<Summary> summaries;
  for (const auto& row : random) {
    if (summaries.empty() || summaries.back().family != row.family || summaries.back().p != row.p)
      summaries.push_back({row.family, row.p});
    Summary& s = summaries.back();
    ++s.count;
    for (std::size_t c = 0; c < 6; ++c)
      if (std::isfinite(row.values[c])) {
        s.mean[c] += row.values[c];
        ++s.present[c];
      }
    if (below(row.values[2], row.values[5])) ++s.dual_below_lsc;
    if (below(row.values[3], row.values[5])) ++s.walk3_below_lsc;
    if (row.sound) ++s.sound;
  }
  for (auto& s : summaries)
    for (std::size_t c = 0; c < 6; ++c)
      s.mean[c] = s.present[c] ? s.mean[c] / s.present[c] : std::nan("");

  Table ref_table{{"family", "graph", "source", "rho", "rho_abs", "dual_vertex", "walk3", "bhs", "lsc", "max_deviation",
                   "match", "note"},
                  {}};
  for (const auto& r : reference) {
    std::vector<json> ours{r.family, r.row->spec, "computed"};
    std::vector<json> published{r.family, r.row->spec, "published"};
    for (std::size_t c = 0; c < 6; ++c) {
      ours.push_back(number_or_null(r.ours[c]));
      published.push_back(r.row->published[c]);
    }
    ours.insert(ours.end(), {r.max_deviation, r.match, r.row->note.empty() ? json(nullptr) : json(r.row->note)});
    published.insert(published.end(), {nullptr, nullptr, nullptr});
    ref_table.add(std::move(ours));
    ref_table.add(std::move(published));
  }

  Table summary_table{{"family", "p", "seeds", "rho", "rho_abs", "dual_vertex", "walk3", "bhs", "lsc",
                       "dual_below_lsc", "walk3_below_lsc", "sound"},
                      {}};
  for (const auto& s : summaries) {
    std::vector<json> row{s.family, s.p, s.count};
    for (double m : s.mean) row.push_back(number_or_null(m));
    row.insert(row.end(), {s.dual_below_lsc, s.walk3_below_lsc, s.sound});
    summary_table.add(std::move(row));
  }

  Table random_table{{"family", "p", "seed", "vertices", "edges", "rho", "rho_abs", "dual_vertex", "walk3", "bhs", "lsc",
                      "shi", "sound"},
                     {}};
  for (const auto& r : random) {
    std::vector<json> row{r.family, r.p, r.seed, r.vertices, r.edges};
    for (double v : r.values) row.push_back(number_or_null(v));
    row.push_back(number_or_null(r.shi));
    row.push_back(r.sound);
    random_table.add(std::move(row));
  }

  switch (cfg.format) {
    case Format::json: {
      json doc;
      json refs = json::array();
      for (const auto& r : reference)
        refs.push_back({{"family", r.family},
                        {"graph", r.row->spec},
                        {"computed", columns_json(r.ours)},
                        {"published", columns_json(r.row->published)},
                        {"max_deviation", r.max_deviation},
                        {"match", r.match},
                        {"note", r.row->note.empty() ? json(nullptr) : json(r.row->note)}});
      doc["reference"] = refs;
      doc["tolerance"] = kReferenceTolerance;
      doc["random_summary"] = summary_table.to_json();
      doc["random_rows"] = random_table.to_json();
      doc["mismatches"] = mismatches;
      doc["unsound"] = unsound;
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "# reference\n";
      render(ref_table, Format::csv, out);
      out << "\n# random_summary\n";
      render(summary_table, Format::csv, out);
      out << "\n# random_rows\n";
      render(random_table, Format::csv, out);
      break;
    case Format::pretty:
      out << "Deterministic families (tolerance " << kReferenceTolerance << ")\n\n";
      render(ref_table, Format::pretty, out);
      if (!summaries.empty()) {
        out << "\nRandom graphs E(" << cfg.report_vertices << ", p), seeds " << cfg.seed << ".."
            << cfg.seed + static_cast<std::uint64_t>(cfg.report_seeds) - 1 << ", column means\n\n";
        render(summary_table, Format::pretty, out);
      }
      out << "\n" << reference.size() - static_cast<std::size_t>(mismatches) << "/" << reference.size()
          << " reference rows match, " << random.size() - static_cast<std::size_t>(unsound) << "/" << random.size()
          << " random rows sound\n";
      break;
  }
  if (mismatches || unsound) {
    err << "report: " << mismatches << " reference mismatches, " << unsound << " unsound rows\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace connlap::cli
