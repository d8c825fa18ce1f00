#include "beamnet/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "beamnet/beamform.hpp"
#include "beamnet/geometry.hpp"
#include "beamnet/metrics.hpp"
#include "beamnet/reference.hpp"
#include "beamnet/rng.hpp"
#include "beamnet/trial.hpp"

namespace beamnet {

bool ValidationReport::all_passed() const {
  return std::all_of(items.begin(), items.end(),
                     [](const ValidationItem& i) { return i.passed; });
}

namespace {

constexpr double kTol = 1e-9;
constexpr int kOracleGraphs = 100;

Graph random_graph(Rng& rng, std::size_t n, double p) {
  Graph g(n);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (rng.uniform(0.0, 1.0) < p) g.add_edge(u, v);
  return g;
}

struct OracleCheck {
  std::string name;
  bool passed = true;
  std::string detail;
  int checked = 0;

  void fail(int graph_index, double got, double want) {
    if (!passed) return;
    passed = false;
    char buf[128];
    std::snprintf(buf, sizeof buf, "graph %d: got %.12g, expected %.12g",
                  graph_index, got, want);
    detail = buf;
  }

  ValidationItem finish() const {
    ValidationItem item{name, passed, detail};
    if (passed) item.detail = std::to_string(checked) + " graphs";
    return item;
  }
};

void append(ValidationReport& report, const std::string& name, bool passed,
            const std::string& detail) {
  report.items.push_back({name, passed, detail});
}

}  // namespace

ValidationReport run_validation(std::uint64_t seed,
                                const ValidationHooks& hooks) {
  const auto apl = hooks.apl ? hooks.apl : average_path_length;
  const auto cc = hooks.cc ? hooks.cc : clustering_coefficient;
  const auto components =
      hooks.components
          ? hooks.components
          : [](const Graph& g) { return connected_components(g).size(); };
  const auto ego = hooks.ego_betweenness ? hooks.ego_betweenness
                                         : egocentric_betweenness;
  const auto closeness =
      hooks.closeness ? hooks.closeness : closeness_centrality;

  ValidationReport report;

  OracleCheck apl_check{"oracle_apl"}, cc_check{"oracle_cc"},
      comp_check{"oracle_components"}, ego_check{"oracle_ego_betweenness"},
      close_check{"oracle_closeness"};
  Rng rng(derive_seed(seed, 0xA11Cull));
  const double probabilities[] = {0.15, 0.3, 0.5, 0.8};
  for (int i = 0; i < kOracleGraphs; ++i) {
    const std::size_t n = 2 + i % 11;
    const double p = probabilities[i % 4];
    const Graph g = random_graph(rng, n, p);
    if (std::fabs(apl(g) - reference::average_path_length(g)) > kTol)
      apl_check.fail(i, apl(g), reference::average_path_length(g));
    ++apl_check.checked;
    if (std::fabs(cc(g) - reference::clustering_coefficient(g)) > kTol)
      cc_check.fail(i, cc(g), reference::clustering_coefficient(g));
    ++cc_check.checked;
    if (components(g) != reference::component_count(g))
      comp_check.fail(i, static_cast<double>(components(g)),
                      static_cast<double>(reference::component_count(g)));
    ++comp_check.checked;
    for (NodeId v = 0; v < n; ++v) {
      if (std::fabs(ego(g, v) - reference::egocentric_betweenness(g, v)) >
          kTol)
        ego_check.fail(i, ego(g, v),
                       reference::egocentric_betweenness(g, v));
      if (std::fabs(closeness(g, v) -
                    reference::closeness_centrality(g, v)) > kTol)
        close_check.fail(i, closeness(g, v),
                         reference::closeness_centrality(g, v));
    }
    ++ego_check.checked;
    ++close_check.checked;
  }
  report.items.push_back(apl_check.finish());
  report.items.push_back(cc_check.finish());
  report.items.push_back(comp_check.finish());
  report.items.push_back(ego_check.finish());
  report.items.push_back(close_check.finish());

  // Per-trial protocol invariants on a small fixed grid.
  bool trials_ok = true, superset_ok = true, disjoint_ok = true;
  bool component_ok = true, range_ok = true, region_ok = true;
  bool beam_law_ok = true;
  std::string trial_detail, superset_detail, disjoint_detail;
  std::string component_detail, range_detail, region_detail, beam_detail;
  int trials = 0;
  for (std::uint32_t n : {20u, 60u, 120u})
    for (int g : {3, 6})
      for (std::uint32_t s = 0; s < 3; ++s) {
        WorldConfig cfg;
        cfg.n = n;
        cfg.gradient = g;
        cfg.seed = sweep_trial_seed(seed, n, s);
        const TrialResult trial = run_trial(cfg);
        ++trials;
        std::ostringstream tag;
        tag << "n=" << n << " g=" << g << " seed=" << cfg.seed;
        if (!trial.ok) {
          if (trials_ok) trial_detail = tag.str() + ": " + trial.failure;
          trials_ok = false;
          continue;
        }
        const TrialWorld& world = *trial.world;
        const MetricsRecord& rec = trial.record;
        for (const auto& e : world.omni.edges())
          if (!world.beams.links.has_symmetric(e.first, e.second)) {
            if (superset_ok) superset_detail = tag.str();
            superset_ok = false;
          }
        for (const auto& e : world.beams.links.directed_edges())
          if (world.beams.links.has_symmetric(e.first, e.second)) {
            if (disjoint_ok) disjoint_detail = tag.str();
            disjoint_ok = false;
          }
        if (rec.components_dir > rec.components_omni) {
          if (component_ok) component_detail = tag.str();
          component_ok = false;
        }
        const bool in_range =
            rec.cc_omni >= 0.0 && rec.cc_omni <= 1.0 && rec.cc_dir >= 0.0 &&
            rec.cc_dir <= 1.0 && rec.frac_peripheral >= 0.0 &&
            rec.frac_peripheral <= 1.0 && rec.frac_centroid >= 0.0 &&
            rec.frac_centroid <= 1.0;
        if (!in_range) {
          if (range_ok) range_detail = tag.str();
          range_ok = false;
        }
        for (const RegionCentroid& region : world.centroids.regions) {
          const bool member =
              std::binary_search(region.members.begin(),
                                 region.members.end(), region.centroid);
          const Graph sub = world.omni.induced_subgraph(region.members);
          if (!member || connected_components(sub).size() != 1) {
            if (region_ok) region_detail = tag.str();
            region_ok = false;
          }
        }
        for (const BeamReportRow& row : world.beams.report) {
          const SectorGeometry expect =
              sector_geometry(row.k, cfg.radio_range, cfg.alpha);
          if (row.width != expect.width || row.range != expect.range) {
            if (beam_law_ok) beam_detail = tag.str();
            beam_law_ok = false;
          }
        }
      }
  const std::string count_detail = std::to_string(trials) + " trials";
  append(report, "trials_converged", trials_ok,
         trials_ok ? count_detail : trial_detail);
  append(report, "links_superset_of_omni", superset_ok,
         superset_ok ? count_detail : superset_detail);
  append(report, "links_sets_disjoint", disjoint_ok,
         disjoint_ok ? count_detail : disjoint_detail);
  append(report, "components_dir_le_omni", component_ok,
         component_ok ? count_detail : component_detail);
  append(report, "metrics_in_range", range_ok,
         range_ok ? count_detail : range_detail);
  append(report, "regions_connected_with_centroid", region_ok,
         region_ok ? count_detail : region_detail);
  append(report, "beam_sector_law", beam_law_ok,
         beam_law_ok ? count_detail : beam_detail);

  double mean = 0.0, halfwidth = 0.0;
  bool defined = false;
  mean_and_ci95({1.0, 2.0, 3.0}, mean, halfwidth, defined);
  const bool stats_ok = defined && std::fabs(mean - 2.0) < 1e-12 &&
                        std::fabs(halfwidth - 2.484) < 1e-3;
  char buf[96];
  std::snprintf(buf, sizeof buf, "mean %.12g halfwidth %.12g", mean,
                halfwidth);
  append(report, "ci_hand_check", stats_ok, buf);

  return report;
}

void print_report(const ValidationReport& report, std::ostream& out) {
  std::size_t failures = 0;
  for (const ValidationItem& item : report.items) {
    out << (item.passed ? "PASS " : "FAIL ") << item.name;
    if (!item.detail.empty()) out << "  (" << item.detail << ')';
    out << '\n';
    if (!item.passed) ++failures;
  }
  out << report.items.size() - failures << '/' << report.items.size()
      << " checks passed\n";
}

}  // namespace beamnet
