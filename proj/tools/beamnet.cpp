// beamnet: deterministic simulator of region formation, centroid election
// and sector beamforming on random unit-disk topologies.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "beamnet/config.hpp"
#include "beamnet/metrics.hpp"
#include "beamnet/plot.hpp"
#include "beamnet/trial.hpp"
#include "beamnet/validate.hpp"
#include "beamnet/version.hpp"

namespace fs = std::filesystem;
using namespace beamnet;

namespace {

std::string timestamp_utc() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void add_world_flags(CLI::App* cmd, WorldConfig& cfg,
                     std::string& config_path) {
  cmd->add_option("--n", cfg.n, "node count");
  cmd->add_option("--field_size", cfg.field_size,
                  "side length of the square field");
  cmd->add_option("--radio_range", cfg.radio_range,
                  "omnidirectional radio range r0");
  cmd->add_option("--gradient", cfg.gradient,
                  "max hopcount from a region head");
  cmd->add_option("--alpha", cfg.alpha, "path-loss exponent for beam range");
  cmd->add_option("--elements_min", cfg.elements_min,
                  "min antenna element count");
  cmd->add_option("--elements_max", cfg.elements_max,
                  "max antenna element count");
  cmd->add_option("--epsilon", cfg.epsilon,
                  "centroid candidate distance threshold");
  cmd->add_option("--delta", cfg.delta, "consensus convergence threshold");
  cmd->add_option("--sweep_step", cfg.sweep_step,
                  "beam sweep angular step (must divide 2*pi)");
  cmd->add_option("--seed", cfg.seed, "master RNG seed")
      ->envname("BEAMNET_SEED");
  cmd->add_option("--config", config_path,
                  "plain `key = value` config file; command-line flags "
                  "override it, it overrides built-in defaults");
}

/// Resolves the three config layers: the file overrides built-in defaults,
/// explicitly given flags (or BEAMNET_SEED) override the file.
WorldConfig merge_config_file(const CLI::App* cmd, const WorldConfig& flags,
                              const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file " + path);
  WorldConfig merged = WorldConfig::from_stream(in);
  const auto given = [cmd](const char* flag) {
    return cmd->get_option(flag)->count() > 0;
  };
  if (given("--n")) merged.n = flags.n;
  if (given("--field_size")) merged.field_size = flags.field_size;
  if (given("--radio_range")) merged.radio_range = flags.radio_range;
  if (given("--gradient")) merged.gradient = flags.gradient;
  if (given("--alpha")) merged.alpha = flags.alpha;
  if (given("--elements_min")) merged.elements_min = flags.elements_min;
  if (given("--elements_max")) merged.elements_max = flags.elements_max;
  if (given("--epsilon")) merged.epsilon = flags.epsilon;
  if (given("--delta")) merged.delta = flags.delta;
  if (given("--sweep_step")) merged.sweep_step = flags.sweep_step;
  if (given("--seed")) merged.seed = flags.seed;
  return merged;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

void write_manifest(const fs::path& dir, const WorldConfig& cfg,
                    const std::string& subcommand) {
  auto out = open_out(dir / "manifest.txt");
  out << "subcommand = " << subcommand << '\n'
      << "outdir = " << dir.string() << '\n'
      << "version = " << kVersionString << '\n'
      << "timestamp = " << timestamp_utc() << '\n'
      << cfg.to_key_values();
}

int cmd_trial(const WorldConfig& cfg, const fs::path& outdir, bool trace) {
  fs::create_directories(outdir);
  TraceLineSink sink;
  if (trace) sink = [](const std::string& line) { std::cerr << line << '\n'; };
  const TrialResult trial = run_trial(cfg, sink);
  write_manifest(outdir, cfg, "trial");
  if (!trial.ok) {
    std::cerr << "trial failed: " << trial.failure << '\n';
    return 3;
  }
  {
    auto out = open_out(outdir / "records.csv");
    emit_csv({trial.record}, out);
  }
  const TrialWorld& world = *trial.world;
  {
    auto out = open_out(outdir / "placement.txt");
    save_placement(world.placement, out);
  }
  {
    auto out = open_out(outdir / "graph.txt");
    world.omni.save(out);
  }
  {
    auto out = open_out(outdir / "regions.txt");
    save_region_dump(world.states, out);
  }
  {
    auto out = open_out(outdir / "centroids.txt");
    save_centroid_dump(world.centroids, out);
  }
  {
    auto out = open_out(outdir / "beams.txt");
    save_beam_report(world.beams, out);
  }
  std::cout << "trial ok: n=" << trial.record.n
            << " regions=" << world.centroids.regions.size()
            << " peripherals=" << world.beams.peripherals.size()
            << " beams=" << world.beams.beams_formed
            << " -> " << outdir.string() << '\n';
  return 0;
}

void write_summaries_and_plots(const std::vector<MetricsRecord>& records,
                               double field_size, const fs::path& outdir) {
  std::vector<SummaryRow> all_rows;
  for (const std::string& metric : metric_names()) {
    const auto rows = summarize(records, metric);
    all_rows.insert(all_rows.end(), rows.begin(), rows.end());
    auto svg = open_out(outdir / ("plot_" + metric + ".svg"));
    emit_svg_plot(rows, metric, field_size, svg);
  }
  auto out = open_out(outdir / "summary.csv");
  emit_summary_csv(all_rows, out);
}

int cmd_sweep(const WorldConfig& cfg, const SweepOptions& opt,
              const fs::path& outdir) {
  fs::create_directories(outdir);
  write_manifest(outdir, cfg, "sweep");
  const SweepResult sweep = run_sweep(cfg, opt);
  {
    auto out = open_out(outdir / "records.csv");
    emit_csv(sweep.records, out);
  }
  write_summaries_and_plots(sweep.records, cfg.field_size, outdir);
  if (sweep.failed > 0) {
    std::cerr << sweep.failed << " trial(s) failed and were excluded:\n";
    for (const std::string& reason : sweep.failures)
      std::cerr << "  " << reason << '\n';
  }
  std::cout << "sweep ok: " << sweep.records.size() << " trials ("
            << sweep.failed << " failed) -> " << outdir.string() << '\n';
  return sweep.records.empty() ? 3 : 0;
}

int cmd_validate(std::uint64_t seed) {
  const ValidationReport report = run_validation(seed);
  print_report(report, std::cout);
  return report.all_passed() ? 0 : 1;
}

int cmd_plot(const fs::path& input, double field_size,
             const fs::path& outdir) {
  std::ifstream in(input);
  if (!in) {
    std::cerr << "cannot read " << input.string() << '\n';
    return 2;
  }
  const auto records = parse_csv(in);
  fs::create_directories(outdir);
  write_summaries_and_plots(records, field_size, outdir);
  std::cout << "plot ok: " << records.size() << " records -> "
            << outdir.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"beamnet: bio-inspired beamforming network simulator"};
  app.set_version_flag("--version", kVersionString);
  app.require_subcommand(1);

  WorldConfig cfg;
  std::string config_path;
  std::string outdir = "out";
  bool trace = false;

  CLI::App* trial = app.add_subcommand(
      "trial", "run one topology end to end and dump its artifacts");
  add_world_flags(trial, cfg, config_path);
  trial->add_option("--out", outdir, "output directory");
  trial->add_flag("--trace", trace,
                  "dump per-event engine trace lines to stderr");

  SweepOptions sweep_opt;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "run the (n, gradient, seed) cross product and aggregate");
  add_world_flags(sweep, cfg, config_path);
  sweep->add_option("--out", outdir, "output directory");
  sweep->add_option("--n_list", sweep_opt.n_values, "node counts to sweep")
      ->delimiter(',');
  sweep->add_option("--gradient_list", sweep_opt.gradients,
                    "gradient bounds to sweep")
      ->delimiter(',');
  sweep->add_option("--seeds", sweep_opt.seeds, "seeds per (n, gradient)");
  sweep->add_option("--jobs", sweep_opt.jobs,
                    "worker threads (never affects results)");

  CLI::App* validate = app.add_subcommand(
      "validate", "run oracle comparisons and protocol invariant checks");
  std::uint64_t validate_seed = 1;
  validate->add_option("--seed", validate_seed, "seed for the check suite")
      ->envname("BEAMNET_SEED");

  CLI::App* plot = app.add_subcommand(
      "plot", "rebuild summary and SVG plots from an existing records CSV");
  std::string plot_input;
  double plot_field_size = 10.0;
  plot->add_option("--input", plot_input, "records.csv produced by sweep")
      ->required();
  plot->add_option("--field_size", plot_field_size,
                   "field side length for the density axis");
  plot->add_option("--out", outdir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (trial->parsed()) {
      if (!config_path.empty())
        cfg = merge_config_file(trial, cfg, config_path);
      cfg.validate();
      return cmd_trial(cfg, outdir, trace);
    }
    if (sweep->parsed()) {
      if (!config_path.empty())
        cfg = merge_config_file(sweep, cfg, config_path);
      cfg.validate();
      return cmd_sweep(cfg, sweep_opt, outdir);
    }
    if (validate->parsed()) return cmd_validate(validate_seed);
    if (plot->parsed()) return cmd_plot(plot_input, plot_field_size, outdir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
