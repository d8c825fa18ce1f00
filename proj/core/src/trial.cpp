#include "beamnet/trial.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "beamnet/rng.hpp"

namespace beamnet {

TrialResult run_trial(const WorldConfig& config, const TraceLineSink& trace) {
  TrialResult result;
  result.config = config;
  try {
    config.validate();
    auto world = std::make_shared<TrialWorld>(TrialWorld{
        place_nodes(config, config.seed), Graph(1), {}, {}, {}, {}, {}});
    world->omni = unit_disk_graph(world->placement, config.radio_range);

    RegionOptions opt;
    opt.gradient = config.gradient;
    auto formation =
        run_region_formation(world->omni, opt, config.seed, {}, trace);
    world->states = std::move(formation.states);
    world->formation_stats = formation.stats;
    world->formation_diag = formation.diag;

    world->centroids = run_centroid_phase(world->omni, world->states, config);
    if (!world->centroids.converged) {
      result.failure = "centroid averaging missed the round cap";
      return result;
    }

    world->beams = run_beamforming(world->omni, world->placement,
                                   world->states, world->centroids, config);

    result.record =
        compute_metrics(world->omni, world->beams.links,
                        world->centroids.regions.size(),
                        world->beams.peripherals.size());
    result.record.gradient = config.gradient;
    result.record.seed = config.seed;
    result.world = std::move(world);
    result.ok = true;
  } catch (const std::exception& e) {
    result.ok = false;
    result.failure = e.what();
    result.world.reset();
  }
  return result;
}

std::uint64_t sweep_trial_seed(std::uint64_t master, std::uint32_t n,
                               std::uint32_t seed_index) {
  return derive_seed(derive_seed(master, n), seed_index);
}

SweepResult run_sweep(const WorldConfig& base, const SweepOptions& opt,
                      const TrialObserver& observer) {
  std::vector<WorldConfig> cells;
  for (std::uint32_t n : opt.n_values)
    for (int g : opt.gradients)
      for (std::uint32_t s = 0; s < opt.seeds; ++s) {
        WorldConfig cfg = base;
        cfg.n = n;
        cfg.gradient = g;
        cfg.seed = sweep_trial_seed(base.seed, n, s);
        cells.push_back(cfg);
      }

  std::vector<std::optional<MetricsRecord>> slots(cells.size());
  std::vector<std::string> reasons(cells.size());
  std::atomic<std::size_t> next{0};
  std::mutex observer_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      TrialResult trial = run_trial(cells[i]);
      if (observer) {
        std::lock_guard lock(observer_mutex);
        observer(trial);
      }
      if (trial.ok)
        slots[i] = trial.record;
      else
        reasons[i] = trial.failure;
    }
  };

  const unsigned jobs = std::max(1u, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  SweepResult result;
  result.records.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (slots[i]) {
      result.records.push_back(*slots[i]);
    } else {
      ++result.failed;
      result.failures.push_back(reasons[i]);
    }
  }
  return result;
}

}  // namespace beamnet
