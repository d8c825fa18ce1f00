#ifndef BEAMNET_TRIAL_HPP
#define BEAMNET_TRIAL_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "beamnet/beamform.hpp"
#include "beamnet/centroid.hpp"
#include "beamnet/config.hpp"
#include "beamnet/metrics.hpp"
#include "beamnet/regions.hpp"
#include "beamnet/topology.hpp"

namespace beamnet {

/// All intermediate artifacts of one trial, kept for dumps and invariant
/// checks.
struct TrialWorld {
  Placement placement;
  Graph omni;
  std::vector<RegionState> states;  // after the centroid rewrite
  RunStats formation_stats;
  RegionDiagnostics formation_diag;
  CentroidPhaseResult centroids;
  BeamformResult beams;
};

struct TrialResult {
  bool ok = false;
  std::string failure;  // reason when !ok
  MetricsRecord record;
  WorldConfig config;
  std::shared_ptr<const TrialWorld> world;  // present when ok
};

/// Runs placement, unit-disk wiring, region formation, the centroid phase
/// and beamforming; everything derives from config.seed. Protocol
/// non-convergence is reported as a failed trial, not an exception.
/// `trace` receives the formation engine's per-event lines when set.
TrialResult run_trial(const WorldConfig& config,
                      const TraceLineSink& trace = {});

/// Seed of one sweep cell. Depends on the master seed, n and the seed
/// index but not on the gradient, so gradient arms run on identical
/// topologies and their comparisons pair up.
std::uint64_t sweep_trial_seed(std::uint64_t master, std::uint32_t n,
                               std::uint32_t seed_index);

struct SweepOptions {
  std::vector<std::uint32_t> n_values{20, 60, 120, 200, 400};
  std::vector<int> gradients{3, 6, 10};
  std::uint32_t seeds = 50;
  unsigned jobs = 1;
};

using TrialObserver = std::function<void(const TrialResult&)>;

struct SweepResult {
  std::vector<MetricsRecord> records;  // successful trials, grid order
  std::uint64_t failed = 0;
  std::vector<std::string> failures;  // one logged reason per failed trial
};

/// Full (n, gradient, seed-index) cross product. Trials execute on
/// opt.jobs worker threads; the result is in fixed grid order either way.
/// The observer, when set, sees every TrialResult (serialized by a mutex)
/// while its world payload is still alive.
SweepResult run_sweep(const WorldConfig& base, const SweepOptions& opt,
                      const TrialObserver& observer = {});

}  // namespace beamnet

#endif  // BEAMNET_TRIAL_HPP
