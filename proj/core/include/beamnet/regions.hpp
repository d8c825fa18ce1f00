#ifndef BEAMNET_REGIONS_HPP
#define BEAMNET_REGIONS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "beamnet/graph.hpp"
#include "beamnet/rng.hpp"
#include "beamnet/sync_engine.hpp"

namespace beamnet {

enum class NodeStatus : std::uint8_t { kUninhibited, kInhibited };

/// Head-election broadcast. hop_count is the sender's distance to the head.
struct HeadMessage {
  NodeId head_id = 0;
  int hop_count = 0;
  int head_degree = 0;
};

std::ostream& operator<<(std::ostream& out, const HeadMessage& msg);

/// Per-node election state.
///
/// Invariants: status == kUninhibited iff head_id == self and hop_count == 0;
/// hop_count never exceeds the gradient bound; known_heads always holds an
/// entry for the node's own head.
struct RegionState {
  NodeId self = 0;
  NodeStatus status = NodeStatus::kUninhibited;
  NodeId head_id = 0;
  int head_degree = 0;
  int hop_count = 0;
  std::map<NodeId, int> known_heads;  // head id -> smallest hopcount heard

  bool inhibited() const { return status == NodeStatus::kInhibited; }
};

struct RegionOptions {
  int gradient = 4;
  // Tie case between equal-degree heads at equal hopcount: false draws a
  // coin per the election rule, true prefers the lower head id.
  bool deterministic_ties = false;
};

struct RegionDiagnostics {
  std::uint64_t malformed_dropped = 0;  // messages with hop_count > gradient
  std::uint64_t adoptions = 0;
  std::uint64_t rescued = 0;  // orphans reverted to singleton heads
};

struct RegionFormationResult {
  std::vector<RegionState> states;
  RunStats stats;
  RegionDiagnostics diag;
};

/// Every node starts as its own head with hop 0 and announces itself.
RegionState init_region_state(NodeId node, int degree);

/// Applies one received HeadMessage to `state`.
///
/// Messages with hop_count > gradient are dropped and counted. Otherwise
/// known_heads takes the min hopcount heard per head. The sender's head is
/// adopted iff its degree beats the current head's, or degrees are equal
/// and the resulting hopcount (msg.hop_count + 1) improves on the current
/// one, or everything ties and the coin (or the lower head id, in
/// deterministic mode) picks the newcomer. Adoption requires
/// msg.hop_count < gradient so the new hopcount stays within the bound,
/// and returns the message to rebroadcast, already incremented.
std::optional<HeadMessage> process_head_message(RegionState& state,
                                                const HeadMessage& msg,
                                                const RegionOptions& opt,
                                                Rng& rng,
                                                RegionDiagnostics& diag);

/// Runs the election to quiescence on the synchronous engine and returns
/// the per-node states. Throws std::runtime_error if the engine bound is
/// hit without quiescence or a round check fails.
///
/// After quiescence, inhibited nodes left without a same-head neighbor one
/// hop closer to the head (possible when a takeover wave saturates at the
/// gradient bound) are reverted to singleton heads so that every region
/// stays connected and gradient-well-formed; diag.rescued counts them.
RegionFormationResult run_region_formation(const Graph& g,
                                           const RegionOptions& opt,
                                           std::uint64_t seed,
                                           const RoundTrace& trace = {},
                                           const TraceLineSink& lines = {});

/// Region ids -> member lists, keyed by head id, members sorted.
std::map<NodeId, std::vector<NodeId>> regions_by_head(
    const std::vector<RegionState>& states);

/// One `node head hopcount` line per node (the gradient surface dump).
void save_region_dump(const std::vector<RegionState>& states,
                      std::ostream& out);

}  // namespace beamnet

#endif  // BEAMNET_REGIONS_HPP
