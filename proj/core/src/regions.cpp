#include "beamnet/regions.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "beamnet/topology.hpp"

namespace beamnet {

std::ostream& operator<<(std::ostream& out, const HeadMessage& msg) {
  return out << "head=" << msg.head_id << " hop=" << msg.hop_count
             << " deg=" << msg.head_degree;
}

RegionState init_region_state(NodeId node, int degree) {
  RegionState st;
  st.self = node;
  st.status = NodeStatus::kUninhibited;
  st.head_id = node;
  st.head_degree = degree;
  st.hop_count = 0;
  st.known_heads[node] = 0;
  return st;
}

std::optional<HeadMessage> process_head_message(RegionState& state,
                                                const HeadMessage& msg,
                                                const RegionOptions& opt,
                                                Rng& rng,
                                                RegionDiagnostics& diag) {
  if (msg.hop_count < 0 || msg.hop_count > opt.gradient) {
    ++diag.malformed_dropped;
    return std::nullopt;
  }
  auto [entry, fresh] = state.known_heads.try_emplace(msg.head_id,
                                                      msg.hop_count);
  if (!fresh && msg.hop_count < entry->second) entry->second = msg.hop_count;

  // A node never re-adopts itself from an echo of its old headship.
  if (msg.head_id == state.self) return std::nullopt;
  // Adoption would put the node at msg.hop_count + 1, so the guard keeps
  // every hopcount within the gradient bound.
  if (msg.hop_count >= opt.gradient) return std::nullopt;

  const int new_hop = msg.hop_count + 1;
  bool adopt = false;
  if (msg.head_degree > state.head_degree) {
    adopt = true;
  } else if (msg.head_degree == state.head_degree) {
    if (new_hop < state.hop_count) {
      adopt = true;
    } else if (new_hop == state.hop_count && msg.head_id != state.head_id) {
      adopt = opt.deterministic_ties ? msg.head_id < state.head_id
                                     : rng.coin();
    }
  }
  if (!adopt) return std::nullopt;

  state.status = NodeStatus::kInhibited;
  state.head_id = msg.head_id;
  state.head_degree = msg.head_degree;
  state.hop_count = new_hop;
  ++diag.adoptions;
  return HeadMessage{msg.head_id, new_hop, msg.head_degree};
}

namespace {

void check_round_invariants(const std::vector<RegionState>& states,
                            const RegionOptions& opt, int round) {
  for (const RegionState& st : states) {
    if (st.hop_count > opt.gradient)
      throw std::runtime_error(
          "region formation: hopcount exceeded gradient at round " +
          std::to_string(round));
    const bool is_self_head = st.head_id == st.self && st.hop_count == 0;
    if (is_self_head == st.inhibited())
      throw std::runtime_error(
          "region formation: status/head mismatch at round " +
          std::to_string(round));
  }
}

// Reverts inhibited nodes whose uphill link died (their head chain was
// absorbed by a takeover wave that saturated at the gradient bound) back
// to singleton heads, repeating until no orphan remains.
void rescue_orphans(const Graph& g, std::vector<RegionState>& states,
                    RegionDiagnostics& diag) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      RegionState& st = states[v];
      if (!st.inhibited()) continue;
      bool has_parent = false;
      for (NodeId u : g.neighbors(v)) {
        if (states[u].head_id == st.head_id &&
            states[u].hop_count == st.hop_count - 1) {
          has_parent = true;
          break;
        }
      }
      if (has_parent) continue;
      st.status = NodeStatus::kUninhibited;
      st.head_id = st.self;
      st.head_degree = static_cast<int>(g.degree(v));
      st.hop_count = 0;
      ++diag.rescued;
      changed = true;
    }
  }
}

}  // namespace

RegionFormationResult run_region_formation(const Graph& g,
                                           const RegionOptions& opt,
                                           std::uint64_t seed,
                                           const RoundTrace& trace,
                                           const TraceLineSink& lines) {
  const std::size_t n = g.node_count();
  RegionFormationResult result;
  result.states.reserve(n);
  std::vector<Rng> rngs;
  rngs.reserve(n);
  const std::uint64_t phase = derive_seed(seed, kRegionTieStream);
  for (NodeId v = 0; v < n; ++v) {
    result.states.push_back(init_region_state(v, static_cast<int>(
                                                     g.degree(v))));
    rngs.emplace_back(derive_seed(phase, v));
  }

  auto step = [&](NodeId v, int round,
                  const std::vector<Envelope<HeadMessage>>& inbox,
                  Outbox<HeadMessage>& out) {
    RegionState& st = result.states[v];
    if (round == 0) {
      out.broadcast(HeadMessage{st.head_id, st.hop_count, st.head_degree});
      return;
    }
    for (const Envelope<HeadMessage>& env : inbox) {
      auto rebroadcast = process_head_message(st, env.payload, opt, rngs[v],
                                              result.diag);
      if (rebroadcast) out.broadcast(*rebroadcast);
    }
  };

  RoundTrace checked_trace = [&](int round, std::size_t sent) {
    check_round_invariants(result.states, opt, round);
    if (trace) trace(round, sent);
  };
  result.stats = run_rounds<HeadMessage>(g, step, /*max_rounds=*/-1,
                                         checked_trace, lines);
  if (!result.stats.quiescent)
    throw std::runtime_error(
        "region formation: no quiescence within the engine bound");

  rescue_orphans(g, result.states, result.diag);
  return result;
}

std::map<NodeId, std::vector<NodeId>> regions_by_head(
    const std::vector<RegionState>& states) {
  std::map<NodeId, std::vector<NodeId>> regions;
  for (const RegionState& st : states) regions[st.head_id].push_back(st.self);
  return regions;
}

void save_region_dump(const std::vector<RegionState>& states,
                      std::ostream& out) {
  for (const RegionState& st : states)
    out << st.self << ' ' << st.head_id << ' ' << st.hop_count << '\n';
}

}  // namespace beamnet
