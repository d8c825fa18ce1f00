#include "beamnet/centroid.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

#include "beamnet/rng.hpp"
#include "beamnet/topology.hpp"

namespace beamnet {

std::vector<VirtualCoordinate> assign_virtual_coordinates(std::size_t n,
                                                          std::uint64_t seed) {
  const std::uint64_t phase = derive_seed(seed, kVcoordStream);
  std::vector<VirtualCoordinate> coords;
  coords.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(derive_seed(phase, i));
    const Vec2 p{rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)};
    coords.push_back({p, p});
  }
  return coords;
}

std::vector<Vec2> averaging_round(const Graph& region_subgraph,
                                  const std::vector<Vec2>& current) {
  if (current.size() != region_subgraph.node_count())
    throw std::invalid_argument("averaging_round: size mismatch");
  std::vector<Vec2> next(current.size());
  for (NodeId v = 0; v < current.size(); ++v) {
    Vec2 sum = current[v];
    for (NodeId u : region_subgraph.neighbors(v)) sum = sum + current[u];
    next[v] = sum / (1.0 + static_cast<double>(region_subgraph.degree(v)));
  }
  return next;
}

bool detect_convergence(const std::vector<Vec2>& coords, double delta) {
  if (!(delta > 0.0))
    throw std::invalid_argument("detect_convergence: delta must be positive");
  if (coords.size() < 2) return true;
  double min_x = coords[0].x, max_x = coords[0].x;
  double min_y = coords[0].y, max_y = coords[0].y;
  for (const Vec2& p : coords) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double dx = max_x - min_x;
  const double dy = max_y - min_y;
  const double delta_sq = delta * delta;
  // Bounding-box diagonal bounds the max pairwise distance from above, each
  // box side from below; the quadratic scan runs only between those bounds.
  if (dx * dx + dy * dy < delta_sq) return true;
  if (dx >= delta || dy >= delta) return false;
  double worst = 0.0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = i + 1; j < coords.size(); ++j)
      worst = std::max(worst, squared_distance(coords[i], coords[j]));
  return worst < delta_sq;
}

NodeId elect_centroid(const std::vector<NodeId>& members,
                      const std::vector<VirtualCoordinate>& coords,
                      Vec2 consensus, double epsilon, const Graph& g_topo) {
  if (members.empty())
    throw std::invalid_argument("elect_centroid: empty region");
  std::vector<NodeId> candidates;
  for (NodeId v : members)
    if (distance(coords[v].initial, consensus) < epsilon)
      candidates.push_back(v);
  if (candidates.empty()) {
    NodeId nearest = members[0];
    double best = distance(coords[nearest].initial, consensus);
    for (NodeId v : members) {
      const double d = distance(coords[v].initial, consensus);
      if (d < best) {
        best = d;
        nearest = v;
      }
    }
    candidates.push_back(nearest);
  }
  NodeId winner = candidates[0];
  double best_score = -1.0;
  for (NodeId v : candidates) {
    const double score = static_cast<double>(g_topo.degree(v)) +
                         egocentric_betweenness(g_topo, v);
    if (score > best_score) {
      best_score = score;
      winner = v;
    }
  }
  return winner;
}

std::vector<int> rebuild_gradient_from_centroid(
    const std::vector<NodeId>& members, NodeId centroid,
    const Graph& g_topo) {
  const Graph sub = g_topo.induced_subgraph(members);
  const auto at = std::lower_bound(members.begin(), members.end(), centroid);
  if (at == members.end() || *at != centroid)
    throw std::invalid_argument("rebuild_gradient: centroid not a member");
  const NodeId local = static_cast<NodeId>(at - members.begin());
  const auto dist = shortest_path_lengths(sub, local);
  std::vector<int> hops(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto it = dist.find(static_cast<NodeId>(i));
    if (it == dist.end())
      throw std::runtime_error("rebuild_gradient: region not connected");
    hops[i] = it->second;
  }
  return hops;
}

CentroidPhaseResult run_centroid_phase(const Graph& g,
                                       std::vector<RegionState>& states,
                                       const WorldConfig& cfg) {
  const std::size_t n = g.node_count();
  if (states.size() != n)
    throw std::invalid_argument("run_centroid_phase: state/graph mismatch");
  auto coords = assign_virtual_coordinates(n, cfg.seed);
  const auto regions = regions_by_head(states);

  CentroidPhaseResult result;
  result.centroid_of_node.resize(n);
  for (const auto& [old_head, members] : regions) {
    const Graph sub = g.induced_subgraph(members);
    std::vector<Vec2> cur(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      cur[i] = coords[members[i]].current;

    int rounds = 0;
    while (!detect_convergence(cur, cfg.delta) &&
           rounds < kMaxAveragingRounds) {
      cur = averaging_round(sub, cur);
      ++rounds;
    }
    if (!detect_convergence(cur, cfg.delta)) result.converged = false;
    for (std::size_t i = 0; i < members.size(); ++i)
      coords[members[i]].current = cur[i];

    Vec2 consensus{0.0, 0.0};
    for (const Vec2& p : cur) consensus = consensus + p;
    consensus = consensus / static_cast<double>(cur.size());

    const NodeId centroid =
        elect_centroid(members, coords, consensus, cfg.epsilon, g);
    const auto hops = rebuild_gradient_from_centroid(members, centroid, g);

    for (std::size_t i = 0; i < members.size(); ++i) {
      const NodeId v = members[i];
      RegionState& st = states[v];
      st.head_id = centroid;
      st.head_degree = static_cast<int>(g.degree(centroid));
      st.hop_count = hops[i];
      st.status =
          v == centroid ? NodeStatus::kUninhibited : NodeStatus::kInhibited;
      st.known_heads.erase(old_head);
      st.known_heads[centroid] = std::max(hops[i] - 1, 0);
      result.centroid_of_node[v] = centroid;
      if (hops[i] > cfg.gradient) ++result.gradient_violations;
    }

    // The rebuild flood leaks one hop past the region boundary: adjacent
    // outsiders hear the centroid at the smallest hopcount any neighboring
    // member announced and drop their entry for the retired head.
    std::map<NodeId, int> heard;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (NodeId u : g.neighbors(members[i])) {
        if (std::binary_search(members.begin(), members.end(), u)) continue;
        const auto [it, fresh] = heard.try_emplace(u, hops[i]);
        if (!fresh && hops[i] < it->second) it->second = hops[i];
      }
    for (const auto& [u, hop] : heard) {
      states[u].known_heads.erase(old_head);
      const auto [it, fresh] = states[u].known_heads.try_emplace(centroid, hop);
      if (!fresh && hop < it->second) it->second = hop;
    }

    result.regions.push_back(
        {old_head, centroid, consensus, rounds, members});
  }
  return result;
}

void save_centroid_dump(const CentroidPhaseResult& result,
                        std::ostream& out) {
  char buf[128];
  for (const RegionCentroid& r : result.regions) {
    std::snprintf(buf, sizeof buf, "%u %u %.17g %.17g %d\n", r.old_head,
                  r.centroid, r.consensus.x, r.consensus.y, r.rounds);
    out << buf;
  }
}

}  // namespace beamnet
