#include "beamnet/beamform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "beamnet/rng.hpp"

namespace beamnet {

LinkSet LinkSet::from_omni(const Graph& g) {
  LinkSet links;
  for (const auto& e : g.edges()) links.symmetric_.insert(e);
  return links;
}

bool LinkSet::has_symmetric(NodeId u, NodeId v) const {
  return symmetric_.count({std::min(u, v), std::max(u, v)}) != 0;
}

bool LinkSet::has_directed(NodeId from, NodeId to) const {
  return directed_.count({from, to}) != 0;
}

void LinkSet::add_symmetric(NodeId u, NodeId v) {
  symmetric_.insert({std::min(u, v), std::max(u, v)});
  directed_.erase({u, v});
  directed_.erase({v, u});
}

void LinkSet::add_directed(NodeId from, NodeId to) {
  if (has_symmetric(from, to)) return;
  directed_.insert({from, to});
}

Graph LinkSet::to_symmetric_graph(std::size_t node_count) const {
  Graph g(node_count);
  for (const auto& [u, v] : symmetric_) g.add_edge(u, v);
  return g;
}

std::vector<NodeId> detect_peripherals(const std::vector<NodeId>& members,
                                       const std::vector<int>& hops,
                                       const Graph& g_topo) {
  if (members.size() != hops.size())
    throw std::invalid_argument("detect_peripherals: size mismatch");
  std::vector<NodeId> result;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const NodeId v = members[i];
    bool peripheral = true;
    for (NodeId u : g_topo.neighbors(v)) {
      const auto at = std::lower_bound(members.begin(), members.end(), u);
      if (at == members.end() || *at != u) continue;  // foreign neighbor
      const int neighbor_hop = hops[at - members.begin()];
      if (neighbor_hop > hops[i]) {
        peripheral = false;
        break;
      }
    }
    if (peripheral) result.push_back(v);
  }
  return result;
}

SectorGeometry sector_geometry(int k, double r0, double alpha) {
  if (k < 1) throw std::invalid_argument("sector_geometry: k must be >= 1");
  return {kTau / k, r0 * std::pow(k, 1.0 / alpha)};
}

TargetChoice choose_target(const std::map<NodeId, int>& known_heads,
                           int self_hop, NodeId own_centroid,
                           const std::vector<NodeId>& all_centroids) {
  TargetChoice choice;
  std::vector<NodeId> unknown;
  bool any_foreign = false;
  NodeId farthest = 0;
  int farthest_hop = -1;
  for (NodeId c : all_centroids) {
    if (c == own_centroid) continue;
    any_foreign = true;
    const auto it = known_heads.find(c);
    if (it == known_heads.end()) {
      unknown.push_back(c);
    } else if (it->second > farthest_hop) {
      farthest_hop = it->second;
      farthest = c;
    }
  }
  if (!unknown.empty()) {
    choice.mode = TargetMode::kUnknown;
    choice.eligible = std::move(unknown);
  } else if (farthest_hop >= 0) {
    choice.mode = TargetMode::kKnownForeign;
    choice.eligible = {farthest};
  } else if (!any_foreign && self_hop > 1) {
    choice.mode = TargetMode::kOwnCentroid;
    choice.eligible = {own_centroid};
  }
  return choice;
}

bool intervals_overlap(const AngularInterval& a, const AngularInterval& b) {
  return angular_distance(a.center, b.center) < (a.width + b.width) / 2.0;
}

std::optional<double> sweep_for_direction(
    NodeId node, const SectorGeometry& geometry, const Placement& placement,
    const std::vector<NodeId>& eligible,
    const std::vector<AngularInterval>& claimed, double sweep_step) {
  const Vec2 origin = placement.positions[node];
  const int steps = static_cast<int>(std::lround(kTau / sweep_step));
  for (int i = 0; i < steps; ++i) {
    const double az = i * sweep_step;
    bool covers = false;
    for (NodeId c : eligible) {
      if (c == node) continue;
      if (sector_contains(origin, az, geometry.width, geometry.range,
                          placement.positions[c])) {
        covers = true;
        break;
      }
    }
    if (!covers) continue;
    const AngularInterval mine{az, geometry.width};
    bool blocked = false;
    for (const AngularInterval& theirs : claimed)
      if (intervals_overlap(mine, theirs)) {
        blocked = true;
        break;
      }
    if (!blocked) return az;
  }
  return std::nullopt;
}

void apply_beam(LinkSet& links, const SectorBeam& beam,
                const Placement& placement) {
  const Vec2 origin = placement.positions[beam.origin];
  for (NodeId v = 0; v < placement.node_count(); ++v) {
    if (v == beam.origin) continue;
    if (sector_contains(origin, beam.azimuth, beam.width, beam.range,
                        placement.positions[v]))
      links.add_directed(beam.origin, v);
  }
}

void acknowledge_beam(LinkSet& links, NodeId centroid, NodeId p) {
  if (links.has_symmetric(p, centroid)) return;
  if (!links.has_directed(p, centroid))
    throw std::logic_error("acknowledge_beam: no beam from p to centroid");
  links.add_symmetric(p, centroid);
}

BeamformResult run_beamforming(const Graph& g, const Placement& placement,
                               const std::vector<RegionState>& states,
                               const CentroidPhaseResult& centroids,
                               const WorldConfig& cfg) {
  BeamformResult result;
  result.links = LinkSet::from_omni(g);

  std::vector<int> hop_of(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) hop_of[v] = states[v].hop_count;

  std::vector<NodeId> all_centroids;
  for (const RegionCentroid& r : centroids.regions) {
    std::vector<int> hops(r.members.size());
    for (std::size_t i = 0; i < r.members.size(); ++i)
      hops[i] = hop_of[r.members[i]];
    const auto peripheral = detect_peripherals(r.members, hops, g);
    result.peripherals.insert(result.peripherals.end(), peripheral.begin(),
                              peripheral.end());
    all_centroids.push_back(r.centroid);
  }
  std::sort(result.peripherals.begin(), result.peripherals.end());
  std::sort(all_centroids.begin(), all_centroids.end());

  const std::uint64_t phase = derive_seed(cfg.seed, kElementsStream);
  std::map<NodeId, AngularInterval> claims;  // formed beams only
  for (NodeId p : result.peripherals) {
    Rng rng(derive_seed(phase, p));
    const int k = static_cast<int>(rng.uniform_int(
        static_cast<std::uint64_t>(cfg.elements_min),
        static_cast<std::uint64_t>(cfg.elements_max)));
    const SectorGeometry geom =
        sector_geometry(k, cfg.radio_range, cfg.alpha);

    BeamReportRow row;
    row.p = p;
    row.k = k;
    row.width = geom.width;
    row.range = geom.range;

    const TargetChoice choice =
        choose_target(states[p].known_heads, hop_of[p],
                      centroids.centroid_of_node[p], all_centroids);
    if (choice.mode == TargetMode::kNone) {
      row.status = BeamStatus::kOmni;
      result.report.push_back(row);
      continue;
    }
    if (choice.mode != TargetMode::kUnknown) row.target = choice.eligible[0];

    std::vector<AngularInterval> neighbor_claims;
    for (NodeId u : g.neighbors(p)) {
      const auto it = claims.find(u);
      if (it != claims.end()) neighbor_claims.push_back(it->second);
    }

    const auto az = sweep_for_direction(p, geom, placement, choice.eligible,
                                        neighbor_claims, cfg.sweep_step);
    if (!az) {
      row.status = BeamStatus::kDropped;
      ++result.beams_dropped;
      result.report.push_back(row);
      continue;
    }

    const SectorBeam beam{p, *az, geom.width, geom.range, k};
    apply_beam(result.links, beam, placement);
    claims.emplace(p, AngularInterval{*az, geom.width});
    for (NodeId c : choice.eligible) {
      if (!sector_contains(placement.positions[p], *az, geom.width,
                           geom.range, placement.positions[c]))
        continue;
      acknowledge_beam(result.links, c, p);
      if (!row.target) row.target = c;  // realized target, lowest id
    }
    row.status = BeamStatus::kFormed;
    row.azimuth = *az;
    ++result.beams_formed;
    result.report.push_back(row);
  }
  return result;
}

void save_beam_report(const BeamformResult& result, std::ostream& out) {
  char buf[160];
  for (const BeamReportRow& row : result.report) {
    const char* status = row.status == BeamStatus::kFormed    ? "formed"
                         : row.status == BeamStatus::kDropped ? "dropped"
                                                              : "omni";
    std::string target = row.target ? std::to_string(*row.target) : "-";
    std::snprintf(buf, sizeof buf, "%u %d %.17g %.17g %.17g %s %s\n", row.p,
                  row.k, row.azimuth, row.width, row.range, target.c_str(),
                  status);
    out << buf;
  }
}

}  // namespace beamnet
