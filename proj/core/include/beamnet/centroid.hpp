#ifndef BEAMNET_CENTROID_HPP
#define BEAMNET_CENTROID_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "beamnet/config.hpp"
#include "beamnet/geometry.hpp"
#include "beamnet/graph.hpp"
#include "beamnet/regions.hpp"

namespace beamnet {

/// Virtual-coordinate pair of one node: the random draw it started from
/// and the averaging iterate. `current` stays inside the convex hull of
/// the region's initial coordinates.
struct VirtualCoordinate {
  Vec2 initial;
  Vec2 current;
};

inline constexpr int kMaxAveragingRounds = 10000;

/// Independent uniform draws from [0,1]^2, one per node, each from its own
/// substream of `seed`.
std::vector<VirtualCoordinate> assign_virtual_coordinates(std::size_t n,
                                                          std::uint64_t seed);

/// One synchronous averaging step on a region's induced subgraph: every
/// node moves to the equal-weight mean of its closed neighborhood.
std::vector<Vec2> averaging_round(const Graph& region_subgraph,
                                  const std::vector<Vec2>& current);

/// True iff the maximum pairwise distance among coords is strictly below
/// delta. The exact quadratic check runs only when the coordinate bounding
/// box cannot decide.
bool detect_convergence(const std::vector<Vec2>& coords, double delta);

/// Picks the region's centroid: candidates are members whose initial
/// coordinate lies within epsilon of the consensus point (nearest member
/// as fallback when none qualifies); among candidates the highest
/// degree + egocentric betweenness on the full topology wins, ties to the
/// lowest id. `members` must be sorted.
NodeId elect_centroid(const std::vector<NodeId>& members,
                      const std::vector<VirtualCoordinate>& coords,
                      Vec2 consensus, double epsilon, const Graph& g_topo);

/// BFS hopcounts to the centroid inside the region's induced subgraph,
/// returned per member in `members` order. Values above the gradient bound
/// are recorded as-is.
std::vector<int> rebuild_gradient_from_centroid(
    const std::vector<NodeId>& members, NodeId centroid, const Graph& g_topo);

/// Per-region outcome of the centroid phase.
struct RegionCentroid {
  NodeId old_head = 0;
  NodeId centroid = 0;
  Vec2 consensus;
  int rounds = 0;  // averaging rounds until convergence
  std::vector<NodeId> members;  // sorted
};

struct CentroidPhaseResult {
  std::vector<RegionCentroid> regions;  // ascending old_head
  std::vector<NodeId> centroid_of_node;  // node -> centroid of its region
  std::uint64_t gradient_violations = 0;  // rebuilt hopcounts above g
  bool converged = true;  // false when any region hit the round cap
};

/// Full phase over all regions: averaging to consensus, election, gradient
/// rebuild and the known-heads rewrite. `states` is updated in place:
/// head_id becomes the centroid, hop_count the rebuilt distance, status
/// follows the new head, and every node adjacent to a region hears that
/// region's new centroid at the smallest hopcount any adjacent member
/// announced (stale entries of unheard regions are kept).
CentroidPhaseResult run_centroid_phase(const Graph& g,
                                       std::vector<RegionState>& states,
                                       const WorldConfig& cfg);

/// One `region_head centroid_id consensus_x consensus_y rounds` line per
/// region, keyed by the pre-election head.
void save_centroid_dump(const CentroidPhaseResult& result, std::ostream& out);

}  // namespace beamnet

#endif  // BEAMNET_CENTROID_HPP
