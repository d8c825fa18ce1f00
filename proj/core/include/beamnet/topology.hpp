#ifndef BEAMNET_TOPOLOGY_HPP
#define BEAMNET_TOPOLOGY_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "beamnet/config.hpp"
#include "beamnet/geometry.hpp"
#include "beamnet/graph.hpp"

namespace beamnet {

/// Node positions of one deployed topology; index is the node id.
struct Placement {
  std::vector<Vec2> positions;

  std::size_t node_count() const { return positions.size(); }

  bool operator==(const Placement&) const = default;
};

// Stream tags feeding derive_seed so each phase of a trial draws from its
// own RNG stream regardless of evaluation order.
inline constexpr std::uint64_t kPlacementStream = 1;
inline constexpr std::uint64_t kRegionTieStream = 2;
inline constexpr std::uint64_t kVcoordStream = 3;
inline constexpr std::uint64_t kElementsStream = 4;

/// Drops cfg.n nodes uniformly at random on the square field. Node i's
/// coordinates come from its own substream of `seed`, so placements of a
/// prefix of nodes never change when n grows.
Placement place_nodes(const WorldConfig& cfg, std::uint64_t seed);

/// Connects every pair within `range` of each other (closed disk, compared
/// in squared distance so no square roots enter the decision).
Graph unit_disk_graph(const Placement& placement, double range);

/// One `id x y` line per node, full double precision.
void save_placement(const Placement& placement, std::ostream& out);

/// Parses save_placement output; ids must be 0..n-1 in order.
Placement load_placement(std::istream& in);

}  // namespace beamnet

#endif  // BEAMNET_TOPOLOGY_HPP
