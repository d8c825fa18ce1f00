#ifndef BEAMNET_BEAMFORM_HPP
#define BEAMNET_BEAMFORM_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "beamnet/centroid.hpp"
#include "beamnet/config.hpp"
#include "beamnet/geometry.hpp"
#include "beamnet/graph.hpp"
#include "beamnet/regions.hpp"
#include "beamnet/topology.hpp"

namespace beamnet {

/// One directional transmission sector. width * elements always equals a
/// full circle and range = r0 * elements^(1/alpha); elements = 1 degrades
/// to the omnidirectional disk.
struct SectorBeam {
  NodeId origin = 0;
  double azimuth = 0.0;  // [0, tau)
  double width = kTau;
  double range = 0.0;
  int elements = 1;
};

/// Final connectivity: omni edges plus acknowledged beams are symmetric,
/// unacknowledged beam coverage is directed. A pair never sits in both
/// sets, and the symmetric set only ever grows from the omni base.
class LinkSet {
 public:
  using Pair = std::pair<NodeId, NodeId>;

  static LinkSet from_omni(const Graph& g);

  bool has_symmetric(NodeId u, NodeId v) const;
  bool has_directed(NodeId from, NodeId to) const;

  /// Inserts the unordered pair and retires any directed edge between the
  /// two endpoints, preserving the pair-in-one-set invariant.
  void add_symmetric(NodeId u, NodeId v);

  /// Inserts from->to unless the symmetric pair already exists.
  void add_directed(NodeId from, NodeId to);

  const std::set<Pair>& symmetric_edges() const { return symmetric_; }
  const std::set<Pair>& directed_edges() const { return directed_; }

  /// Undirected graph over the symmetric edges only.
  Graph to_symmetric_graph(std::size_t node_count) const;

 private:
  std::set<Pair> symmetric_;  // normalized u < v
  std::set<Pair> directed_;   // (from, to)
};

/// Region members whose same-region neighbors all sit at a hopcount less
/// than or equal to their own (local maxima of the gradient). Nodes with
/// no same-region neighbor, including isolated ones, qualify vacuously.
/// `members` sorted, `hops` parallel to it; result sorted.
std::vector<NodeId> detect_peripherals(const std::vector<NodeId>& members,
                                       const std::vector<int>& hops,
                                       const Graph& g_topo);

struct SectorGeometry {
  double width;
  double range;
};

/// width = tau / k, range = r0 * k^(1/alpha). Throws on k < 1.
SectorGeometry sector_geometry(int k, double r0, double alpha);

enum class TargetMode : std::uint8_t {
  kNone,         // stay omnidirectional
  kUnknown,      // some centroid was never heard: hopcount infinity
  kKnownForeign, // farthest recorded foreign centroid
  kOwnCentroid,  // own centroid, feasible only beyond one hop
};

struct TargetChoice {
  TargetMode mode = TargetMode::kNone;
  std::vector<NodeId> eligible;  // centroids a beam may lock onto, sorted
};

/// Applies the cohesion rule: unheard centroids (infinite hopcount) beat
/// every known one; otherwise the known foreign centroid with the largest
/// recorded hopcount wins (ties to the lowest id); with no foreign centroid
/// in the world the node aims at its own centroid iff self_hop > 1.
TargetChoice choose_target(const std::map<NodeId, int>& known_heads,
                           int self_hop, NodeId own_centroid,
                           const std::vector<NodeId>& all_centroids);

/// A claimed direction: sector center and angular width.
struct AngularInterval {
  double center;
  double width;
};

/// Strict overlap on the circle: distance between centers under half the
/// summed widths.
bool intervals_overlap(const AngularInterval& a, const AngularInterval& b);

/// Walks azimuths 0, s, 2s, ... and returns the first one whose sector
/// covers some eligible centroid's position while overlapping none of the
/// claimed intervals; nullopt when the full circle fails.
std::optional<double> sweep_for_direction(
    NodeId node, const SectorGeometry& geometry, const Placement& placement,
    const std::vector<NodeId>& eligible,
    const std::vector<AngularInterval>& claimed, double sweep_step);

/// Adds a directed edge origin->v for every node the sector covers, except
/// where a symmetric edge already exists.
void apply_beam(LinkSet& links, const SectorBeam& beam,
                const Placement& placement);

/// The centroid's one-time back-beam: promotes p->centroid to a symmetric
/// link. No-op when the pair is already symmetric; throws std::logic_error
/// when no beam from p reached the centroid.
void acknowledge_beam(LinkSet& links, NodeId centroid, NodeId p);

enum class BeamStatus : std::uint8_t { kFormed, kDropped, kOmni };

struct BeamReportRow {
  NodeId p = 0;
  int k = 1;
  double azimuth = 0.0;
  double width = 0.0;
  double range = 0.0;
  std::optional<NodeId> target;  // realized (formed) or intended (dropped)
  BeamStatus status = BeamStatus::kOmni;
};

struct BeamformResult {
  LinkSet links;
  std::vector<BeamReportRow> report;  // one row per peripheral, ascending
  std::vector<NodeId> peripherals;    // sorted, all regions
  std::uint64_t beams_formed = 0;
  std::uint64_t beams_dropped = 0;
};

/// Whole-phase driver. Peripherals act in ascending node-id order: draw an
/// element count from their own RNG substream, choose a target, sweep
/// avoiding directions already claimed by neighboring peripherals, beam,
/// and collect the acknowledgment from every eligible centroid covered.
BeamformResult run_beamforming(const Graph& g, const Placement& placement,
                               const std::vector<RegionState>& states,
                               const CentroidPhaseResult& centroids,
                               const WorldConfig& cfg);

/// One `p_id k azimuth width range target_centroid status` line per
/// peripheral; `-` for an absent target.
void save_beam_report(const BeamformResult& result, std::ostream& out);

}  // namespace beamnet

#endif  // BEAMNET_BEAMFORM_HPP
