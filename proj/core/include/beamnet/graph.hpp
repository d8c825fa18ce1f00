#ifndef BEAMNET_GRAPH_HPP
#define BEAMNET_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace beamnet {

using NodeId = std::uint32_t;

/// Simple undirected graph over ids 0..node_count-1. No self-loops, no
/// duplicate edges; adjacency lists are kept sorted so iteration order is
/// deterministic.
class Graph {
 public:
  explicit Graph(std::size_t node_count);

  std::size_t node_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// Inserts the undirected edge u-v. Re-inserting an existing edge is a
  /// no-op; self-loops and out-of-range endpoints throw.
  void add_edge(NodeId u, NodeId v);

  bool has_edge(NodeId u, NodeId v) const;
  const std::vector<NodeId>& neighbors(NodeId v) const;
  std::size_t degree(NodeId v) const { return neighbors(v).size(); }

  /// All edges as (u, v) pairs with u < v, sorted lexicographically.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  /// Subgraph induced by `members`, with ids relabeled 0..members.size()-1
  /// in the order given.
  Graph induced_subgraph(const std::vector<NodeId>& members) const;

  /// Plain-text edge list: header line "nodes N", then one "u v" per line.
  void save(std::ostream& out) const;
  static Graph load(std::istream& in);

 private:
  void check_node(NodeId v) const;

  std::vector<std::vector<NodeId>> adj_;
  std::size_t edge_count_ = 0;
};

/// BFS hop distances from `source`; nodes in other components are absent.
std::map<NodeId, int> shortest_path_lengths(const Graph& g, NodeId source);

/// Partition of all node ids into connected components, each sorted, ordered
/// by smallest member.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

/// Mean hop distance over unordered pairs of nodes in the same component;
/// 0 when no connected pair exists.
double average_path_length(const Graph& g);

/// Watts-Strogatz clustering coefficient: mean over all nodes of the local
/// coefficient, where nodes of degree < 2 contribute 0.
double clustering_coefficient(const Graph& g);

/// Betweenness of v restricted to its ego network (v, its neighbors, and
/// the edges among them): sum over unordered non-adjacent neighbor pairs of
/// 1 / (number of their common neighbors within the ego network).
double egocentric_betweenness(const Graph& g, NodeId v);

/// Reachable-node count divided by the sum of hop distances from v;
/// 0 for an isolated node.
double closeness_centrality(const Graph& g, NodeId v);

}  // namespace beamnet

#endif  // BEAMNET_GRAPH_HPP
