#ifndef BEAMNET_REFERENCE_HPP
#define BEAMNET_REFERENCE_HPP

#include <cstddef>
#include <vector>

#include "beamnet/graph.hpp"

namespace beamnet::reference {

// Brute-force reference implementations, deliberately written along
// different algorithmic routes than the production code in graph.cpp.
// They back the `validate` subcommand and the oracle test suites.

/// All-pairs hop distances by Floyd-Warshall; -1 marks unreachable pairs.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

/// Component count by union-find over the edge list.
std::size_t component_count(const Graph& g);

/// Mean finite off-diagonal entry of the Floyd-Warshall matrix.
double average_path_length(const Graph& g);

/// Clustering coefficient by whole-graph triangle enumeration over node
/// triples, using only edge lookups.
double clustering_coefficient(const Graph& g);

/// Exact betweenness of one vertex by path counting over all BFS pairs:
/// sum over unordered pairs (s,t), s,t != v, of sigma_st(v) / sigma_st.
double betweenness(const Graph& g, NodeId v);

/// Betweenness of v on its extracted ego subgraph.
double egocentric_betweenness(const Graph& g, NodeId v);

/// Closeness from the Floyd-Warshall row of v.
double closeness_centrality(const Graph& g, NodeId v);

}  // namespace beamnet::reference

#endif  // BEAMNET_REFERENCE_HPP
