#include "beamnet/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace beamnet {

Graph::Graph(std::size_t node_count) : adj_(node_count) {
  if (node_count == 0) throw std::invalid_argument("graph needs at least one node");
}

void Graph::check_node(NodeId v) const {
  if (v >= adj_.size()) {
    throw std::invalid_argument("node id " + std::to_string(v) + " out of range (node count " +
                                std::to_string(adj_.size()) + ")");
  }
}

void Graph::add_edge(NodeId u, NodeId v) {
  check_node(u);
  check_node(v);
  if (u == v) throw std::invalid_argument("self-loop on node " + std::to_string(u));
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return;
  nu.insert(it, v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  const auto& nu = adj_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

const std::vector<NodeId>& Graph::neighbors(NodeId v) const {
  check_node(v);
  return adj_[v];
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < adj_.size(); ++u) {
    for (NodeId v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced_subgraph(const std::vector<NodeId>& members) const {
  Graph sub(members.size());
  std::map<NodeId, NodeId> local;
  for (NodeId i = 0; i < members.size(); ++i) {
    check_node(members[i]);
    local[members[i]] = i;
  }
  for (NodeId i = 0; i < members.size(); ++i) {
    for (NodeId w : adj_[members[i]]) {
      auto it = local.find(w);
      if (it != local.end() && i < it->second) sub.add_edge(i, it->second);
    }
  }
  return sub;
}

void Graph::save(std::ostream& out) const {
  out << "nodes " << adj_.size() << "\n";
  for (auto [u, v] : edges()) out << u << " " << v << "\n";
}

Graph Graph::load(std::istream& in) {
  std::string tag;
  std::size_t n = 0;
  if (!(in >> tag >> n) || tag != "nodes") {
    throw std::runtime_error("edge-list header must be 'nodes N'");
  }
  Graph g(n);
  NodeId u, v;
  while (in >> u >> v) g.add_edge(u, v);
  return g;
}

std::map<NodeId, int> shortest_path_lengths(const Graph& g, NodeId source) {
  if (source >= g.node_count()) {
    throw std::invalid_argument("BFS source " + std::to_string(source) + " out of range");
  }
  std::map<NodeId, int> dist;
  std::deque<NodeId> queue;
  dist[source] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    const int du = dist[u];
    for (NodeId w : g.neighbors(u)) {
      if (dist.emplace(w, du + 1).second) queue.push_back(w);
    }
  }
  return dist;
}

namespace {

// Flat BFS used by the metric loops; -1 marks unreachable.
void bfs_fill(const Graph& g, NodeId source, std::vector<int>& dist) {
  std::fill(dist.begin(), dist.end(), -1);
  std::deque<NodeId> queue;
  dist[source] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (NodeId w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
}

}  // namespace

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<NodeId>> components;
  for (NodeId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<NodeId> comp;
    std::deque<NodeId> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (NodeId w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

double average_path_length(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<int> dist(n);
  long double total = 0.0L;
  std::uint64_t pairs = 0;
  for (NodeId s = 0; s < n; ++s) {
    bfs_fill(g, s, dist);
    for (NodeId t = s + 1; t < n; ++t) {
      if (dist[t] > 0) {
        total += dist[t];
        ++pairs;
      }
    }
  }
  return pairs == 0 ? 0.0 : static_cast<double>(total / pairs);
}

double clustering_coefficient(const Graph& g) {
  const std::size_t n = g.node_count();
  long double sum = 0.0L;
  for (NodeId v = 0; v < n; ++v) {
    const auto& nb = g.neighbors(v);
    const std::size_t k = nb.size();
    if (k < 2) continue;
    std::uint64_t links = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (g.has_edge(nb[i], nb[j])) ++links;
      }
    }
    sum += static_cast<long double>(2 * links) / (static_cast<long double>(k) * (k - 1));
  }
  return static_cast<double>(sum / n);
}

double egocentric_betweenness(const Graph& g, NodeId v) {
  const auto& nb = g.neighbors(v);
  const std::size_t k = nb.size();
  if (k < 2) return 0.0;
  long double sum = 0.0L;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const NodeId u = nb[i], w = nb[j];
      if (g.has_edge(u, w)) continue;
      // Common neighbors of u and w inside the ego network: v itself plus
      // any other neighbor of v adjacent to both.
      std::uint64_t common = 1;
      for (NodeId x : nb) {
        if (x != u && x != w && g.has_edge(x, u) && g.has_edge(x, w)) ++common;
      }
      sum += 1.0L / common;
    }
  }
  return static_cast<double>(sum);
}

double closeness_centrality(const Graph& g, NodeId v) {
  const auto dist = shortest_path_lengths(g, v);
  std::uint64_t reachable = 0;
  std::uint64_t total = 0;
  for (const auto& [node, d] : dist) {
    if (node == v) continue;
    ++reachable;
    total += static_cast<std::uint64_t>(d);
  }
  return reachable == 0 ? 0.0 : static_cast<double>(reachable) / static_cast<double>(total);
}

}  // namespace beamnet
