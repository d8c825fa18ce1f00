#include "beamnet/reference.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace beamnet::reference {

namespace {

constexpr int kUnreached = -1;

// BFS from s recording distances and shortest-path counts for every vertex.
void bfs_counts(const Graph& g, NodeId s, std::vector<int>& dist,
                std::vector<double>& sigma) {
  dist.assign(g.node_count(), kUnreached);
  sigma.assign(g.node_count(), 0.0);
  dist[s] = 0;
  sigma[s] = 1.0;
  std::queue<NodeId> q;
  q.push(s);
  while (!q.empty()) {
    NodeId u = q.front();
    q.pop();
    for (NodeId w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
      if (dist[w] == dist[u] + 1) sigma[w] += sigma[u];
    }
  }
}

struct UnionFind {
  std::vector<NodeId> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), NodeId{0});
  }

  NodeId find(NodeId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(NodeId a, NodeId b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

}  // namespace

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  const std::size_t n = g.node_count();
  const int inf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& [u, v] : g.edges()) {
    d[u][v] = 1;
    d[v][u] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] >= inf) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d[i][j] >= inf) d[i][j] = kUnreached;
  return d;
}

std::size_t component_count(const Graph& g) {
  UnionFind uf(g.node_count());
  for (const auto& [u, v] : g.edges()) uf.unite(u, v);
  std::size_t count = 0;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (uf.find(v) == v) ++count;
  return count;
}

double average_path_length(const Graph& g) {
  const auto d = all_pairs_distances(g);
  long double total = 0.0L;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (d[i][j] > 0) {
        total += d[i][j];
        ++pairs;
      }
  return pairs == 0 ? 0.0 : static_cast<double>(total / pairs);
}

double clustering_coefficient(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> triangles(n, 0);
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (NodeId c = b + 1; c < n; ++c)
        if (g.has_edge(a, c) && g.has_edge(b, c)) {
          ++triangles[a];
          ++triangles[b];
          ++triangles[c];
        }
    }
  long double sum = 0.0L;
  for (NodeId v = 0; v < n; ++v) {
    const std::size_t k = g.degree(v);
    if (k < 2) continue;
    sum += 2.0L * triangles[v] / (static_cast<long double>(k) * (k - 1));
  }
  return static_cast<double>(sum / n);
}

double betweenness(const Graph& g, NodeId v) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<int>> dist(n);
  std::vector<std::vector<double>> sigma(n);
  for (NodeId s = 0; s < n; ++s) bfs_counts(g, s, dist[s], sigma[s]);
  long double score = 0.0L;
  for (NodeId s = 0; s < n; ++s) {
    if (s == v) continue;
    for (NodeId t = s + 1; t < n; ++t) {
      if (t == v || dist[s][t] <= 0) continue;
      if (dist[s][v] == kUnreached || dist[v][t] == kUnreached) continue;
      if (dist[s][v] + dist[v][t] != dist[s][t]) continue;
      score += sigma[s][v] * sigma[v][t] / sigma[s][t];
    }
  }
  return static_cast<double>(score);
}

double egocentric_betweenness(const Graph& g, NodeId v) {
  std::vector<NodeId> members = g.neighbors(v);
  members.push_back(v);
  std::sort(members.begin(), members.end());
  const auto ego = g.induced_subgraph(members);
  const auto at = std::lower_bound(members.begin(), members.end(), v);
  const NodeId local = static_cast<NodeId>(at - members.begin());
  return betweenness(ego, local);
}

double closeness_centrality(const Graph& g, NodeId v) {
  const auto d = all_pairs_distances(g);
  long double total = 0.0L;
  std::size_t reachable = 0;
  for (std::size_t j = 0; j < d.size(); ++j)
    if (j != v && d[v][j] > 0) {
      total += d[v][j];
      ++reachable;
    }
  return reachable == 0 ? 0.0 : static_cast<double>(reachable / total);
}

}  // namespace beamnet::reference
