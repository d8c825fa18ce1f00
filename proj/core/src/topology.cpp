#include "beamnet/topology.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "beamnet/rng.hpp"

namespace beamnet {

Placement place_nodes(const WorldConfig& cfg, std::uint64_t seed) {
  const std::uint64_t phase = derive_seed(seed, kPlacementStream);
  Placement placement;
  placement.positions.reserve(cfg.n);
  for (std::uint32_t i = 0; i < cfg.n; ++i) {
    Rng rng(derive_seed(phase, i));
    const double x = rng.uniform(0.0, cfg.field_size);
    const double y = rng.uniform(0.0, cfg.field_size);
    placement.positions.push_back({x, y});
  }
  return placement;
}

Graph unit_disk_graph(const Placement& placement, double range) {
  const std::size_t n = placement.node_count();
  Graph g(n);
  const double range_sq = range * range;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (squared_distance(placement.positions[u], placement.positions[v]) <=
          range_sq)
        g.add_edge(u, v);
  return g;
}

void save_placement(const Placement& placement, std::ostream& out) {
  char buf[96];
  for (std::size_t i = 0; i < placement.positions.size(); ++i) {
    const Vec2& p = placement.positions[i];
    std::snprintf(buf, sizeof buf, "%zu %.17g %.17g\n", i, p.x, p.y);
    out << buf;
  }
}

Placement load_placement(std::istream& in) {
  Placement placement;
  std::string line;
  std::size_t expected = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::size_t id = 0;
    double x = 0.0, y = 0.0;
    if (!(row >> id >> x >> y))
      throw std::runtime_error("placement: bad line: " + line);
    if (id != expected)
      throw std::runtime_error("placement: ids must be consecutive from 0");
    placement.positions.push_back({x, y});
    ++expected;
  }
  return placement;
}

}  // namespace beamnet
