#ifndef BEAMNET_VALIDATE_HPP
#define BEAMNET_VALIDATE_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "beamnet/graph.hpp"

namespace beamnet {

/// Overridable metric implementations for the oracle comparison. Unset
/// entries fall back to the production functions; tests inject broken ones
/// to prove the suite notices.
struct ValidationHooks {
  std::function<double(const Graph&)> apl;
  std::function<double(const Graph&)> cc;
  std::function<std::size_t(const Graph&)> components;
  std::function<double(const Graph&, NodeId)> ego_betweenness;
  std::function<double(const Graph&, NodeId)> closeness;
};

struct ValidationItem {
  std::string name;
  bool passed = false;
  std::string detail;  // first failure, or a short summary
};

struct ValidationReport {
  std::vector<ValidationItem> items;

  bool all_passed() const;
};

/// Oracle comparisons on random small graphs, per-trial protocol
/// invariants on a fixed seed set, and the confidence-interval spot check.
ValidationReport run_validation(std::uint64_t seed,
                                const ValidationHooks& hooks = {});

/// One `PASS|FAIL name detail` line per item plus a tail summary.
void print_report(const ValidationReport& report, std::ostream& out);

}  // namespace beamnet

#endif  // BEAMNET_VALIDATE_HPP
