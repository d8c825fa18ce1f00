#ifndef BEAMNET_METRICS_HPP
#define BEAMNET_METRICS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "beamnet/beamform.hpp"
#include "beamnet/graph.hpp"

namespace beamnet {

/// Everything one trial reports. The omni columns describe the plain
/// unit-disk graph, the dir columns the symmetric part of the final link
/// set; directed leftovers are only counted, never measured as links.
struct MetricsRecord {
  std::uint32_t n = 0;
  int gradient = 0;
  std::uint64_t seed = 0;
  double apl_omni = 0.0;
  double apl_dir = 0.0;
  double cc_omni = 0.0;
  double cc_dir = 0.0;
  std::size_t components_omni = 0;
  std::size_t components_dir = 0;
  double frac_peripheral = 0.0;
  double frac_centroid = 0.0;
  std::uint64_t unidirectional_links = 0;

  bool operator==(const MetricsRecord&) const = default;
};

/// Derives the record from a finished trial's artifacts. `region_count`
/// equals the number of centroids; peripherals are the beam-phase set.
MetricsRecord compute_metrics(const Graph& omni, const LinkSet& final_links,
                              std::size_t region_count,
                              std::size_t peripheral_count);

/// Header of the per-trial CSV; one row per (record, mode) with mode in
/// {omni, dir}. The omni row reports zero unidirectional links.
extern const char* const kRecordsCsvHeader;

void emit_csv(const std::vector<MetricsRecord>& records, std::ostream& out);

/// Inverse of emit_csv; rows pair up by (n, gradient, seed). Throws
/// std::runtime_error on malformed input.
std::vector<MetricsRecord> parse_csv(std::istream& in);

/// Pulls one numeric column out of a record by mode ("omni" or "dir").
using MetricSelector = std::function<double(const MetricsRecord&, const std::string& mode)>;

/// Named selectors for the plottable metrics: apl, cc, components,
/// frac_peripheral, frac_centroid, unidirectional_links.
const std::vector<std::string>& metric_names();
MetricSelector metric_selector(const std::string& name);

/// One aggregation group: all seeds of a (n, gradient, mode) cell.
struct SummaryRow {
  std::uint32_t n = 0;
  int gradient = 0;
  std::string mode;
  std::string metric;
  double mean = 0.0;
  double ci95_halfwidth = 0.0;
  std::size_t samples = 0;
  bool ci_defined = true;  // false when fewer than 2 samples
};

/// Per-(n, gradient, mode) mean and Student-t 95% confidence half-width
/// (quantile 0.975 at samples-1 degrees of freedom). Groups with a single
/// sample are flagged instead of getting a half-width.
std::vector<SummaryRow> summarize(const std::vector<MetricsRecord>& records,
                                  const std::string& metric);

/// Mean and CI of a bare sample vector; the core of summarize, exposed for
/// direct use.
void mean_and_ci95(const std::vector<double>& samples, double& mean,
                   double& halfwidth, bool& defined);

extern const char* const kSummaryCsvHeader;

void emit_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out);

}  // namespace beamnet

#endif  // BEAMNET_METRICS_HPP
