#include "beamnet/metrics.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace beamnet {

const char* const kRecordsCsvHeader =
    "n,gradient,seed,mode,apl,cc,components,frac_peripheral,frac_centroid,"
    "unidirectional_links";

const char* const kSummaryCsvHeader =
    "metric,n,gradient,mode,mean,ci95_halfwidth,samples";

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

[[noreturn]] void bad_row(const std::string& line) {
  throw std::runtime_error("csv: malformed row: " + line);
}

}  // namespace

MetricsRecord compute_metrics(const Graph& omni, const LinkSet& final_links,
                              std::size_t region_count,
                              std::size_t peripheral_count) {
  const std::size_t n = omni.node_count();
  const Graph dir = final_links.to_symmetric_graph(n);
  MetricsRecord rec;
  rec.n = static_cast<std::uint32_t>(n);
  rec.apl_omni = average_path_length(omni);
  rec.apl_dir = average_path_length(dir);
  rec.cc_omni = clustering_coefficient(omni);
  rec.cc_dir = clustering_coefficient(dir);
  rec.components_omni = connected_components(omni).size();
  rec.components_dir = connected_components(dir).size();
  rec.frac_peripheral = static_cast<double>(peripheral_count) / n;
  rec.frac_centroid = static_cast<double>(region_count) / n;
  rec.unidirectional_links = final_links.directed_edges().size();
  return rec;
}

void emit_csv(const std::vector<MetricsRecord>& records, std::ostream& out) {
  out << kRecordsCsvHeader << '\n';
  for (const MetricsRecord& r : records) {
    out << r.n << ',' << r.gradient << ',' << r.seed << ",omni,"
        << fmt(r.apl_omni) << ',' << fmt(r.cc_omni) << ','
        << r.components_omni << ',' << fmt(r.frac_peripheral) << ','
        << fmt(r.frac_centroid) << ",0\n";
    out << r.n << ',' << r.gradient << ',' << r.seed << ",dir,"
        << fmt(r.apl_dir) << ',' << fmt(r.cc_dir) << ',' << r.components_dir
        << ',' << fmt(r.frac_peripheral) << ',' << fmt(r.frac_centroid)
        << ',' << r.unidirectional_links << '\n';
  }
}

std::vector<MetricsRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kRecordsCsvHeader)
    throw std::runtime_error("csv: missing or unexpected header");
  std::vector<MetricsRecord> records;
  std::map<std::tuple<std::uint32_t, int, std::uint64_t>, std::size_t> index;
  std::vector<std::pair<bool, bool>> seen;  // (omni, dir) per record
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 10) bad_row(line);
    MetricsRecord probe;
    std::string mode;
    try {
      probe.n = static_cast<std::uint32_t>(std::stoul(f[0]));
      probe.gradient = std::stoi(f[1]);
      probe.seed = std::stoull(f[2]);
      mode = f[3];
      const std::tuple key{probe.n, probe.gradient, probe.seed};
      auto [at, fresh] = index.try_emplace(key, records.size());
      if (fresh) {
        records.push_back(probe);
        seen.push_back({false, false});
      }
      MetricsRecord& rec = records[at->second];
      const double apl = std::stod(f[4]);
      const double cc = std::stod(f[5]);
      const std::size_t components = std::stoull(f[6]);
      rec.frac_peripheral = std::stod(f[7]);
      rec.frac_centroid = std::stod(f[8]);
      const std::uint64_t uni = std::stoull(f[9]);
      if (mode == "omni") {
        rec.apl_omni = apl;
        rec.cc_omni = cc;
        rec.components_omni = components;
        seen[at->second].first = true;
      } else if (mode == "dir") {
        rec.apl_dir = apl;
        rec.cc_dir = cc;
        rec.components_dir = components;
        rec.unidirectional_links = uni;
        seen[at->second].second = true;
      } else {
        bad_row(line);
      }
    } catch (const std::invalid_argument&) {
      bad_row(line);
    } catch (const std::out_of_range&) {
      bad_row(line);
    }
  }
  for (std::size_t i = 0; i < records.size(); ++i)
    if (!seen[i].first || !seen[i].second)
      throw std::runtime_error("csv: record missing one of its mode rows");
  return records;
}

const std::vector<std::string>& metric_names() {
  static const std::vector<std::string> names{
      "apl", "cc", "components", "frac_peripheral", "frac_centroid",
      "unidirectional_links"};
  return names;
}

MetricSelector metric_selector(const std::string& name) {
  if (name == "apl")
    return [](const MetricsRecord& r, const std::string& mode) {
      return mode == "omni" ? r.apl_omni : r.apl_dir;
    };
  if (name == "cc")
    return [](const MetricsRecord& r, const std::string& mode) {
      return mode == "omni" ? r.cc_omni : r.cc_dir;
    };
  if (name == "components")
    return [](const MetricsRecord& r, const std::string& mode) {
      return static_cast<double>(mode == "omni" ? r.components_omni
                                                : r.components_dir);
    };
  if (name == "frac_peripheral")
    return [](const MetricsRecord& r, const std::string&) {
      return r.frac_peripheral;
    };
  if (name == "frac_centroid")
    return [](const MetricsRecord& r, const std::string&) {
      return r.frac_centroid;
    };
  if (name == "unidirectional_links")
    return [](const MetricsRecord& r, const std::string& mode) {
      return mode == "omni"
                 ? 0.0
                 : static_cast<double>(r.unidirectional_links);
    };
  throw std::invalid_argument("unknown metric: " + name);
}

void mean_and_ci95(const std::vector<double>& samples, double& mean,
                   double& halfwidth, bool& defined) {
  const std::size_t s = samples.size();
  if (s == 0) throw std::invalid_argument("mean_and_ci95: empty sample");
  long double total = 0.0L;
  for (double x : samples) total += x;
  mean = static_cast<double>(total / s);
  if (s < 2) {
    defined = false;
    halfwidth = std::numeric_limits<double>::quiet_NaN();
    return;
  }
  long double ss = 0.0L;
  for (double x : samples) {
    const long double d = x - mean;
    ss += d * d;
  }
  const double sd = std::sqrt(static_cast<double>(ss / (s - 1)));
  const boost::math::students_t dist(static_cast<double>(s - 1));
  const double t = boost::math::quantile(dist, 0.975);
  halfwidth = t * sd / std::sqrt(static_cast<double>(s));
  defined = true;
}

std::vector<SummaryRow> summarize(const std::vector<MetricsRecord>& records,
                                  const std::string& metric) {
  const MetricSelector select = metric_selector(metric);
  // mode key 0 = omni, 1 = dir, so omni sorts first within a cell
  std::map<std::tuple<std::uint32_t, int, int>, std::vector<double>> groups;
  for (const MetricsRecord& r : records) {
    groups[{r.n, r.gradient, 0}].push_back(select(r, "omni"));
    groups[{r.n, r.gradient, 1}].push_back(select(r, "dir"));
  }
  std::vector<SummaryRow> rows;
  rows.reserve(groups.size());
  for (const auto& [key, samples] : groups) {
    SummaryRow row;
    row.n = std::get<0>(key);
    row.gradient = std::get<1>(key);
    row.mode = std::get<2>(key) == 0 ? "omni" : "dir";
    row.metric = metric;
    row.samples = samples.size();
    mean_and_ci95(samples, row.mean, row.ci95_halfwidth, row.ci_defined);
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit_summary_csv(const std::vector<SummaryRow>& rows,
                      std::ostream& out) {
  out << kSummaryCsvHeader << '\n';
  for (const SummaryRow& row : rows)
    out << row.metric << ',' << row.n << ',' << row.gradient << ','
        << row.mode << ',' << fmt(row.mean) << ',' << fmt(row.ci95_halfwidth)
        << ',' << row.samples << '\n';
}

}  // namespace beamnet
