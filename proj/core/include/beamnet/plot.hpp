#ifndef BEAMNET_PLOT_HPP
#define BEAMNET_PLOT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "beamnet/metrics.hpp"

namespace beamnet {

/// Standalone SVG line chart of one metric: x is node density n / L^2,
/// y the group mean with 95% CI whiskers, one series per (gradient, mode).
/// Rows of other metrics are ignored; an empty selection still yields a
/// valid (captioned) document.
void emit_svg_plot(const std::vector<SummaryRow>& rows,
                   const std::string& metric, double field_size,
                   std::ostream& out);

}  // namespace beamnet

#endif  // BEAMNET_PLOT_HPP
