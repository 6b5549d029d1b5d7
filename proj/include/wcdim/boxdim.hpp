#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "wcdim/attractor.hpp"

namespace wcdim {

// Box counts N(eps) over a ladder of scales plus the log-log fit. The box
// dimension upper-bounds the Hausdorff dimension, and counts on a sampled
// cloud can only undercount, so fitted slopes sit at or below the ideal.
struct BoxCountSeries {
  std::vector<double> scales;  // strictly decreasing
  std::vector<long> counts;

  bool fitted = false;
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  int window_lo = 0;  // inclusive index range used by the fit
  int window_hi = 0;
};

// Counts distinct grid cells of side eps holding at least one point; the
// grid is anchored at the box corner for reproducibility. Scales must be
// positive and strictly decreasing; eps below 1e-12 * D is rejected.
BoxCountSeries box_counts(const PointCloud& cloud, const MetricDomain& dom,
                          std::span<const double> scales);

// Least-squares fit of log N against log(1/eps) over the window. The default
// window drops the largest and smallest scale. Throws DegenerateFit when all
// counts in the window are equal.
BoxCountSeries fit_dimension(BoxCountSeries series,
                             std::optional<std::pair<int, int>> window = {});

// Scale ladders: "geom:R:KLO:KHI" gives D * R^k for k in [KLO, KHI];
// "list:a,b,c" (or a bare comma list) gives absolute scales.
// Default: geom:0.5:2:9.
std::vector<double> parse_scales_spec(std::string_view spec, double diameter);

}  // namespace wcdim
