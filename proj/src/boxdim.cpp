#include "wcdim/boxdim.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "wcdim/errors.hpp"
#include "wcdim/util.hpp"

namespace wcdim {

BoxCountSeries box_counts(const PointCloud& cloud, const MetricDomain& dom,
                          std::span<const double> scales) {
  if (cloud.points.empty()) throw EmptySet("box counts of an empty cloud");
  if (scales.empty()) throw std::invalid_argument("need at least one scale");
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (!(scales[i] > 0.0))
      throw std::invalid_argument("scales must be positive");
    if (scales[i] < 1e-12 * dom.diameter_bound)
      throw ScaleTooSmall("scale " + format_number(scales[i]) +
                          " below 1e-12 * D");
    if (i > 0 && !(scales[i] < scales[i - 1]))
      throw std::invalid_argument("scales must be strictly decreasing");
  }

  BoxCountSeries series;
  series.scales.assign(scales.begin(), scales.end());
  series.counts.reserve(scales.size());

  for (double eps : scales) {
    std::set<std::vector<std::int64_t>> occupied;
    std::vector<std::int64_t> key(static_cast<std::size_t>(dom.dimension));
    for (const Point& p : cloud.points) {
      for (std::size_t k = 0; k < key.size(); ++k)
        key[k] = static_cast<std::int64_t>(std::floor((p.coords[k] - dom.lo[k]) / eps));
      occupied.insert(key);
    }
    series.counts.push_back(static_cast<long>(occupied.size()));
  }
  return series;
}

BoxCountSeries fit_dimension(BoxCountSeries series,
                             std::optional<std::pair<int, int>> window) {
  int n = static_cast<int>(series.scales.size());
  if (static_cast<int>(series.counts.size()) != n)
    throw std::invalid_argument("series counts do not match scales");

  int lo = 1;
  int hi = n - 2;
  if (window.has_value()) {
    lo = window->first;
    hi = window->second;
  }
  if (lo < 0 || hi >= n || hi - lo + 1 < 3)
    throw std::invalid_argument("fit window needs at least three scales");

  bool all_equal = true;
  for (int i = lo + 1; i <= hi; ++i)
    if (series.counts[static_cast<std::size_t>(i)] !=
        series.counts[static_cast<std::size_t>(lo)])
      all_equal = false;
  if (all_equal)
    throw DegenerateFit("all box counts in the window are equal");

  double sx = 0.0;
  double sy = 0.0;
  double sxx = 0.0;
  double sxy = 0.0;
  int k = hi - lo + 1;
  for (int i = lo; i <= hi; ++i) {
    double x = std::log(1.0 / series.scales[static_cast<std::size_t>(i)]);
    double y = std::log(static_cast<double>(series.counts[static_cast<std::size_t>(i)]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = k * sxx - sx * sx;
  if (denom == 0.0) throw DegenerateFit("fit scales are collinear");
  series.slope = (k * sxy - sx * sy) / denom;
  series.intercept = (sy - series.slope * sx) / k;

  double ss_res = 0.0;
  double ss_tot = 0.0;
  double mean_y = sy / k;
  for (int i = lo; i <= hi; ++i) {
    double x = std::log(1.0 / series.scales[static_cast<std::size_t>(i)]);
    double y = std::log(static_cast<double>(series.counts[static_cast<std::size_t>(i)]));
    double e = y - (series.slope * x + series.intercept);
    ss_res += e * e;
    ss_tot += (y - mean_y) * (y - mean_y);
  }
  series.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 0.0;
  series.window_lo = lo;
  series.window_hi = hi;
  series.fitted = true;
  return series;
}

std::vector<double> parse_scales_spec(std::string_view spec, double diameter) {
  auto fail = [&spec]() {
    throw std::invalid_argument("bad scales spec '" + std::string(spec) +
                                "'; expected geom:R:KLO:KHI or list:a,b,c");
  };

  if (spec.empty()) spec = "geom:0.5:2:9";

  if (spec.starts_with("geom:")) {
    std::string body(spec.substr(5));
    double r = 0.0;
    int klo = 0;
    int khi = 0;
    char extra = 0;
    if (std::sscanf(body.c_str(), "%lf:%d:%d%c", &r, &klo, &khi, &extra) != 3)
      fail();
    if (!(r > 0.0) || !(r < 1.0) || khi < klo) fail();
    std::vector<double> scales;
    for (int k = klo; k <= khi; ++k)
      scales.push_back(diameter * std::pow(r, k));
    return scales;
  }

  std::string_view body = spec;
  if (body.starts_with("list:")) body.remove_prefix(5);
  std::vector<double> scales;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string field(body.substr(pos, comma == std::string_view::npos
                                           ? std::string_view::npos
                                           : comma - pos));
    try {
      std::size_t used = 0;
      double v = std::stod(field, &used);
      if (used != field.size()) fail();
      scales.push_back(v);
    } catch (const std::invalid_argument&) {
      fail();
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (scales.empty()) fail();
  return scales;
}

}  // namespace wcdim
