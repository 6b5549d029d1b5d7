#include "wcdim/attractor.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "wcdim/errors.hpp"
#include "wcdim/util.hpp"

namespace wcdim {

PointCloud chaos_game(const IFSystem& sys, const ChaosGameOptions& opt) {
  if (opt.n_points < 1) throw std::invalid_argument("n_points must be >= 1");
  if (opt.burn_in < 0) throw std::invalid_argument("burn_in must be >= 0");
  if (sys.maps.size() < 2)
    throw std::invalid_argument("system needs at least two maps");
  if (!opt.weights.empty() && opt.weights.size() != sys.maps.size())
    throw std::invalid_argument("weights must match the number of maps");

  std::vector<double> cumulative;
  if (!opt.weights.empty()) {
    double total = 0.0;
    for (double w : opt.weights) {
      if (!(w >= 0.0)) throw std::invalid_argument("weights must be nonnegative");
      total += w;
    }
    if (!(total > 0.0)) throw std::invalid_argument("weights must not all be zero");
    double acc = 0.0;
    for (double w : opt.weights) {
      acc += w / total;
      cumulative.push_back(acc);
    }
    cumulative.back() = 1.0;
  }

  const MetricDomain& dom = sys.domain;
  double tol = 1e-13 * dom.diameter_bound;
  Point p = fixed_point(sys.maps[0], dom, dom.center(), tol, 1000000);

  PointCloud cloud;
  cloud.dimension = dom.dimension;
  cloud.seed = opt.seed;
  cloud.n_points = opt.n_points;
  cloud.burn_in = opt.burn_in;
  cloud.points.reserve(static_cast<std::size_t>(opt.n_points));

  Rng rng(opt.seed);
  std::size_t m = sys.maps.size();
  long total = opt.burn_in + opt.n_points;
  for (long i = 0; i < total; ++i) {
    if (i >= opt.burn_in) cloud.points.push_back(p);
    if (i + 1 == total) break;
    std::size_t j;
    if (cumulative.empty()) {
      j = static_cast<std::size_t>(rng.below(m));
    } else {
      double u = rng.uniform01();
      j = static_cast<std::size_t>(
          std::lower_bound(cumulative.begin(), cumulative.end(), u) -
          cumulative.begin());
      if (j >= m) j = m - 1;
    }
    p = apply_map(sys.maps[j], p);
  }
  return cloud;
}

PointCloud chaos_game(const IFSystem& sys, long n_points, std::uint64_t seed,
                      long burn_in) {
  ChaosGameOptions opt;
  opt.n_points = n_points;
  opt.seed = seed;
  opt.burn_in = burn_in;
  return chaos_game(sys, opt);
}

Point CellSet::center(std::int64_t linear_index) const {
  Point p;
  p.coords.resize(dims.size());
  std::int64_t rem = linear_index;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    std::int64_t c = rem % dims[k];
    rem /= dims[k];
    p.coords[k] = origin[k] + (static_cast<double>(c) + 0.5) * resolution;
  }
  return p;
}

std::vector<Point> CellSet::centers() const {
  std::vector<Point> out;
  out.reserve(cells.size());
  for (std::int64_t idx : cells) out.push_back(center(idx));
  return out;
}

namespace {

std::int64_t cell_of(const CellSet& grid, const Point& p) {
  std::int64_t idx = 0;
  std::int64_t stride = 1;
  for (std::size_t k = 0; k < grid.dims.size(); ++k) {
    auto c = static_cast<std::int64_t>(
        std::floor((p.coords[k] - grid.origin[k]) / grid.resolution));
    c = std::clamp<std::int64_t>(c, 0, grid.dims[k] - 1);
    idx += c * stride;
    stride *= grid.dims[k];
  }
  return idx;
}

}  // namespace

CellSet iterate_sets(const IFSystem& sys, double resolution, int max_iter,
                     double stop_tol) {
  if (!(resolution > 0.0)) throw std::invalid_argument("resolution must be positive");
  if (max_iter < 0) throw std::invalid_argument("max_iter must be >= 0");

  const MetricDomain& dom = sys.domain;
  CellSet grid;
  grid.resolution = resolution;
  grid.origin = dom.lo;

  double total = 1.0;
  for (int k = 0; k < dom.dimension; ++k) {
    auto i = static_cast<std::size_t>(k);
    auto n = static_cast<std::int64_t>(std::ceil((dom.hi[i] - dom.lo[i]) / resolution - 1e-12));
    if (n < 1) n = 1;
    grid.dims.push_back(n);
    total *= static_cast<double>(n);
  }
  if (total > 1e8)
    throw GridTooLarge("grid would have " + format_number(total) +
                       " cells (limit 1e8)");

  auto total_cells = static_cast<std::int64_t>(total + 0.5);
  grid.cells.resize(static_cast<std::size_t>(total_cells));
  for (std::int64_t i = 0; i < total_cells; ++i)
    grid.cells[static_cast<std::size_t>(i)] = i;

  for (int iter = 0; iter < max_iter; ++iter) {
    std::vector<std::int64_t> next;
    next.reserve(grid.cells.size() * sys.maps.size());
    for (std::int64_t idx : grid.cells) {
      Point c = grid.center(idx);
      for (const WeakContraction& w : sys.maps)
        next.push_back(cell_of(grid, apply_map(w, c)));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());

    bool unchanged = next == grid.cells;
    if (!unchanged && stop_tol > 0.0) {
      CellSet trial = grid;
      trial.cells = next;
      if (hausdorff_distance(grid, trial, dom) <= stop_tol) unchanged = true;
    }
    grid.cells = std::move(next);
    grid.iterations = iter + 1;
    if (unchanged) break;
  }
  return grid;
}

namespace {

double max_distance_to(const MetricDomain& dom, const Point& p,
                       const std::vector<Point>& pts, std::size_t* arg = nullptr) {
  double best = -1.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double d = distance(dom, p, pts[i]);
    if (d > best) {
      best = d;
      if (arg != nullptr) *arg = i;
    }
  }
  return best;
}

}  // namespace

DiameterEstimate diameter_estimate(const PointCloud& cloud,
                                   const MetricDomain& dom) {
  if (cloud.points.empty()) throw EmptySet("diameter of an empty cloud");
  const auto& pts = cloud.points;
  double box_diam = dom.box_diameter();

  constexpr std::size_t kExactLimit = 20000;
  DiameterEstimate est;

  if (pts.size() <= kExactLimit) {
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        best = std::max(best, distance(dom, pts[i], pts[j]));
    est.value = std::min(best, box_diam);
    est.exact = true;
    return est;
  }

  // Deterministic subsample scan, then alternate farthest-point sweeps over
  // the full set from the best pair found.
  std::size_t stride = (pts.size() + kExactLimit - 1) / kExactLimit;
  std::vector<Point> sub;
  for (std::size_t i = 0; i < pts.size(); i += stride) sub.push_back(pts[i]);

  double best = 0.0;
  std::size_t bi = 0;
  std::size_t bj = 0;
  for (std::size_t i = 0; i < sub.size(); ++i) {
    for (std::size_t j = i + 1; j < sub.size(); ++j) {
      double d = distance(dom, sub[i], sub[j]);
      if (d > best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  }

  Point a = sub[bi];
  Point b = sub[bj];
  for (int sweep = 0; sweep < 8; ++sweep) {
    std::size_t arg = 0;
    double d = max_distance_to(dom, a, pts, &arg);
    if (d <= best) break;
    best = d;
    b = pts[arg];
    std::swap(a, b);
  }
  est.value = std::min(best, box_diam);
  est.exact = false;
  return est;
}

namespace {

double hausdorff_points(const std::vector<Point>& a,
                        const std::vector<Point>& b, const MetricDomain& dom) {
  if (a.empty() || b.empty())
    throw EmptySet("Hausdorff distance of an empty set");
  double worst = 0.0;
  auto directed = [&](const std::vector<Point>& from,
                      const std::vector<Point>& to) {
    for (const Point& p : from) {
      double nearest = std::numeric_limits<double>::infinity();
      for (const Point& q : to) nearest = std::min(nearest, distance(dom, p, q));
      worst = std::max(worst, nearest);
    }
  };
  directed(a, b);
  directed(b, a);
  return worst;
}

}  // namespace

double hausdorff_distance(const PointCloud& a, const PointCloud& b,
                          const MetricDomain& dom) {
  return hausdorff_points(a.points, b.points, dom);
}

double hausdorff_distance(const CellSet& a, const CellSet& b,
                          const MetricDomain& dom) {
  return hausdorff_points(a.centers(), b.centers(), dom);
}

PointCloud map_cloud(const IFSystem& sys, const PointCloud& cloud) {
  PointCloud out;
  out.dimension = cloud.dimension;
  out.seed = cloud.seed;
  out.n_points = cloud.n_points;
  out.burn_in = cloud.burn_in;
  out.points.reserve(cloud.points.size() * sys.maps.size());
  for (const WeakContraction& w : sys.maps)
    for (const Point& p : cloud.points) out.points.push_back(apply_map(w, p));
  return out;
}

void write_cloud_csv(std::ostream& out, const PointCloud& cloud) {
  for (int k = 0; k < cloud.dimension; ++k) {
    if (k > 0) out << ',';
    out << 'x' << (k + 1);
  }
  out << '\n';
  for (const Point& p : cloud.points) {
    for (std::size_t k = 0; k < p.coords.size(); ++k) {
      if (k > 0) out << ',';
      out << format_number(p.coords[k]);
    }
    out << '\n';
  }
}

PointCloud read_cloud_csv(std::istream& in) {
  PointCloud cloud;
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("empty point-cloud CSV");
  cloud.dimension = 1 + static_cast<int>(std::count(line.begin(), line.end(), ','));

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Point p;
    std::stringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) p.coords.push_back(std::stod(field));
    if (p.coords.size() != static_cast<std::size_t>(cloud.dimension))
      throw std::invalid_argument("ragged point-cloud CSV row: " + line);
    cloud.points.push_back(std::move(p));
  }
  cloud.n_points = static_cast<long>(cloud.points.size());
  return cloud;
}

}  // namespace wcdim
