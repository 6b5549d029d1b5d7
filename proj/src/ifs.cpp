#include "wcdim/ifs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wcdim/errors.hpp"
#include "wcdim/util.hpp"

namespace wcdim {

const char* metric_name(Metric m) {
  switch (m) {
    case Metric::euclidean: return "euclidean";
    case Metric::chebyshev: return "chebyshev";
    case Metric::manhattan: return "manhattan";
  }
  return "?";
}

MetricDomain MetricDomain::box(int dimension, Metric metric,
                               std::vector<double> lo, std::vector<double> hi,
                               double diameter_bound) {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  if (lo.size() != static_cast<std::size_t>(dimension) ||
      hi.size() != static_cast<std::size_t>(dimension))
    throw DimensionMismatch("box bounds do not match dimension");
  for (int k = 0; k < dimension; ++k) {
    if (!(lo[static_cast<std::size_t>(k)] < hi[static_cast<std::size_t>(k)]))
      throw std::invalid_argument("box needs lo < hi in every coordinate");
  }
  MetricDomain dom;
  dom.dimension = dimension;
  dom.metric = metric;
  dom.lo = std::move(lo);
  dom.hi = std::move(hi);
  dom.diameter_bound = diameter_bound > 0.0 ? diameter_bound : dom.box_diameter();
  return dom;
}

double MetricDomain::box_diameter() const {
  Point a{lo};
  Point b{hi};
  return distance(*this, a, b);
}

bool MetricDomain::contains(const Point& p, double slack) const {
  if (p.coords.size() != static_cast<std::size_t>(dimension)) return false;
  for (int k = 0; k < dimension; ++k) {
    auto i = static_cast<std::size_t>(k);
    if (p.coords[i] < lo[i] - slack || p.coords[i] > hi[i] + slack) return false;
  }
  return true;
}

Point MetricDomain::center() const {
  Point p;
  p.coords.resize(static_cast<std::size_t>(dimension));
  for (std::size_t k = 0; k < p.coords.size(); ++k)
    p.coords[k] = 0.5 * (lo[k] + hi[k]);
  return p;
}

double distance(const MetricDomain& dom, const Point& a, const Point& b) {
  if (a.coords.size() != b.coords.size() ||
      a.coords.size() != static_cast<std::size_t>(dom.dimension))
    throw DimensionMismatch("points do not match the domain dimension");
  switch (dom.metric) {
    case Metric::euclidean: {
      double s = 0.0;
      for (std::size_t k = 0; k < a.coords.size(); ++k) {
        double d = a.coords[k] - b.coords[k];
        s += d * d;
      }
      return std::sqrt(s);
    }
    case Metric::chebyshev: {
      double s = 0.0;
      for (std::size_t k = 0; k < a.coords.size(); ++k)
        s = std::max(s, std::abs(a.coords[k] - b.coords[k]));
      return s;
    }
    case Metric::manhattan: {
      double s = 0.0;
      for (std::size_t k = 0; k < a.coords.size(); ++k)
        s += std::abs(a.coords[k] - b.coords[k]);
      return s;
    }
  }
  throw std::logic_error("corrupt metric kind");
}

std::vector<double> rotation_2d(double angle) {
  double c = std::cos(angle);
  double s = std::sin(angle);
  return {c, -s, s, c};
}

namespace {

void mat_vec(const std::vector<double>& m, const std::vector<double>& v,
             std::vector<double>& out) {
  std::size_t d = v.size();
  out.assign(d, 0.0);
  for (std::size_t r = 0; r < d; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < d; ++c) s += m[r * d + c] * v[c];
    out[r] = s;
  }
}

}  // namespace

Point apply_map(const WeakContraction& w, const Point& p) {
  Point out;
  std::size_t d = p.coords.size();

  if (const auto* sim = std::get_if<SimilarityMap>(&w.map)) {
    if (sim->translation.size() != d)
      throw DimensionMismatch("similarity translation does not match point dimension");
    if (!sim->rotation.empty()) {
      if (sim->rotation.size() != d * d)
        throw DimensionMismatch("similarity rotation does not match point dimension");
      mat_vec(sim->rotation, p.coords, out.coords);
    } else {
      out.coords = p.coords;
    }
    for (std::size_t k = 0; k < d; ++k)
      out.coords[k] = sim->ratio * out.coords[k] + sim->translation[k];
    return out;
  }

  if (const auto* aff = std::get_if<AffineMap>(&w.map)) {
    if (aff->matrix.size() != d * d || aff->translation.size() != d)
      throw DimensionMismatch("affine map does not match point dimension");
    mat_vec(aff->matrix, p.coords, out.coords);
    for (std::size_t k = 0; k < d; ++k) out.coords[k] += aff->translation[k];
    return out;
  }

  const auto& expr = std::get<ExprMap>(w.map);
  if (expr.coords.size() != d)
    throw DimensionMismatch("expression map does not match point dimension");
  out.coords.resize(d);
  for (std::size_t k = 0; k < d; ++k)
    out.coords[k] = expr.coords[k].eval(p.coords);
  return out;
}

Point fixed_point(const WeakContraction& w, const MetricDomain& dom,
                  Point start, double tol, long max_iter) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (start.coords.size() != static_cast<std::size_t>(dom.dimension))
    throw DimensionMismatch("start point does not match the domain dimension");
  if (!dom.contains(start, 1e-9 * dom.diameter_bound))
    throw std::invalid_argument("start point outside the domain box");

  Point p = std::move(start);
  for (long i = 0; i < max_iter; ++i) {
    Point next = apply_map(w, p);
    if (distance(dom, p, next) <= tol) return next;
    p = std::move(next);
  }
  throw NoConvergence("fixed-point iteration for map '" + w.name +
                          "' did not reach tolerance " + format_number(tol) +
                          " in " + std::to_string(max_iter) + " iterations",
                      max_iter);
}

namespace {

constexpr long kChunkPairs = 4096;

struct ChunkResult {
  double worst_ratio = 0.0;
  long violation_count = 0;
  std::vector<Violation> violations;  // first few, in sampling order
};

Point sample_box_point(const MetricDomain& dom, Rng& rng) {
  Point p;
  p.coords.resize(static_cast<std::size_t>(dom.dimension));
  for (std::size_t k = 0; k < p.coords.size(); ++k)
    p.coords[k] = rng.uniform(dom.lo[k], dom.hi[k]);
  return p;
}

// Second endpoint at a log-uniform separation from x, clamped to the box.
Point sample_near_point(const MetricDomain& dom, const Point& x, Rng& rng) {
  double d_max = dom.diameter_bound;
  double s = std::exp(rng.uniform(std::log(1e-6 * d_max), std::log(d_max)));

  std::vector<double> dir(x.coords.size());
  double norm = 0.0;
  for (double& v : dir) {
    v = rng.normal();
    norm += v * v;
  }
  norm = std::sqrt(norm);
  if (norm == 0.0) {
    dir[0] = 1.0;
    norm = 1.0;
  }

  Point y;
  y.coords.resize(x.coords.size());
  for (std::size_t k = 0; k < x.coords.size(); ++k) {
    double v = x.coords[k] + s * dir[k] / norm;
    y.coords[k] = std::clamp(v, dom.lo[k], dom.hi[k]);
  }
  return y;
}

}  // namespace

ValidationReport validate_weak_contraction(const WeakContraction& w,
                                           const MetricDomain& dom,
                                           long n_pairs, std::uint64_t seed,
                                           double slack) {
  if (n_pairs < 1) throw std::invalid_argument("n_pairs must be >= 1");
  if (slack < 0.0) slack = 1e-9 * dom.diameter_bound;

  EnvelopeFunction env = envelope(w.coefficient);

  std::size_t n_chunks =
      static_cast<std::size_t>((n_pairs + kChunkPairs - 1) / kChunkPairs);
  std::vector<ChunkResult> results(n_chunks);

  for_chunks(n_chunks, [&](std::size_t chunk) {
    Rng rng = Rng::substream(seed, chunk);
    ChunkResult& res = results[chunk];
    long begin = static_cast<long>(chunk) * kChunkPairs;
    long end = std::min(begin + kChunkPairs, n_pairs);
    for (long g = begin; g < end; ++g) {
      Point a = sample_box_point(dom, rng);
      Point b = (g % 10 == 0) ? sample_near_point(dom, a, rng)
                              : sample_box_point(dom, rng);
      double d = distance(dom, a, b);
      if (d == 0.0) continue;
      double allowed = env(d) * d;
      double image = distance(dom, apply_map(w, a), apply_map(w, b));
      double ratio = allowed > 0.0
                         ? image / allowed
                         : (image > slack ? std::numeric_limits<double>::infinity() : 0.0);
      res.worst_ratio = std::max(res.worst_ratio, ratio);
      if (image > allowed + slack) {
        ++res.violation_count;
        if (res.violations.size() < 10)
          res.violations.push_back({a, b, d, image, allowed + slack});
      }
    }
  });

  ValidationReport report;
  report.n_pairs = n_pairs;
  report.seed = seed;
  for (const ChunkResult& res : results) {
    report.worst_ratio = std::max(report.worst_ratio, res.worst_ratio);
    report.violation_count += res.violation_count;
    for (const Violation& v : res.violations) {
      if (report.violations.size() < 10) report.violations.push_back(v);
    }
  }
  report.pass = report.violation_count == 0;
  return report;
}

std::vector<ValidationReport> validate_system(const IFSystem& sys,
                                              long n_pairs_per_map,
                                              std::uint64_t seed, double slack) {
  std::vector<ValidationReport> reports;
  reports.reserve(sys.maps.size());
  for (std::size_t j = 0; j < sys.maps.size(); ++j) {
    std::uint64_t state = seed;
    (void)splitmix64(state);
    state ^= 0x6d617076616c6964ull + j;
    std::uint64_t map_seed = splitmix64(state);
    reports.push_back(validate_weak_contraction(sys.maps[j], sys.domain,
                                                n_pairs_per_map, map_seed,
                                                slack));
  }
  return reports;
}

}  // namespace wcdim
