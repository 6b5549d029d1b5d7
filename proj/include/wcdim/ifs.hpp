#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "wcdim/coeff.hpp"
#include "wcdim/expression.hpp"

namespace wcdim {

struct Point {
  std::vector<double> coords;
};

enum class Metric { euclidean, chebyshev, manhattan };

const char* metric_name(Metric m);

// Ambient space: a box in R^d under one of three metrics, plus an upper
// bound D on the attractor diameter (defaults to the box diameter).
struct MetricDomain {
  int dimension = 1;
  Metric metric = Metric::euclidean;
  std::vector<double> lo;
  std::vector<double> hi;
  double diameter_bound = 1.0;  // D >= dia S

  static MetricDomain box(int dimension, Metric metric, std::vector<double> lo,
                          std::vector<double> hi,
                          double diameter_bound = -1.0);

  // Diameter of the box itself under the chosen metric.
  double box_diameter() const;

  bool contains(const Point& p, double slack = 0.0) const;
  Point center() const;
};

double distance(const MetricDomain& dom, const Point& a, const Point& b);

// Map kinds. A similarity is x -> ratio * R x + translation with R
// orthogonal (stored as a d x d row-major matrix, built from an angle in 2-D).
struct SimilarityMap {
  double ratio = 0.5;
  std::vector<double> rotation;  // d x d row-major; empty = identity
  std::vector<double> translation;
};

struct AffineMap {
  std::vector<double> matrix;  // d x d row-major
  std::vector<double> translation;
};

struct ExprMap {
  std::vector<Expression> coords;  // one expression per output coordinate
};

// A point map paired with its contraction coefficient.
struct WeakContraction {
  std::string name;
  std::variant<SimilarityMap, AffineMap, ExprMap> map;
  CoefficientFunction coefficient;
};

struct IFSystem {
  MetricDomain domain;
  std::vector<WeakContraction> maps;  // m >= 2
};

std::vector<double> rotation_2d(double angle);

Point apply_map(const WeakContraction& w, const Point& p);

// Iterates p <- f(p) until distance(p, f(p)) <= tol. Unique limit exists for
// a genuine weak contraction on a complete space; convergence can be slow
// when alpha(t) is near 1, hence the iteration cap.
Point fixed_point(const WeakContraction& w, const MetricDomain& dom,
                  Point start, double tol, long max_iter);

// Randomized check of d(f(x), f(y)) <= alpha~(d(x, y)) * d(x, y) + slack on
// sampled pairs from the box. Evidence, not proof.
struct Violation {
  Point a;
  Point b;
  double pair_distance = 0.0;
  double image_distance = 0.0;
  double allowed = 0.0;  // alpha~(d) * d + slack
};

struct ValidationReport {
  bool pass = true;
  double worst_ratio = 0.0;  // max of image_distance / (alpha~(d) * d)
  long n_pairs = 0;
  std::uint64_t seed = 0;
  long violation_count = 0;
  std::vector<Violation> violations;  // at most 10, in sampling order
};

// slack < 0 selects the default 1e-9 * D. Pairs are drawn in fixed-size
// chunks with per-chunk substreams of `seed`, so the report is identical for
// any worker count. One pair in ten is drawn at log-uniform small separation
// (down to 1e-6 * D) because small-distance behavior governs the bound.
ValidationReport validate_weak_contraction(const WeakContraction& w,
                                           const MetricDomain& dom,
                                           long n_pairs, std::uint64_t seed,
                                           double slack = -1.0);

// Per-map reports with substream seeds derived from `seed` and map index.
std::vector<ValidationReport> validate_system(const IFSystem& sys,
                                              long n_pairs_per_map,
                                              std::uint64_t seed,
                                              double slack = -1.0);

}  // namespace wcdim
