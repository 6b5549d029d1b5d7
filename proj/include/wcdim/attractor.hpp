#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "wcdim/ifs.hpp"

namespace wcdim {

// Sampled approximation of the attractor S.
struct PointCloud {
  std::vector<Point> points;
  int dimension = 1;
  std::uint64_t seed = 0;
  long n_points = 0;
  long burn_in = 0;
};

struct ChaosGameOptions {
  long n_points = 100000;
  std::uint64_t seed = 1;
  long burn_in = 100;
  // Per-map selection weights; empty means uniform. The attractor is
  // measure-independent, so uniform is the neutral default.
  std::vector<double> weights;
};

// Random-composition orbit: p0 is the fixed point of map 1 (so the whole
// orbit lies in S up to the fixed-point tolerance), each step applies a
// randomly chosen map, and the first burn_in points of the sequence are
// discarded. Deterministic for a given seed.
PointCloud chaos_game(const IFSystem& sys, const ChaosGameOptions& opt);
PointCloud chaos_game(const IFSystem& sys, long n_points, std::uint64_t seed,
                      long burn_in = 100);

// Grid approximation of the sets S_n in the iteration S_{k+1} = U_j f_j(S_k),
// starting from the full box. Cells are tracked by mapping occupied-cell
// centers, which approximates (not encloses) the true image sets.
struct CellSet {
  double resolution = 1.0;             // cell side h
  std::vector<double> origin;          // box lo
  std::vector<std::int64_t> dims;      // cells per axis
  std::vector<std::int64_t> cells;     // sorted linear indices
  int iterations = 0;                  // iterations actually performed

  Point center(std::int64_t linear_index) const;
  std::vector<Point> centers() const;
};

CellSet iterate_sets(const IFSystem& sys, double resolution, int max_iter,
                     double stop_tol = 0.0);

struct DiameterEstimate {
  double value = 0.0;
  bool exact = true;
};

// Max pairwise distance: exact up to 2e4 points, otherwise a deterministic
// farthest-pair refinement seeded from an exact subsample scan. Never
// exceeds the box diameter.
DiameterEstimate diameter_estimate(const PointCloud& cloud,
                                   const MetricDomain& dom);

// Symmetric Hausdorff distance, exact for the given finite sets.
double hausdorff_distance(const PointCloud& a, const PointCloud& b,
                          const MetricDomain& dom);
double hausdorff_distance(const CellSet& a, const CellSet& b,
                          const MetricDomain& dom);

// Image of a cloud under all maps of the system (union over j of f_j(A));
// used by the invariance check hausdorff(A, U_j f_j(A)).
PointCloud map_cloud(const IFSystem& sys, const PointCloud& cloud);

// CSV with header x1,...,xd and one point per row, 17 significant digits.
void write_cloud_csv(std::ostream& out, const PointCloud& cloud);
PointCloud read_cloud_csv(std::istream& in);

}  // namespace wcdim
