#pragma once

#include <span>
#include <vector>

#include "wcdim/coeff.hpp"

namespace wcdim {

// Generalized Moran equation sum_j c_j^x = 1 over coefficients c_j in [0, 1).
struct MoranProblem {
  std::vector<double> coefficients;  // m >= 2 entries
  double tolerance = 1e-12;
  // Coefficients below this are treated as exactly zero; with the 0^x = 0
  // convention they never contribute to the sum. Keeps roots finite when a
  // coefficient underflows toward 0.
  double zero_threshold = 1e-15;
};

// Unique nonnegative root of sum over the positive coefficients. Returns 0
// when all coefficients are zero, and also when exactly one is positive
// (c^x = 1 with 0 < c < 1 forces x = 0). Bracketing plus bisection; the sum
// is strictly decreasing from the count of positive coefficients toward 0.
// Throws InvalidCoefficient if any c_j < 0 or >= 1.
double solve_moran(const MoranProblem& problem);

// The curve x(t): root of sum_j alpha~_j(t)^{x(t)} = 1 per grid point.
struct DimensionCurve {
  std::vector<double> t;  // strictly increasing, positive
  std::vector<double> x;  // nondecreasing
  double x_at_zero = 0.0;
};

DimensionCurve x_curve(std::span<const EnvelopeFunction> envelopes,
                       std::span<const double> t_grid,
                       double tolerance = 1e-12);

// Default report grid: geometric points on [1e-6 * diameter, diameter].
std::vector<double> default_t_grid(double diameter, int points = 64);

}  // namespace wcdim
