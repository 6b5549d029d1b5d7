#include "wcdim/moran.hpp"

#include <cmath>
#include <stdexcept>

#include "wcdim/errors.hpp"
#include "wcdim/util.hpp"

namespace wcdim {

double solve_moran(const MoranProblem& problem) {
  const auto& c = problem.coefficients;
  if (c.size() < 2)
    throw std::invalid_argument("Moran problem needs at least two coefficients");
  if (!(problem.tolerance > 0.0))
    throw std::invalid_argument("tolerance must be positive");

  std::vector<double> active;
  active.reserve(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (!(c[j] >= 0.0) || !(c[j] < 1.0))
      throw InvalidCoefficient("coefficient " + std::to_string(j + 1) + " = " +
                               format_number(c[j]) + " outside [0, 1)");
    if (c[j] > problem.zero_threshold) active.push_back(c[j]);
  }

  // All-zero convention, and the single-coefficient case where c^x = 1 has
  // the unique root x = 0.
  if (active.size() <= 1) return 0.0;

  auto g = [&active](double x) {
    double s = 0.0;
    for (double a : active) s += std::pow(a, x);
    return s;
  };

  double lo = 0.0;
  double hi = 1.0;
  int guard = 0;
  while (g(hi) >= 1.0) {
    lo = hi;
    hi *= 2.0;
    if (++guard > 80)
      throw InvalidCoefficient("Moran sum does not drop below 1; coefficients "
                               "too close to 1");
  }

  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 256; ++iter) {
    mid = 0.5 * (lo + hi);
    double gm = g(mid);
    if (std::abs(gm - 1.0) <= problem.tolerance && hi - lo <= problem.tolerance)
      return mid;
    if (gm >= 1.0)
      lo = mid;
    else
      hi = mid;
  }
  return mid;
}

DimensionCurve x_curve(std::span<const EnvelopeFunction> envelopes,
                       std::span<const double> t_grid, double tolerance) {
  if (envelopes.size() < 2)
    throw std::invalid_argument("x_curve needs at least two envelopes");
  if (t_grid.empty()) throw std::invalid_argument("t_grid must be nonempty");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0.0))
      throw std::invalid_argument("t_grid values must be positive");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
      throw std::invalid_argument("t_grid must be strictly increasing");
  }

  DimensionCurve curve;
  curve.t.assign(t_grid.begin(), t_grid.end());
  curve.x.resize(t_grid.size());

  MoranProblem p;
  p.tolerance = tolerance;
  p.coefficients.resize(envelopes.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    for (std::size_t j = 0; j < envelopes.size(); ++j)
      p.coefficients[j] = envelopes[j](t_grid[i]);
    curve.x[i] = solve_moran(p);
  }

  for (std::size_t j = 0; j < envelopes.size(); ++j)
    p.coefficients[j] = envelopes[j].value_at_zero();
  curve.x_at_zero = solve_moran(p);

  // Monotone by the envelopes' monotonicity; solver noise may dip below the
  // previous sample by at most a few tolerances, which we snap away. A larger
  // dip means broken inputs.
  for (std::size_t i = 1; i < curve.x.size(); ++i) {
    if (curve.x[i] < curve.x[i - 1]) {
      if (curve.x[i - 1] - curve.x[i] > 100.0 * tolerance)
        throw std::logic_error("x(t) decreased along the grid");
      curve.x[i] = curve.x[i - 1];
    }
  }
  return curve;
}

std::vector<double> default_t_grid(double diameter, int points) {
  if (!(diameter > 0.0)) throw std::invalid_argument("diameter must be positive");
  if (points < 2) throw std::invalid_argument("grid needs at least two points");
  std::vector<double> grid(static_cast<std::size_t>(points));
  double lo = std::log(1e-6 * diameter);
  double step = (std::log(diameter) - lo) / (points - 1);
  for (int i = 0; i < points; ++i)
    grid[static_cast<std::size_t>(i)] = std::exp(lo + step * i);
  grid.back() = diameter;
  return grid;
}

}  // namespace wcdim
