#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wcdim/expression.hpp"

namespace wcdim {

// Sampling policy for expression-kind coefficients. The envelope of an
// expression is a suffix minimum over this grid (geometric spacing), refined
// once around detected local minima by default.
struct SampleGrid {
  double t_min = 1e-8;
  double t_max = 4.0;
  int points = 2048;
  int refine_passes = 1;
  int refine_subdiv = 16;
  // Largest drop a fresh probe sample may show below the computed suffix
  // minima before the grid is declared too coarse.
  double settle_tol = 1e-3;
};

// Variable contraction coefficient of one map: a function of the distance
// bound t on (0, inf) with values in [0, 1). Immutable after construction.
class CoefficientFunction {
 public:
  enum class Kind { constant, piecewise, expression };

  static CoefficientFunction constant(double value);

  // Value values[0] on (0, breaks[0]), values[i] on [breaks[i-1], breaks[i]),
  // values[k] on [breaks[k-1], inf). Breakpoints strictly increasing, > 0.
  static CoefficientFunction piecewise(std::vector<double> breakpoints,
                                       std::vector<double> values);

  // Single-variable expression in t. The grid is sampled eagerly so range
  // violations surface at construction.
  static CoefficientFunction expression(Expression expr, SampleGrid grid);

  Kind kind() const { return kind_; }

  // Evaluates alpha(t) for t > 0. Expression kinds are evaluated directly
  // (not looked up on the grid) and range-checked per call.
  double operator()(double t) const;

  // True when some value lies within 1e-12 of 1. Such coefficients are legal
  // but drive the cover decay constant K toward 1.
  bool near_unit() const { return near_unit_; }

  // Introspection for printing and structural comparison.
  std::span<const double> breakpoints() const { return breakpoints_; }
  std::span<const double> values() const { return values_; }
  const std::optional<Expression>& expr() const { return expr_; }
  const SampleGrid& grid() const { return grid_; }

 private:
  CoefficientFunction() = default;

  Kind kind_ = Kind::constant;
  std::vector<double> breakpoints_;  // piecewise only
  std::vector<double> values_;       // constant: 1 entry; piecewise: k+1
  std::optional<Expression> expr_;   // expression only
  SampleGrid grid_;
  std::vector<double> grid_t_;       // cached base samples (expression only)
  std::vector<double> grid_alpha_;
  bool near_unit_ = false;

  friend class EnvelopeBuilder;
};

// Tail infimum of a coefficient function: alpha~(t) = inf_{p>t} alpha(p),
// defined on [0, inf). Monotone nondecreasing step function; exact for
// constant and piecewise kinds, sampled for expression kinds.
class EnvelopeFunction {
 public:
  EnvelopeFunction(std::vector<double> knots, std::vector<double> values);

  // Step evaluation: value of the last knot <= t. Requires t >= 0.
  double operator()(double t) const;

  // inf_{p>0} alpha(p); equals (*this)(0).
  double value_at_zero() const { return values_.front(); }

  std::span<const double> knots() const { return knots_; }
  std::span<const double> values() const { return values_; }

 private:
  std::vector<double> knots_;   // knots_[0] == 0, strictly increasing
  std::vector<double> values_;  // nondecreasing, in [0, 1)
};

double eval_alpha(const CoefficientFunction& f, double t);

// Tail-infimum envelope. Throws GridTooCoarse when expression sampling has
// not settled after the allowed refinement passes.
EnvelopeFunction envelope(const CoefficientFunction& f);

// inf_{t>0} alpha(t): the coefficient that enters the Moran equation.
double global_infimum(const CoefficientFunction& f);

}  // namespace wcdim
