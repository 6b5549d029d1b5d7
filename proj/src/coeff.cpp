#include "wcdim/coeff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wcdim/errors.hpp"
#include "wcdim/util.hpp"

namespace wcdim {

namespace {

constexpr double kNearUnit = 1.0 - 1e-12;

void check_unit_range(double v) {
  if (!(v >= 0.0) || !(v < 1.0))
    throw EvaluatesOutsideUnit("coefficient value " + format_number(v) +
                               " outside [0, 1)");
}

std::vector<double> geometric_grid(double lo, double hi, int points) {
  std::vector<double> g(static_cast<std::size_t>(points));
  double log_lo = std::log(lo);
  double step = (std::log(hi) - log_lo) / static_cast<double>(points - 1);
  for (int i = 0; i < points; ++i)
    g[static_cast<std::size_t>(i)] = std::exp(log_lo + step * i);
  g.front() = lo;
  g.back() = hi;
  return g;
}

}  // namespace

CoefficientFunction CoefficientFunction::constant(double value) {
  check_unit_range(value);
  CoefficientFunction f;
  f.kind_ = Kind::constant;
  f.values_ = {value};
  f.near_unit_ = value >= kNearUnit;
  return f;
}

CoefficientFunction CoefficientFunction::piecewise(
    std::vector<double> breakpoints, std::vector<double> values) {
  if (breakpoints.empty())
    throw std::invalid_argument("piecewise coefficient needs at least one breakpoint");
  if (values.size() != breakpoints.size() + 1)
    throw std::invalid_argument("piecewise coefficient needs one more value than breakpoints");
  double prev = 0.0;
  for (double b : breakpoints) {
    if (!(b > prev) || !std::isfinite(b))
      throw std::invalid_argument("breakpoints must be positive and strictly increasing");
    prev = b;
  }
  CoefficientFunction f;
  f.kind_ = Kind::piecewise;
  for (double v : values) {
    check_unit_range(v);
    if (v >= kNearUnit) f.near_unit_ = true;
  }
  f.breakpoints_ = std::move(breakpoints);
  f.values_ = std::move(values);
  return f;
}

CoefficientFunction CoefficientFunction::expression(Expression expr,
                                                    SampleGrid grid) {
  if (!(grid.t_min > 0.0) || !(grid.t_max > grid.t_min) || grid.points < 8)
    throw std::invalid_argument("invalid sample grid");
  if (expr.variables().size() != 1)
    throw std::invalid_argument("coefficient expression must have exactly one variable");

  CoefficientFunction f;
  f.kind_ = Kind::expression;
  f.expr_ = std::move(expr);
  f.grid_ = grid;
  f.grid_t_ = geometric_grid(grid.t_min, grid.t_max, grid.points);
  f.grid_alpha_.reserve(f.grid_t_.size());
  for (double t : f.grid_t_) {
    double v = f.expr_->eval(std::span<const double>(&t, 1));
    check_unit_range(v);
    if (v >= kNearUnit) f.near_unit_ = true;
    f.grid_alpha_.push_back(v);
  }
  return f;
}

double CoefficientFunction::operator()(double t) const {
  if (!(t > 0.0)) throw std::invalid_argument("alpha(t) requires t > 0");
  switch (kind_) {
    case Kind::constant:
      return values_.front();
    case Kind::piecewise: {
      // values_[i] on [breakpoints_[i-1], breakpoints_[i]).
      auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
      return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
    }
    case Kind::expression: {
      double v = expr_->eval(std::span<const double>(&t, 1));
      check_unit_range(v);
      return v;
    }
  }
  throw std::logic_error("corrupt coefficient kind");
}

double eval_alpha(const CoefficientFunction& f, double t) { return f(t); }

EnvelopeFunction::EnvelopeFunction(std::vector<double> knots,
                                   std::vector<double> values)
    : knots_(std::move(knots)), values_(std::move(values)) {
  if (knots_.empty() || knots_.size() != values_.size())
    throw std::invalid_argument("envelope needs matching knots and values");
  if (knots_.front() != 0.0)
    throw std::invalid_argument("envelope must start at t = 0");
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (!(knots_[i] > knots_[i - 1]))
      throw std::invalid_argument("envelope knots must be strictly increasing");
    if (values_[i] < values_[i - 1])
      throw std::invalid_argument("envelope values must be nondecreasing");
  }
  for (double v : values_) check_unit_range(v);
}

double EnvelopeFunction::operator()(double t) const {
  if (!(t >= 0.0)) throw std::invalid_argument("envelope requires t >= 0");
  auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
  return values_[static_cast<std::size_t>(it - knots_.begin()) - 1];
}

namespace {

// Suffix minima of piecewise values give the exact envelope: on
// [b_{i-1}, b_i) the tail (t, inf) still sees value v_i and everything after,
// so alpha~ there is min(v_i, ..., v_k).
EnvelopeFunction envelope_piecewise(std::span<const double> breaks,
                                    std::span<const double> values) {
  std::vector<double> suffix(values.begin(), values.end());
  for (std::size_t i = suffix.size() - 1; i-- > 0;)
    suffix[i] = std::min(suffix[i], suffix[i + 1]);

  std::vector<double> knots;
  std::vector<double> vals;
  knots.push_back(0.0);
  vals.push_back(suffix[0]);
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    if (suffix[i + 1] != vals.back()) {
      knots.push_back(breaks[i]);
      vals.push_back(suffix[i + 1]);
    }
  }
  return EnvelopeFunction(std::move(knots), std::move(vals));
}

}  // namespace

class EnvelopeBuilder {
 public:
  static EnvelopeFunction from_expression(const CoefficientFunction& f) {
    const SampleGrid& grid = f.grid_;
    std::vector<double> t = f.grid_t_;
    std::vector<double> a = f.grid_alpha_;
    auto sample = [&f](double p) {
      double v = f.expr_->eval(std::span<const double>(&p, 1));
      check_unit_range(v);
      return v;
    };

    for (int pass = 0; pass < grid.refine_passes; ++pass) {
      std::vector<std::pair<double, double>> extra;
      for (std::size_t i = 1; i + 1 < a.size(); ++i) {
        if (a[i - 1] > a[i] && a[i] <= a[i + 1]) {
          subdivide(t[i - 1], t[i], grid.refine_subdiv, sample, extra);
          subdivide(t[i], t[i + 1], grid.refine_subdiv, sample, extra);
        }
      }
      if (extra.empty()) break;
      merge(t, a, extra);
    }

    // Suffix minima over the final samples; for s in [t_i, t_{i+1}) every
    // sampled p > s is a sample with index > i.
    std::vector<double> suffix(a);
    for (std::size_t i = suffix.size() - 1; i-- > 0;)
      suffix[i] = std::min(suffix[i], suffix[i + 1]);

    // Probe midpoints: a fresh sample below the suffix minimum to its left
    // means the grid missed structure and the envelope would overestimate.
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      double mid = std::sqrt(t[i] * t[i + 1]);
      double v = sample(mid);
      if (suffix[i] - v > worst) worst = suffix[i] - v;
    }
    if (worst > grid.settle_tol)
      throw GridTooCoarse("expression envelope not settled: probe drop " +
                          format_number(worst) + " exceeds tolerance " +
                          format_number(grid.settle_tol));

    std::vector<double> knots;
    std::vector<double> vals;
    knots.push_back(0.0);
    double at_zero = suffix[0];
    vals.push_back(at_zero);
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      double v = suffix[i + 1];
      if (v != vals.back()) {
        knots.push_back(t[i]);
        vals.push_back(v);
      }
    }
    // Beyond the last sample the tail is unknown; hold the last sample value.
    if (a.back() != vals.back()) {
      knots.push_back(t.back());
      vals.push_back(a.back());
    }
    return EnvelopeFunction(std::move(knots), std::move(vals));
  }

 private:
  template <typename F>
  static void subdivide(double lo, double hi, int n, F&& sample,
                        std::vector<std::pair<double, double>>& out) {
    double log_lo = std::log(lo);
    double step = (std::log(hi) - log_lo) / (n + 1);
    for (int k = 1; k <= n; ++k) {
      double p = std::exp(log_lo + step * k);
      out.emplace_back(p, sample(p));
    }
  }

  static void merge(std::vector<double>& t, std::vector<double>& a,
                    std::vector<std::pair<double, double>>& extra) {
    std::vector<std::pair<double, double>> all;
    all.reserve(t.size() + extra.size());
    for (std::size_t i = 0; i < t.size(); ++i) all.emplace_back(t[i], a[i]);
    all.insert(all.end(), extra.begin(), extra.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end(),
                          [](auto& x, auto& y) { return x.first == y.first; }),
              all.end());
    t.clear();
    a.clear();
    for (auto& [tt, aa] : all) {
      t.push_back(tt);
      a.push_back(aa);
    }
  }
};

EnvelopeFunction envelope(const CoefficientFunction& f) {
  switch (f.kind()) {
    case CoefficientFunction::Kind::constant:
      return EnvelopeFunction({0.0}, {f.values()[0]});
    case CoefficientFunction::Kind::piecewise:
      return envelope_piecewise(f.breakpoints(), f.values());
    case CoefficientFunction::Kind::expression:
      return EnvelopeBuilder::from_expression(f);
  }
  throw std::logic_error("corrupt coefficient kind");
}

double global_infimum(const CoefficientFunction& f) {
  return envelope(f).value_at_zero();
}

}  // namespace wcdim
