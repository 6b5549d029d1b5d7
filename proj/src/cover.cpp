#include "wcdim/cover.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "wcdim/errors.hpp"
#include "wcdim/moran.hpp"
#include "wcdim/util.hpp"

namespace wcdim {

double WordBoundLevel::max_bound() const {
  return entries.empty() ? 0.0 : entries.back().first;
}

std::uint64_t WordBoundLevel::word_count() const {
  std::uint64_t n = 0;
  for (const auto& [value, mult] : entries) n += mult;
  return n;
}

double compute_K(std::span<const EnvelopeFunction> envelopes, double diameter) {
  if (envelopes.size() < 2)
    throw std::invalid_argument("need at least two envelopes");
  if (!(diameter > 0.0)) throw std::invalid_argument("diameter must be positive");
  double k = 0.0;
  for (const EnvelopeFunction& env : envelopes) k = std::max(k, env(diameter));
  if (!(k < 1.0))
    throw DegenerateK("K = " + format_number(k) + " is not below 1");
  return k;
}

namespace {

// Quantize to 12 significant digits so variable envelopes dedup; without
// this every level would carry m^n distinct values.
double quantize(double v) {
  if (v == 0.0) return 0.0;
  double mag = std::pow(10.0, std::floor(std::log10(v)) - 11.0);
  return std::round(v / mag) * mag;
}

using LevelMap = std::map<double, std::uint64_t>;

LevelMap expand(const LevelMap& level,
                std::span<const EnvelopeFunction> envelopes) {
  LevelMap next;
  for (const auto& [bound, mult] : level) {
    for (const EnvelopeFunction& env : envelopes) {
      double b = quantize(env(bound) * bound);
      next[b] += mult;
    }
  }
  return next;
}

WordBoundLevel to_level(const LevelMap& level, int depth, long m) {
  WordBoundLevel out;
  out.depth = depth;
  out.m = m;
  out.entries.assign(level.begin(), level.end());
  return out;
}

void check_word_budget(std::uint64_t words, long m, long long word_limit,
                       int depth) {
  if (words > static_cast<std::uint64_t>(word_limit) / static_cast<std::uint64_t>(m))
    throw TooManyWords("level " + std::to_string(depth + 1) + " would hold " +
                       std::to_string(words) + " * " + std::to_string(m) +
                       " words (limit " + std::to_string(word_limit) + ")");
}

}  // namespace

WordBoundLevel word_bounds(std::span<const EnvelopeFunction> envelopes,
                           double diameter, int depth, long long word_limit) {
  if (envelopes.size() < 2)
    throw std::invalid_argument("need at least two envelopes");
  if (!(diameter > 0.0)) throw std::invalid_argument("diameter must be positive");
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  if (word_limit < 1) throw std::invalid_argument("word_limit must be >= 1");

  long m = static_cast<long>(envelopes.size());
  LevelMap level{{diameter, 1}};
  for (int n = 0; n < depth; ++n) {
    check_word_budget(to_level(level, n, m).word_count(), m, word_limit, n);
    level = expand(level, envelopes);
  }
  return to_level(level, depth, m);
}

double premeasure_sum(const WordBoundLevel& level, double p) {
  if (!(p >= 0.0)) throw std::invalid_argument("exponent must be >= 0");
  double sum = 0.0;
  for (const auto& [bound, mult] : level.entries) {
    if (bound > 0.0)  // 0^p := 0, including p = 0
      sum += static_cast<double>(mult) * std::pow(bound, p);
  }
  return sum;
}

int depth_for_epsilon(std::span<const EnvelopeFunction> envelopes,
                      double diameter, double eps, long long word_limit) {
  if (envelopes.size() < 2)
    throw std::invalid_argument("need at least two envelopes");
  if (!(diameter > 0.0)) throw std::invalid_argument("diameter must be positive");
  if (!(eps > 0.0)) throw std::invalid_argument("epsilon must be positive");

  // Covers are indexed by nonempty words, so the minimum depth is 1 even
  // when eps >= D.
  long m = static_cast<long>(envelopes.size());
  (void)compute_K(envelopes, diameter);  // reject degenerate data up front

  LevelMap level{{diameter, 1}};
  for (int n = 0;; ++n) {
    check_word_budget(to_level(level, n, m).word_count(), m, word_limit, n);
    level = expand(level, envelopes);
    if (level.rbegin()->first <= eps) return n + 1;
  }
}

ProofBoundReport proof_bound_check(std::span<const EnvelopeFunction> envelopes,
                                   double diameter, double t, int depth,
                                   long long word_limit) {
  if (!(t > 0.0)) throw std::invalid_argument("t must be positive");

  ProofBoundReport report;
  report.t = t;
  report.depth = depth;
  report.p = depth_for_epsilon(envelopes, diameter, t, word_limit);
  if (depth < report.p + 2)
    throw DepthTooShallow("depth " + std::to_string(depth) +
                          " is below p + 2 = " + std::to_string(report.p + 2));

  report.k = compute_K(envelopes, diameter);

  MoranProblem mp;
  for (const EnvelopeFunction& env : envelopes)
    mp.coefficients.push_back(env(t));
  report.x_t = solve_moran(mp);

  report.lhs = premeasure_sum(word_bounds(envelopes, diameter, depth, word_limit),
                              report.x_t);

  double tail = std::pow(report.k, report.p + 1) * diameter;
  report.rhs = tail > 0.0 ? std::pow(tail, report.x_t) : 0.0;  // 0^x := 0

  report.suffix_words = 1;
  for (int i = 0; i <= report.p; ++i)
    report.suffix_words *= static_cast<std::uint64_t>(envelopes.size());

  double budget = static_cast<double>(report.suffix_words) * report.rhs;
  report.holds = report.lhs <= budget + 1e-9 * std::max(1.0, budget);
  return report;
}

}  // namespace wcdim
