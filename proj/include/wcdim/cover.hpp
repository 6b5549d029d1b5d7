#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wcdim/coeff.hpp"

namespace wcdim {

// Per-word diameter bounds at one depth. B(empty) = D and
// B(j.w) = alpha~_j(B(w)) * B(w), so B(w) bounds dia S_w from above (it is
// never claimed tight). Entries are deduplicated (value, multiplicity) pairs
// with values quantized to 12 significant digits; multiplicities sum to m^n.
struct WordBoundLevel {
  int depth = 0;
  long m = 0;
  std::vector<std::pair<double, std::uint64_t>> entries;  // ascending values

  double max_bound() const;
  std::uint64_t word_count() const;
};

inline constexpr long long kDefaultWordLimit = 10'000'000;

// K = max_j alpha~_j(D): the uniform per-level decay factor of the word
// covers. Throws DegenerateK if K >= 1 (only possible from corrupt data).
double compute_K(std::span<const EnvelopeFunction> envelopes, double diameter);

WordBoundLevel word_bounds(std::span<const EnvelopeFunction> envelopes,
                           double diameter, int depth,
                           long long word_limit = kDefaultWordLimit);

// sum_w B(w)^p with the 0^p := 0 convention (also at p = 0). Once
// max_w B(w) <= eps this upper-bounds the Hausdorff pre-measure H^p_eps(S).
double premeasure_sum(const WordBoundLevel& level, double p);

// Smallest depth n >= 1 with max_w B(w) <= eps. Finite because
// max B <= K^n * D -> 0.
int depth_for_epsilon(std::span<const EnvelopeFunction> envelopes,
                      double diameter, double eps,
                      long long word_limit = kDefaultWordLimit);

// Numerical replay of the closing estimate: with p chosen so every word
// bound beyond depth p is <= t, each depth-n word bound factors into
// n-p-1 leading alpha~(t) terms and a K^{p+1} * D tail, so
//
//   sum_w B(w)^{x(t)}  <=  m^{p+1} * (K^{p+1} * D)^{x(t)}
//
// (the m^{p+1} counts the words sharing each leading factor string; the sum
// over leading strings collapses to 1 by the definition of x(t)). lhs is the
// plain premeasure sum at x(t), rhs the closed form, and holds compares
// lhs <= suffix_words * rhs with a small relative slack.
struct ProofBoundReport {
  int p = 0;
  int depth = 0;
  double t = 0.0;
  double x_t = 0.0;
  double k = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  std::uint64_t suffix_words = 0;  // m^(p+1)
  bool holds = false;
};

ProofBoundReport proof_bound_check(std::span<const EnvelopeFunction> envelopes,
                                   double diameter, double t, int depth,
                                   long long word_limit = kDefaultWordLimit);

}  // namespace wcdim
