#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>

namespace wcdim {

// Formats a double with 17 significant digits, enough to round-trip exactly.
std::string format_number(double v);

// Worker cap from WCDIM_THREADS (0 or unset = hardware concurrency).
int worker_count();

// Runs fn(chunk_index) for chunk_index in [0, n_chunks) on up to
// worker_count() threads. Chunks must be independent; callers merge
// per-chunk results in index order so the outcome does not depend on
// scheduling. The first exception thrown by any chunk is rethrown.
void for_chunks(std::size_t n_chunks, const std::function<void(std::size_t)>& fn);

// SplitMix64 step (Steele, Lea, Vigna). Used only to derive substream seeds.
std::uint64_t splitmix64(std::uint64_t& state);

// Seeded generator with portable output. std::mt19937_64 is fully specified
// by the standard and uniform doubles are derived from raw 64-bit words, so
// streams are bit-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Substream `index` of the stream identified by `seed`; streams for
  // distinct indices are decorrelated via SplitMix64.
  static Rng substream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t bits() { return gen_(); }

  // Uniform in [0, 1) with 53 random mantissa bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n). n must be >= 1.
  std::uint64_t below(std::uint64_t n) {
    auto v = static_cast<std::uint64_t>(uniform01() * static_cast<double>(n));
    return v < n ? v : n - 1;
  }

  // Standard normal via Box-Muller (no state beyond the generator).
  double normal();

 private:
  std::mt19937_64 gen_;
};

// FNV-1a 64-bit digest as a fixed-width hex string.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace wcdim
