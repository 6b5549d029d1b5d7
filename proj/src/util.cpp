#include "wcdim/util.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wcdim {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  const char* env = std::getenv("WCDIM_THREADS");
  if (env == nullptr) return hw;
  long n = std::strtol(env, nullptr, 10);
  if (n <= 0) return hw;
  return static_cast<int>(n);
}

void for_chunks(std::size_t n_chunks,
                const std::function<void(std::size_t)>& fn) {
  if (n_chunks == 0) return;
  std::size_t workers = static_cast<std::size_t>(worker_count());
  if (workers > n_chunks) workers = n_chunks;
  if (workers <= 1) {
    for (std::size_t i = 0; i < n_chunks; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto body = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n_chunks) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t state = seed;
  (void)splitmix64(state);
  state += index * 0x9E3779B97F4A7C15ull;
  std::uint64_t sub = splitmix64(state);
  return Rng(splitmix64(sub));
}

double Rng::normal() {
  // Box-Muller; u1 bounded away from 0 so the log is finite.
  double u1 = uniform01();
  double u2 = uniform01();
  if (u1 < 1e-300) u1 = 1e-300;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace wcdim
