#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace prophet {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Feasibility / optimality tolerance used by the LP layer.
inline constexpr double kLpTolerance = 1e-9;
// Tolerance for reported comparisons (oracle checks, Lipschitz bounds).
inline constexpr double kCompareTolerance = 1e-7;

// Malformed instance, policy or CLI configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its contract (e.g. missing conditioning).
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A brute-force oracle or DP refused an instance above its size guard.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Counter-based generator: every output is a pure function of
// (key, counter), so streams keyed by (seed, replication, purpose) are
// reproducible regardless of scheduling.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng() = default;
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() { return mix(key_ + 0x9E3779B97F4A7C15ULL * ++counter_); }

  // Uniform double in [0, 1).
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  std::uint64_t key() const { return key_; }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

// Derives a child key from a parent key and a label.
inline std::uint64_t derive_key(std::uint64_t parent, std::uint64_t label) {
  return CounterRng::mix(parent ^ CounterRng::mix(label + 0x632BE59BD9B4E019ULL));
}

// Stream purposes, so arrivals and policy coin flips never share draws.
enum class Stream : std::uint64_t {
  kArrivals = 1,
  kPolicy = 2,
  kOracle = 3,
  kInstance = 4,
};

inline CounterRng make_stream(std::uint64_t seed, std::uint64_t replication, Stream purpose) {
  return CounterRng(derive_key(derive_key(seed, replication), static_cast<std::uint64_t>(purpose)));
}

}  // namespace prophet
