#ifndef GSPIN_EXACT_RANDOM_HPP
#define GSPIN_EXACT_RANDOM_HPP

#include "gspin/exact/rat.hpp"

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace gspin {

inline constexpr std::int64_t kSampleBound = 10000;

std::uint64_t mix64(std::uint64_t x);
std::uint64_t hash_name(std::string_view name);
std::uint64_t trial_seed(std::uint64_t master, std::string_view suite, int n, int trial);

class TrialRng {
public:
  explicit TrialRng(std::uint64_t seed) : eng_(seed) { }

  // Uniform in [lo, hi] by rejection, independent of the standard library's distributions.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  Rat nonzero(std::int64_t bound = kSampleBound);
  Rat any(std::int64_t bound = kSampleBound);
  std::vector<Rat> nonzero_vector(std::size_t n, std::int64_t bound = kSampleBound);

private:
  std::mt19937_64 eng_;
};

}  // namespace gspin

#endif
