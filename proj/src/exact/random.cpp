#include "gspin/exact/random.hpp"

#include <stdexcept>

namespace gspin {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t hash_name(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t trial_seed(std::uint64_t master, std::string_view suite, int n, int trial) {
  std::uint64_t h = mix64(master);
  h = mix64(h ^ hash_name(suite));
  h = mix64(h ^ static_cast<std::uint64_t>(n));
  return mix64(h ^ static_cast<std::uint64_t>(trial));
}

std::int64_t TrialRng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo)
    throw std::invalid_argument("empty sampling range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
  std::uint64_t r;
  do {
    r = eng_();
  } while (limit != 0 && r >= limit);
  return lo + static_cast<std::int64_t>(span == 0 ? r : r % span);
}

Rat TrialRng::nonzero(std::int64_t bound) {
  std::int64_t v = uniform(1, 2 * bound);
  return Rat(static_cast<long>(v <= bound ? v : bound - v));
}

Rat TrialRng::any(std::int64_t bound) { return Rat(static_cast<long>(uniform(-bound, bound))); }

std::vector<Rat> TrialRng::nonzero_vector(std::size_t n, std::int64_t bound) {
  std::vector<Rat> v;
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(nonzero(bound));
  return v;
}

}  // namespace gspin
