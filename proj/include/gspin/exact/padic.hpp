#ifndef GSPIN_EXACT_PADIC_HPP
#define GSPIN_EXACT_PADIC_HPP

#include "gspin/exact/rat.hpp"

#include <optional>
#include <string>

namespace gspin {

struct PadicVal {
  std::optional<long> value;  // empty means +infinity
  Int prime;

  bool infinite() const { return !value.has_value(); }
  // v >= bound, with +infinity above every bound
  bool at_least(long bound) const { return infinite() || *value >= bound; }
  std::string to_string() const { return infinite() ? "+inf" : std::to_string(*value); }
  friend bool operator==(const PadicVal& a, const PadicVal& b) {
    return a.value == b.value && a.prime == b.prime;
  }
};

bool is_prime(const Int& p);

// Throws std::invalid_argument when p is not prime.
PadicVal padic_val(const Rat& x, const Int& p);

}  // namespace gspin

#endif
