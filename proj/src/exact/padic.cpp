#include "gspin/exact/padic.hpp"

#include <stdexcept>

namespace gspin {

bool is_prime(const Int& p) {
  if (p < 2)
    return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

namespace {

long strip(Int v, const Int& p) {
  long k = 0;
  if (v < 0)
    v = -v;
  while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    ++k;
  }
  return k;
}

}  // namespace

PadicVal padic_val(const Rat& x, const Int& p) {
  if (!is_prime(p))
    throw std::invalid_argument("padic_val: " + p.get_str() + " is not prime");
  if (x.is_zero())
    return {std::nullopt, p};
  return {strip(x.num(), p) - strip(x.den(), p), p};
}

}  // namespace gspin
