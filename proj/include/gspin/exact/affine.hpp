#ifndef GSPIN_EXACT_AFFINE_HPP
#define GSPIN_EXACT_AFFINE_HPP

#include "gspin/exact/rat.hpp"

#include <string>

namespace gspin {

// Exponent p + q*s with exact rational coefficients.
struct AffineExp {
  Rat p;
  Rat q;

  Rat at(const Rat& s) const { return p + q * s; }
  std::string to_string() const;

  AffineExp& operator+=(const AffineExp& o) { p += o.p; q += o.q; return *this; }
  friend AffineExp operator+(AffineExp a, const AffineExp& b) { return a += b; }
  friend AffineExp operator-(AffineExp a, const AffineExp& b) { a.p -= b.p; a.q -= b.q; return a; }
  friend AffineExp operator*(const Rat& k, const AffineExp& a) { return {k * a.p, k * a.q}; }
  friend bool operator==(const AffineExp& a, const AffineExp& b) { return a.p == b.p && a.q == b.q; }
};

}  // namespace gspin

#endif
