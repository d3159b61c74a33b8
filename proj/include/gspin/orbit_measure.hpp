#ifndef GSPIN_ORBIT_MEASURE_HPP
#define GSPIN_ORBIT_MEASURE_HPP

#include "gspin/exact/mpoly.hpp"
#include "gspin/exact/random.hpp"

#include <vector>

namespace gspin {

// Skew (n+1)x(n+1) tridiagonal matrix with superdiagonal a_1..a_n.
Mat canonical_rep(const RatVec& a);

// diag(u, 1) Z~ diag(tu, 1)
Mat act_on_skew(const Mat& u, const Mat& z_tilde);
Mat skew_from(const Mat& z, const RatVec& alpha);

struct OrbitReduction {
  Mat u;
  RatVec a;
};

// Throws VerificationError naming the stage when a pivot vanishes.
OrbitReduction reduce_orbit(const Mat& z_tilde);

struct Uniqueness {
  bool same_orbit;
  Mat conjugator;  // the forced unipotent when same_orbit holds
};

Uniqueness orbit_uniqueness_check(const RatVec& a, const RatVec& a_prime);

struct MeasureSymbolic {
  MPoly jacobian;
  MPoly expected;  // prod a_i^(i-1)
  int sign;        // +1 or -1 when jacobian = sign * expected, 0 otherwise
};

std::vector<std::string> measure_variables(std::size_t n);
std::vector<MPoly> orbit_map(std::size_t n);
MeasureSymbolic measure_jacobian_symbolic(std::size_t n);

struct MeasureRandom {
  bool ok;
  std::size_t points;
  long degree_bound;
  Rat per_point_bound;  // Schwartz-Zippel: degree / sample-set size
  std::vector<RatVec> failures;
};

MeasureRandom measure_jacobian_random(std::size_t n, TrialRng& rng, std::size_t points);

struct QuotientExponents {
  std::vector<Rat> k;  // exponents of |a_i| for i < n
  Rat t_exponent;      // |t|^(n^2 - 1)
  Rat residue;
  bool unique;
};

QuotientExponents quotient_measure_exponents(std::size_t n);

}  // namespace gspin

#endif
