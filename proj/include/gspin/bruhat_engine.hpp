#ifndef GSPIN_BRUHAT_ENGINE_HPP
#define GSPIN_BRUHAT_ENGINE_HPP

#include "gspin/exact/mpoly.hpp"
#include "gspin/exact/random.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gspin {

Mat y_matrix(const RatVec& a);
RatVec alpha_of(const RatVec& a);
Rat y_det_closed_form(const RatVec& a);
// Determinant of the leading (n-1)-block of Y.
Rat y_minor_closed_form(const RatVec& a);

using ConditionList = std::vector<std::pair<std::string, bool>>;

struct BruhatParts {
  Mat x;
  RatVec alpha;
  Mat g;        // -1/2 J' tY^-1
  Mat g_tilde;  // J' tY^-1, the Levi part for the sign-free Weyl element
  RatVec beta;
  Mat y_prime;  // upper-right block of n', equal to (-1)^(n-1) g~^-1
  Mat x_tilde;  // X^-1
  Mat n_elt;
  Mat m;
  Mat n_prime;
  Mat n_bar;
  Rat a_g;
  ConditionList conditions;
};

// Computes the factorization and checks the product identity and memberships.  With strict set,
// also throws VerificationError naming the first listed condition that fails.
BruhatParts decompose_w0n(const RatVec& a, bool strict = true);

// The listed conditions (1)-(9), (i)-(iii) for w~0^-1 n = m(g~) n' nbar, evaluated from the
// closed-form parts of (X, alpha) with the given upper-right block of n'.  The entry "(3*)"
// is the top-right block comparison g~ Y' = (-1)^(n-1) I.
ConditionList bruhat_conditions(const Mat& x, const RatVec& alpha, const Mat& y_prime);
// The n' block solving the top-right equation of the product.
Mat n_prime_block(const Mat& x);
// The n' block g~^-1 as listed with condition (3).
Mat n_prime_block_listed(const Mat& x);
// (2), (4'), (4) for arbitrary invertible X and alpha.
struct ReductionClaims {
  bool c2;
  bool c4_prime;
  bool c4;
  bool side_i;
  bool side_ii;
};
ReductionClaims reduction_claims(const Mat& x, const RatVec& alpha);

Rat det_g_closed_form(const RatVec& a);
// Positive square root of det(g)^-1.
Rat a_of_g(const RatVec& a);
// The value as displayed in the source formula, kept for comparison.
Rat a_of_g_displayed(const RatVec& a);

struct UAlpha {
  Rat direct;       // read from w0 nbar w0^-1
  Rat closed_form;  // 1/2 det(Y)^-1 prod a_i
  Rat adjugate_nn;
  Rat adjugate_expected;
  bool upper_shape;
};

UAlpha u_alpha_n(const RatVec& a);

struct BigCell {
  Mat u1;
  RatVec d;
  Mat u2;
};

// g = u1 J' diag(d) u2 with u1, u2 upper unipotent; throws when a corner minor vanishes.
BigCell gl_big_cell(const Mat& g);

struct TorusCoords {
  RatVec d;
  Rat d1_closed_form;  // prod_{even} a_j^2 / prod_{odd} a_k^2
  Rat dn_closed_form;  // 1/(4 a_n^2) for n even, 1/a_n^2 for n odd
  Rat d1_factorized;   // prod_{even} a_j^2 / (4^[n even] prod_{odd} a_k^2)
  Rat dn_factorized;   // 1/a_n^2
  bool products_ok;    // d_i d_{i+1} = 1/(4 a_i^2)
  bool det_ok;         // d_1 ... d_n = det g
};

TorusCoords torus_coordinates(const RatVec& a);

bool in_twisted_centralizer(const Mat& u, const Mat& g);

struct TwistedSymbolic {
  bool trivial;
  std::vector<std::string> steps;
};

TwistedSymbolic twisted_centralizer_symbolic(std::size_t n);

struct TwistedRandom {
  bool trivial;
  std::size_t samples;
  std::vector<Mat> members;
};

TwistedRandom twisted_centralizer_random(const RatVec& a, TrialRng& rng, std::size_t samples);

}  // namespace gspin

#endif
