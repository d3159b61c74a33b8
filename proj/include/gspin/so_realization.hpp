#ifndef GSPIN_SO_REALIZATION_HPP
#define GSPIN_SO_REALIZATION_HPP

#include "gspin/exact/mpoly.hpp"
#include "gspin/exact/padic.hpp"
#include "gspin/root_data.hpp"

#include <optional>
#include <vector>

namespace gspin {

Mat j_prime(std::size_t n);
Mat j_tilde(std::size_t n);

struct Forms {
  Mat j_prime;
  Mat j_tilde;
  bool transpose_sign_ok;  // tJ' = (-1)^(n-1) J'
  bool square_ok;          // J'^2 = (-1)^(n-1) I
  bool det_ok;             // det J' = 1
};

Forms build_forms(std::size_t n);

// Size-(2n+1) matrix h with tH J~ h = J~ and det h = 1.
bool in_so(const Mat& h);

template <class T>
Matrix<T> levi_matrix(const Matrix<T>& g, const Matrix<T>& g_inv) {
  const std::size_t n = g.rows();
  Matrix<T> jp = j_prime(n).map([](const Rat& x) { return T(x); });
  Matrix<T> jp_inv = j_prime(n).transpose().map([](const Rat& x) { return T(x); });
  Matrix<T> m(2 * n + 1, 2 * n + 1);
  m.set_block(0, 0, g);
  m(n, n) = T(1);
  m.set_block(n + 1, n + 1, jp * g_inv.transpose() * jp_inv);
  return m;
}

Mat embed_levi(const Mat& g);
Mat embed_central(std::size_t n, const Rat& t);

// X with Z skew: X = (Z - alpha t(alpha) / 2) J'.
Mat x_from_z(const Mat& z, const RatVec& alpha);
Mat z_from_x(const Mat& x, const RatVec& alpha);
bool n_constraint_holds(const Mat& x, const RatVec& alpha);
Mat embed_upper_x(const Mat& x, const RatVec& alpha);
Mat embed_upper(const Mat& z, const RatVec& alpha);
Mat embed_lower(const Mat& x_tilde, const RatVec& alpha);

struct UpperCoords {
  Mat z;
  RatVec alpha;
};
// Reads (Z, alpha) back from an element of the unipotent radical.
UpperCoords upper_coords(const Mat& h);

struct WeylReps {
  Mat w_h;
  Mat w_theta;
  Mat w0;
  Mat w0_inv;
  Mat w0_tilde_inv;
  SignedPerm w_h_action;
  SignedPerm w_theta_action;
};

WeylReps weyl_representatives(std::size_t n);

// Action on characters of the diagonal torus, read off by conjugating a generic torus element.
std::optional<SignedPerm> torus_action(const Mat& h);

struct PsiCompat {
  bool ok;
  Mat conjugated_levi_block;
  Rat psi_before;
  Rat psi_after;
};

PsiCompat psi_compat_check(const Mat& u_prime);
// Symbolic version over generic superdiagonal coordinates; returns true when the sums agree as polynomials.
bool psi_compat_symbolic(std::size_t n);

bool cutoff_phi(const Mat& x, long kappa, const Int& p);

struct ConjIdentity {
  bool ok;
  bool members_in_so;
  Mat lhs;
  Mat rhs;
};

ConjIdentity cutoff_conj_identity(const Mat& u0, const Mat& y, const RatVec& alpha, const Rat& z0);

struct PinningResult {
  bool found;
  std::vector<int> signs;  // one sign per simple root
  Mat product;
  Mat ratio;  // w_H^-1 * product for the reported pinning
};

// Builds w_H from the reduced word through root subgroups and searches sign conventions.
PinningResult reconstruct_w_h(std::size_t n);

}  // namespace gspin

#endif
