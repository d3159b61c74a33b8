#include "gspin/so_realization.hpp"

#include "gspin/exact/linalg.hpp"

#include <stdexcept>

namespace gspin {

namespace {

Rat sign_pow(std::size_t k) { return k % 2 == 0 ? Rat(1) : Rat(-1); }

Mat outer(const RatVec& a, const RatVec& b) {
  Mat m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      m(i, j) = a[i] * b[j];
  return m;
}

}  // namespace

Mat j_prime(std::size_t n) { return antidiag_sign_matrix(n); }

Mat j_tilde(std::size_t n) {
  Mat jp = j_prime(n);
  Mat j(2 * n + 1, 2 * n + 1);
  j.set_block(0, n + 1, jp);
  j(n, n) = 1;
  j.set_block(n + 1, 0, jp.transpose());
  return j;
}

Forms build_forms(std::size_t n) {
  Mat jp = j_prime(n);
  Rat s = sign_pow(n - 1);
  return {jp, j_tilde(n), jp.transpose() == s * jp, jp * jp == s * Mat::identity(n), bareiss_det(jp) == Rat(1)};
}

bool in_so(const Mat& h) {
  if (!h.square() || h.rows() % 2 == 0)
    return false;
  Mat j = j_tilde(h.rows() / 2);
  return h.transpose() * j * h == j && bareiss_det(h) == Rat(1);
}

Mat embed_levi(const Mat& g) { return levi_matrix(g, inverse(g)); }

Mat embed_central(std::size_t n, const Rat& t) { return embed_levi(t * Mat::identity(n)); }

Mat x_from_z(const Mat& z, const RatVec& alpha) {
  return (z - Rat(1, 2) * outer(alpha, alpha)) * j_prime(alpha.size());
}

Mat z_from_x(const Mat& x, const RatVec& alpha) {
  return x * j_prime(alpha.size()).transpose() + Rat(1, 2) * outer(alpha, alpha);
}

bool n_constraint_holds(const Mat& x, const RatVec& alpha) {
  Mat jp = j_prime(alpha.size());
  return (x * jp.transpose() + jp * x.transpose() + outer(alpha, alpha)).is_zero();
}

Mat embed_upper_x(const Mat& x, const RatVec& alpha) {
  const std::size_t n = alpha.size();
  Mat jp = j_prime(n);
  Mat h = Mat::identity(2 * n + 1);
  h.set_block(0, n, Mat::column(alpha));
  h.set_block(0, n + 1, x);
  h.set_block(n, n + 1, -(Mat::row(alpha) * jp));
  return h;
}

Mat embed_upper(const Mat& z, const RatVec& alpha) { return embed_upper_x(x_from_z(z, alpha), alpha); }

Mat embed_lower(const Mat& x_tilde, const RatVec& alpha) {
  const std::size_t n = alpha.size();
  Mat jp = j_prime(n);
  Mat xa = x_tilde * Mat::column(alpha);
  Mat h = Mat::identity(2 * n + 1);
  h.set_block(n, 0, -(jp * xa).transpose());
  h.set_block(n + 1, 0, x_tilde);
  h.set_block(n + 1, n, xa);
  return h;
}

UpperCoords upper_coords(const Mat& h) {
  const std::size_t n = h.rows() / 2;
  RatVec alpha = h.block(0, n, n, 1).col_vector(0);
  return {z_from_x(h.block(0, n + 1, n, n), alpha), alpha};
}

WeylReps weyl_representatives(std::size_t n) {
  Mat jp = j_prime(n);
  Mat wh(2 * n + 1, 2 * n + 1);
  wh.set_block(0, n + 1, Rat(-1, 2) * jp);
  wh(n, n) = sign_pow(n);
  wh.set_block(n + 1, 0, Rat(-2) * jp.transpose());
  Mat wt = block_diag<Rat>({jp, Mat::identity(1), jp});
  Mat w0 = wh * inverse(wt);
  Mat w0t_inv(2 * n + 1, 2 * n + 1);
  w0t_inv.set_block(0, n + 1, sign_pow(n - 1) * Mat::identity(n));
  w0t_inv(n, n) = sign_pow(n);
  w0t_inv.set_block(n + 1, 0, Mat::identity(n));
  auto ah = torus_action(wh), at = torus_action(wt);
  if (!ah || !at)
    throw std::logic_error("Weyl representative does not normalize the torus");
  return {wh, wt, w0, inverse(w0), w0t_inv, *ah, *at};
}

std::optional<SignedPerm> torus_action(const Mat& h) {
  const std::size_t n = h.rows() / 2;
  static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  if (n > 16)
    throw std::invalid_argument("torus_action supports n <= 16");
  RatVec t;
  for (std::size_t i = 0; i < n; ++i)
    t.push_back(Rat(primes[i]));
  Mat torus = embed_levi(Mat::diagonal(t));
  Mat conj = h * torus * inverse(h);
  for (std::size_t i = 0; i < conj.rows(); ++i)
    for (std::size_t j = 0; j < conj.cols(); ++j)
      if (i != j && !conj(i, j).is_zero())
        return std::nullopt;
  // the character e_k evaluated on h t h^-1 is t_{w(k)}^{+-1}; record the action of h^-1 on e_k
  std::vector<int> image(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rat d = conj(k, k);
    int found = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (d == t[i])
        found = static_cast<int>(i + 1);
      else if (d == t[i].inverse())
        found = -static_cast<int>(i + 1);
    }
    if (!found)
      return std::nullopt;
    image[k] = found;
  }
  // conj = h t h^-1 has e_k value t_{|image[k]|}^{sign}: e_k o Ad(h) = sign e_{|image[k]|}
  return SignedPerm(image).inverse();
}

namespace {

template <class T>
T superdiag_sum(const Matrix<T>& m) {
  T s(0);
  for (std::size_t i = 0; i + 1 < m.rows(); ++i)
    s += m(i, i + 1);
  return s;
}

}  // namespace

PsiCompat psi_compat_check(const Mat& u_prime) {
  const std::size_t n = u_prime.rows();
  auto reps = weyl_representatives(n);
  Mat conj = reps.w0 * embed_levi(u_prime) * reps.w0_inv;
  Mat block = conj.block(0, 0, n, n);
  Mat expected = embed_levi(block);
  bool levi_shape = conj == expected;
  Rat before = superdiag_sum(u_prime), after = superdiag_sum(block);
  return {levi_shape && before == after, block, before, after};
}

bool psi_compat_symbolic(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      names.push_back("u" + std::to_string(i + 1) + std::to_string(j + 1));
  auto vars = MPoly::variables(names);
  PolyMat u = PolyMat::identity(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      u(i, j) = vars[k++];
  auto reps = weyl_representatives(n);
  PolyMat m = levi_matrix(u, unipotent_inverse(u));
  PolyMat conj = to_poly(reps.w0) * m * to_poly(reps.w0_inv);
  PolyMat block = conj.block(0, 0, n, n);
  PolyMat rebuilt = levi_matrix(block, unipotent_inverse(block));
  return conj == rebuilt && superdiag_sum(u) == superdiag_sum(block);
}

bool cutoff_phi(const Mat& x, long kappa, const Int& p) {
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      long weight = static_cast<long>(i + j + 1);  // (i+1) + (j+1) - 1
      if (!padic_val(x(i, j), p).at_least(-weight * kappa))
        return false;
    }
  return true;
}

ConjIdentity cutoff_conj_identity(const Mat& u0, const Mat& y, const RatVec& alpha, const Rat& z0) {
  const std::size_t n = alpha.size();
  Mat jpt = j_prime(n).transpose();
  Mat y_inv = inverse(y);
  Mat u = embed_levi(u0), z = embed_central(n, z0);
  Mat nbar = embed_lower(jpt * y_inv, alpha);
  Mat lhs = z * inverse(u) * nbar * u * inverse(z);
  Mat u0_inv = inverse(u0);
  RatVec beta = (z0 * (u0_inv * Mat::column(alpha))).col_vector(0);
  Mat rhs = embed_lower(z0.pow(-2) * (jpt * u0.transpose() * y_inv * u0), beta);
  return {lhs == rhs, in_so(nbar) && in_so(lhs) && in_so(rhs), lhs, rhs};
}

namespace {

// Root subgroup elements for the simple roots; the negative one is the transpose.
Mat root_element(std::size_t n, std::size_t i, const Rat& x) {
  if (i < n) {
    Mat g = Mat::identity(n);
    g(i - 1, i) = x;
    return embed_levi(g);
  }
  RatVec alpha(n, Rat(0));
  alpha[n - 1] = x;
  return embed_upper(Mat(n, n), alpha);
}

}  // namespace

PinningResult reconstruct_w_h(std::size_t n) {
  auto reps = weyl_representatives(n);
  auto word = reduced_word_w_h(static_cast<int>(n));
  PinningResult first{false, {}, Mat(), Mat()};
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> signs(n);
    std::vector<Mat> reflection;
    for (std::size_t i = 1; i <= n; ++i) {
      signs[i - 1] = (mask >> (i - 1)) & 1u ? -1 : 1;
      Rat y = i < n ? Rat(-1) : Rat(-2);
      Mat up = root_element(n, i, 1);
      Mat down = root_element(n, i, Rat(signs[i - 1]) * y).transpose();
      reflection.push_back(up * down * up);
    }
    Mat prod = Mat::identity(2 * n + 1);
    for (int s : word)
      prod = prod * reflection[static_cast<std::size_t>(s - 1)];
    Mat ratio = inverse(reps.w_h) * prod;
    if (prod == reps.w_h)
      return {true, signs, prod, ratio};
    if (mask == 0)
      first = {false, signs, prod, ratio};
  }
  return first;
}

}  // namespace gspin
