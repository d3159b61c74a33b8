#include "gspin/bruhat_engine.hpp"
#include "gspin/exact/linalg.hpp"
#include "gspin/orbit_measure.hpp"
#include "gspin/so_realization.hpp"

#include <gtest/gtest.h>

using namespace gspin;

namespace {

Mat random_unipotent(TrialRng& rng, std::size_t n) {
  Mat u = Mat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      u(i, j) = rng.any(40);
  return u;
}

// Antidiagonal form with signs (-1)^i in the first n rows, built entry by entry.
Mat hand_j_tilde(std::size_t n) {
  const std::size_t m = 2 * n + 1;
  Mat jt(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t r = std::min(i, m - 1 - i);
    jt(i, m - 1 - i) = r == n || r % 2 == 0 ? Rat(1) : Rat(-1);
  }
  return jt;
}

bool preserves_form(const Mat& h) {
  Mat jt = hand_j_tilde((h.rows() - 1) / 2);
  return h.transpose() * jt * h == jt && bareiss_det(h) == Rat(1);
}

}  // namespace

TEST(SoRealizationTest, FormsAndSigns) {
  EXPECT_EQ(j_prime(3), (Mat{{0, 0, 1}, {0, -1, 0}, {1, 0, 0}}));
  EXPECT_EQ(j_prime(2), (Mat{{0, 1}, {-1, 0}}));
  for (std::size_t n = 1; n <= 6; ++n) {
    auto f = build_forms(n);
    EXPECT_TRUE(f.transpose_sign_ok && f.square_ok && f.det_ok) << n;
    EXPECT_EQ(f.j_tilde, hand_j_tilde(n));
  }
}

TEST(SoRealizationTest, WeylRepresentativesLieInSo) {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto r = weyl_representatives(n);
    EXPECT_TRUE(preserves_form(r.w_h));
    EXPECT_TRUE(preserves_form(r.w_theta));
    EXPECT_TRUE(preserves_form(r.w0));
    EXPECT_EQ(r.w0 * r.w0_inv, Mat::identity(2 * n + 1));
    EXPECT_EQ(r.w_h_action, weyl_w_h(static_cast<int>(n)));
    EXPECT_EQ(r.w_theta_action, weyl_w_theta(static_cast<int>(n)));
    EXPECT_EQ(embed_levi(Rat(-1, 2) * Mat::identity(n)) * r.w0_tilde_inv, r.w0_inv);
  }
}

TEST(SoRealizationTest, TorusActionRejectsNonNormalizer) {
  Mat z{{0, 1}, {-1, 0}};
  EXPECT_FALSE(torus_action(embed_upper(z, {Rat(1), Rat(2)})).has_value());
}

TEST(SoRealizationTest, UpperRadicalRoundTrip) {
  TrialRng rng(4);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int k = 0; k < 10; ++k) {
      Mat z(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          z(i, j) = rng.any(30);
          z(j, i) = -z(i, j);
        }
      RatVec alpha = rng.nonzero_vector(n, 30);
      Mat h = embed_upper(z, alpha);
      ASSERT_TRUE(preserves_form(h));
      ASSERT_TRUE(n_constraint_holds(x_from_z(z, alpha), alpha));
      auto c = upper_coords(h);
      ASSERT_EQ(c.z, z);
      ASSERT_EQ(c.alpha, alpha);
    }
}

TEST(SoRealizationTest, LongestElementSwapsLeviBlocks) {
  TrialRng rng(6);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int k = 0; k < 10; ++k) {
      Mat a(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          a(i, j) = rng.any(9) + Rat(i == j ? 40 : 0);
      auto r = weyl_representatives(n);
      Mat m = embed_levi(a);
      Mat c = r.w0 * m * r.w0_inv;
      ASSERT_EQ(c.block(0, 0, n, n), m.block(n + 1, n + 1, n, n));
      ASSERT_EQ(c.block(n + 1, n + 1, n, n), a);
      ASSERT_EQ(c(n, n), Rat(1));
    }
}

TEST(SoRealizationTest, LeviConjugationPreservesOrbitInvariants) {
  for (std::size_t n : {3u, 4u}) {
    TrialRng rng(n);
    for (int k = 0; k < 100; ++k) {
      RatVec a = rng.nonzero_vector(n);
      Mat zt = canonical_rep(a);
      Mat h = embed_upper(zt.block(0, 0, n, n), zt.block(0, n, n, 1).col_vector(0));
      Mat u = embed_levi(random_unipotent(rng, n));
      Mat hp = u * h * inverse(u);
      ASSERT_TRUE(preserves_form(hp));
      auto c = upper_coords(hp);
      ASSERT_EQ(reduce_orbit(skew_from(c.z, c.alpha)).a, a);
    }
  }
}

TEST(SoRealizationTest, PsiCompatibility) {
  for (std::size_t n = 1; n <= 4; ++n)
    EXPECT_TRUE(psi_compat_symbolic(n)) << n;
  TrialRng rng(2);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int k = 0; k < 100; ++k)
      ASSERT_TRUE(psi_compat_check(random_unipotent(rng, n)).ok);
}

TEST(SoRealizationTest, CutoffPhi) {
  Int p(3);
  EXPECT_TRUE(cutoff_phi(Mat{{Rat(1, 3)}}, 1, p));
  EXPECT_FALSE(cutoff_phi(Mat{{Rat(1, 3)}}, 0, p));
  // entry (1,2) carries weight 2
  EXPECT_TRUE(cutoff_phi(Mat{{0, Rat(1, 9)}, {0, 0}}, 1, p));
  EXPECT_FALSE(cutoff_phi(Mat{{0, Rat(1, 27)}, {0, 0}}, 1, p));
}

TEST(SoRealizationTest, CutoffConjugationIdentity) {
  TrialRng rng(12);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int k = 0; k < 10; ++k) {
      RatVec a = rng.nonzero_vector(n);
      auto c = cutoff_conj_identity(random_unipotent(rng, n), y_matrix(a), alpha_of(a), rng.nonzero(30));
      ASSERT_TRUE(c.ok);
      ASSERT_TRUE(c.members_in_so);
    }
}

TEST(SoRealizationTest, PinningReconstructionOfWH) {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto r = reconstruct_w_h(n);
    if (n % 2 == 1) {
      EXPECT_TRUE(r.found) << n;
      EXPECT_EQ(r.product, weyl_representatives(n).w_h);
    } else {
      EXPECT_FALSE(r.found) << n;
      RatVec d(2 * n + 1, Rat(-1));
      d[n] = 1;
      EXPECT_EQ(r.ratio, Mat::diagonal(d)) << n;
    }
  }
}
