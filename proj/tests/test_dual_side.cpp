#include "gspin/dual_side.hpp"
#include "gspin/exact/linalg.hpp"
#include "gspin/exact/random.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace gspin;

namespace {

Mat random_invertible(TrialRng& rng, std::size_t n) {
  for (;;) {
    Mat g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        g(i, j) = rng.any(15);
    if (!bareiss_det(g).is_zero())
      return g;
  }
}

Mat random_symmetric(TrialRng& rng, std::size_t n) {
  Mat y(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      y(i, j) = y(j, i) = rng.any(30);
  return y;
}

}  // namespace

TEST(DualSideTest, LeviElementsAreSimilitudes) {
  TrialRng rng(1);
  for (std::size_t n = 1; n <= 4; ++n) {
    Mat j = symplectic_form(n);
    EXPECT_EQ(j.transpose(), -j);
    auto m = levi_elt(random_invertible(rng, n), rng.nonzero(20));
    EXPECT_TRUE(in_gsp(m.mat, m.similitude));
    EXPECT_FALSE(in_gsp(m.mat, m.similitude + Rat(1)));
  }
}

TEST(DualSideTest, AdjointIsAGroupActionWithClosedForm) {
  TrialRng rng(2);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int k = 0; k < 20; ++k) {
      Mat g1 = random_invertible(rng, n), g2 = random_invertible(rng, n);
      Rat a1 = rng.nonzero(20), a2 = rng.nonzero(20);
      auto m1 = levi_elt(g1, a1), m2 = levi_elt(g2, a2);
      GSpElt m12{m1.mat * m2.mat, m1.similitude * m2.similitude};
      Mat y = random_symmetric(rng, n);
      ASSERT_TRUE(in_gsp_lie(nilpotent_of(y)));
      ASSERT_EQ(adjoint_action(m12, y), adjoint_action(m1, adjoint_action(m2, y)));
      ASSERT_EQ(adjoint_action(m1, y), adjoint_closed_form(g1, a1, y));
      ASSERT_EQ(adjoint_action(m1, y), a1.inverse() * (g1 * y * g1.transpose()));
    }
}

TEST(DualSideTest, EigenvaluesMatchSym2Satake) {
  TrialRng rng(3);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int k = 0; k < 10; ++k) {
      std::vector<Rat> chi;
      for (std::size_t i = 0; i < n; ++i)
        chi.push_back(rng.nonzero(25));
      Rat a0 = rng.nonzero(25);
      Mat act = sym2_action_matrix(levi_elt(Mat::diagonal(chi), a0));
      std::vector<Rat> eig;
      for (std::size_t i = 0; i < act.rows(); ++i)
        for (std::size_t j = 0; j < act.cols(); ++j)
          if (i == j)
            eig.push_back(act(i, i));
          else
            ASSERT_TRUE(act(i, j).is_zero());
      std::vector<Rat> expected;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
          expected.push_back(chi[i] * chi[j] / a0);
      auto sat = sym2_satake(chi, a0.inverse());
      std::sort(eig.begin(), eig.end());
      std::sort(expected.begin(), expected.end());
      auto got = sat.eigenvalues;
      std::sort(got.begin(), got.end());
      ASSERT_EQ(eig, expected);
      ASSERT_EQ(got, expected);
    }
}

TEST(DualSideTest, LPolynomial) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Rat> chi;
    for (std::size_t i = 0; i < n; ++i)
      chi.push_back(Rat(static_cast<long>(i) + 2));
    auto s = sym2_satake(chi, Rat(1, 3));
    EXPECT_EQ(s.l_poly.size(), n * (n + 1) / 2 + 1);
    EXPECT_EQ(s.l_poly.front(), Rat(1));
    Rat top(1);
    for (const auto& e : s.eigenvalues)
      top *= -e;
    EXPECT_EQ(s.l_poly.back(), top);
  }
  auto one = sym2_satake({Rat(2)}, Rat(3));
  EXPECT_EQ(one.l_poly, (std::vector<Rat>{Rat(1), Rat(-12)}));
}

TEST(DualSideTest, LeviRestrictionBlocksInvariant) {
  TrialRng rng(4);
  for (auto [n1, n2] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {1, 2}, {2, 2}})
    for (int k = 0; k < 20; ++k) {
      auto b = levi_restriction_blocks(n1, n2, random_invertible(rng, n1), random_invertible(rng, n2), rng.nonzero(20));
      ASSERT_TRUE(b.invariant);
      ASSERT_EQ(b.dim_y1, n1 * (n1 + 1) / 2);
      ASSERT_EQ(b.dim_y4, n2 * (n2 + 1) / 2);
      ASSERT_EQ(b.dim_y2, n1 * n2);
    }
}
