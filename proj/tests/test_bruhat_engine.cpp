#include "gspin/bruhat_engine.hpp"
#include "gspin/error.hpp"
#include "gspin/exact/linalg.hpp"
#include "gspin/so_realization.hpp"

#include <gtest/gtest.h>

using namespace gspin;

namespace {

Rat laplace_det(const Mat& a) {
  const std::size_t n = a.rows();
  if (n == 0)
    return Rat(1);
  Rat total(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c).is_zero())
      continue;
    Mat minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c)
          minor(i - 1, k++) = a(i, j);
    Rat term = a(0, c) * laplace_det(minor);
    total += c % 2 == 0 ? term : -term;
  }
  return total;
}

bool condition(const ConditionList& c, const std::string& name) {
  for (const auto& [k, v] : c)
    if (k == name)
      return v;
  throw std::logic_error("missing condition " + name);
}

Mat random_invertible(TrialRng& rng, std::size_t n) {
  for (;;) {
    Mat g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        g(i, j) = rng.any(20);
    if (!bareiss_det(g).is_zero())
      return g;
  }
}

}  // namespace

TEST(BruhatEngineTest, DetYExampleAndClosedForms) {
  RatVec a{1, 2, 3, 4, 5};
  EXPECT_EQ(laplace_det(y_matrix(a)), Rat(-225, 2));
  EXPECT_EQ(y_det_closed_form(a), Rat(-225, 2));
  TrialRng rng(1);
  for (std::size_t n = 1; n <= 7; ++n)
    for (int k = 0; k < 5; ++k) {
      RatVec b = rng.nonzero_vector(n, 30);
      Mat y = y_matrix(b);
      ASSERT_EQ(bareiss_det(y), y_det_closed_form(b));
      if (n >= 2)
        ASSERT_EQ(laplace_det(y.block(0, 0, n - 1, n - 1)), y_minor_closed_form(b));
    }
}

TEST(BruhatEngineTest, DecompositionIdentityAndConditions) {
  TrialRng rng(2);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int k = 0; k < 20; ++k) {
      RatVec a = rng.nonzero_vector(n);
      auto p = decompose_w0n(a, false);
      auto reps = weyl_representatives(n);
      ASSERT_EQ(reps.w0_inv * p.n_elt, p.m * p.n_prime * p.n_bar);
      ASSERT_TRUE(in_so(p.n_elt) && in_so(p.n_prime) && in_so(p.n_bar));
      for (const auto& [name, ok] : p.conditions) {
        if (name == "(3)")
          ASSERT_EQ(ok, n % 2 == 1) << "n=" << n;
        else
          ASSERT_TRUE(ok) << name << " n=" << n;
      }
      Mat al = Mat::column(p.alpha);
      ASSERT_EQ((al.transpose() * inverse(y_matrix(a)) * al)(0, 0), Rat(n % 2 == 0 ? 0 : -2));
    }
}

TEST(BruhatEngineTest, StrictModeNamesTheFailingCondition) {
  EXPECT_NO_THROW(decompose_w0n({1, 2, 3}));
  try {
    decompose_w0n({1, 2});
    FAIL() << "expected condition (3) to fail for n = 2";
  } catch (const VerificationError& e) {
    EXPECT_EQ(e.where(), "(3)");
  }
  EXPECT_THROW(decompose_w0n({1, 0}), std::exception);
}

TEST(BruhatEngineTest, NPrimeBlockSign) {
  TrialRng rng(3);
  for (std::size_t n = 1; n <= 5; ++n) {
    Mat x = y_matrix(rng.nonzero_vector(n)) * j_prime(n);
    Rat s = n % 2 == 1 ? Rat(1) : Rat(-1);
    EXPECT_EQ(n_prime_block(x), s * n_prime_block_listed(x));
  }
}

TEST(BruhatEngineTest, ReductionClaims) {
  TrialRng rng(4);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int k = 0; k < 20; ++k) {
      RatVec alpha = rng.nonzero_vector(n, 50);
      auto g = reduction_claims(random_invertible(rng, n), alpha);
      ASSERT_EQ(g.c2, g.c4);
      ASSERT_EQ(g.c4, g.c4_prime);
      Mat s(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          s(i, j) = i == j && n % 2 == 0 ? Rat(0) : rng.any(30);
          s(j, i) = n % 2 == 0 ? -s(i, j) : s(i, j);
        }
      Mat x = j_prime(n) * s;
      if (bareiss_det(x).is_zero())
        continue;
      auto f = reduction_claims(x, alpha);
      ASSERT_TRUE(f.c4_prime);
      ASSERT_TRUE(f.c2);
      ASSERT_TRUE(f.c4);
      RatVec a = rng.nonzero_vector(n);
      auto c = reduction_claims(y_matrix(a) * j_prime(n), alpha_of(a));
      ASSERT_TRUE(c.side_i && c.side_ii && c.c4_prime && c.c2 && c.c4);
    }
}

TEST(BruhatEngineTest, GlBigCellExampleAndReconstruction) {
  auto bc = gl_big_cell(Mat{{1, 1}, {1, 2}});
  EXPECT_EQ(bc.u1, (Mat{{1, 1}, {0, 1}}));
  EXPECT_EQ(bc.d, (RatVec{-1, -1}));
  EXPECT_EQ(bc.u2, (Mat{{1, 2}, {0, 1}}));
  TrialRng rng(5);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int k = 0; k < 10; ++k) {
      Mat g = random_invertible(rng, n);
      try {
        auto f = gl_big_cell(g);
        ASSERT_EQ(f.u1 * j_prime(n) * Mat::diagonal(f.d) * f.u2, g);
      } catch (const VerificationError& e) {
        ASSERT_EQ(e.operation(), "gl_big_cell");
      }
    }
  EXPECT_THROW(gl_big_cell(Mat{{1, 0}, {0, 1}}), VerificationError);
}

TEST(BruhatEngineTest, TorusCoordinates) {
  EXPECT_EQ(torus_coordinates({1, 1}).d, (RatVec{Rat(1, 4), 1}));
  EXPECT_EQ(torus_coordinates({1, 2}).d, (RatVec{1, Rat(1, 4)}));
  EXPECT_EQ(torus_coordinates({1, 1, 1}).d, (RatVec{1, Rat(1, 4), 1}));
  TrialRng rng(6);
  for (std::size_t n = 2; n <= 6; ++n)
    for (int k = 0; k < 10; ++k) {
      RatVec a = rng.nonzero_vector(n);
      auto t = torus_coordinates(a);
      auto p = decompose_w0n(a, false);
      ASSERT_EQ(gl_big_cell(p.g).d, t.d);
      ASSERT_TRUE(t.products_ok);
      ASSERT_TRUE(t.det_ok);
      for (std::size_t i = 0; i + 1 < n; ++i)
        ASSERT_EQ(t.d[i] * t.d[i + 1], (4 * a[i] * a[i]).inverse());
      ASSERT_EQ(t.d.front(), t.d1_factorized);
      ASSERT_EQ(t.d.back(), t.dn_factorized);
      ASSERT_EQ(t.d.front() == t.d1_closed_form, n % 2 == 1);
      ASSERT_EQ(t.d.back() == t.dn_closed_form, n % 2 == 1);

      Rat s = rng.nonzero(30);
      RatVec b = a;
      for (std::size_t i = 0; i + 1 < n; ++i)
        b[i] *= s * s;
      b[n - 1] *= s;
      auto ts = torus_coordinates(b);
      for (std::size_t i = 0; i < n; ++i)
        ASSERT_EQ(ts.d[i], t.d[i] / (s * s));
    }
}

TEST(BruhatEngineTest, UAlphaN) {
  EXPECT_EQ(u_alpha_n({1, 1}).direct, Rat(1, 2));
  EXPECT_EQ(u_alpha_n({1, 1, 1}).direct, Rat(-1));
  TrialRng rng(7);
  for (std::size_t n = 2; n <= 6; ++n)
    for (int k = 0; k < 10; ++k) {
      RatVec a = rng.nonzero_vector(n);
      auto u = u_alpha_n(a);
      Rat expected = bareiss_det(y_matrix(a)).inverse() / 2;
      for (const auto& x : a)
        expected *= x;
      ASSERT_EQ(u.direct, expected);
      ASSERT_EQ(u.closed_form, expected);
      ASSERT_EQ(u.adjugate_nn, u.adjugate_expected);
      ASSERT_TRUE(u.upper_shape);
    }
}

TEST(BruhatEngineTest, SpinLiftScalar) {
  EXPECT_EQ(a_of_g({1, 1}), Rat(2));
  EXPECT_EQ(a_of_g_displayed({1, 1}), Rat(1, 2));
  TrialRng rng(8);
  for (std::size_t n = 1; n <= 6; ++n) {
    RatVec a = rng.nonzero_vector(n);
    Rat det_g = bareiss_det(decompose_w0n(a, false).g);
    EXPECT_EQ(det_g, det_g_closed_form(a));
    EXPECT_EQ(det_g * a_of_g(a) * a_of_g(a), Rat(1));
    EXPECT_GT(a_of_g(a), Rat(0));
    EXPECT_EQ(a_of_g_displayed(a) * a_of_g_displayed(a), det_g);
  }
}

TEST(BruhatEngineTest, TwistedCentralizer) {
  for (std::size_t n = 1; n <= 3; ++n)
    EXPECT_TRUE(twisted_centralizer_symbolic(n).trivial) << n;
  TrialRng rng(9);
  for (std::size_t n : {4u, 5u}) {
    RatVec a = rng.nonzero_vector(n);
    EXPECT_TRUE(twisted_centralizer_random(a, rng, 200).trivial);
    Mat g = decompose_w0n(a, false).g;
    EXPECT_TRUE(in_twisted_centralizer(Mat::identity(n), g));
  }
}
