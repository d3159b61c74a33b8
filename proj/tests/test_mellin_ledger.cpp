#include "gspin/mellin_ledger.hpp"

#include <gtest/gtest.h>

using namespace gspin;

namespace {

// Exponents summed by hand from the substitution rules.
AffineExp hand_tau(std::size_t n, std::size_t j) {
  return {Rat(static_cast<long>(n) + 3, 2) - Rat(static_cast<long>(j)), Rat(1, 2)};
}

AffineExp hand_center(std::size_t n) {
  const long nn = static_cast<long>(n);
  AffineExp c{Rat(nn, 2), Rat(1 - nn, 2)};
  for (std::size_t j = 2; j <= n; ++j)
    c += hand_tau(n, j);
  return c;
}

AffineExp hand_nu_listed(std::size_t n) {
  const Rat nn(static_cast<long>(n));
  if (n % 2 == 0)
    return {nn * nn / 2 + nn * (nn - 1) / 2, -nn / 2 - nn * nn};
  return {nn * nn / 2 + (nn - 1) * (nn - 2) / 2, -nn / 2 - nn * (nn - 1)};
}

}  // namespace

TEST(MellinLedgerTest, IntegrandExponents) {
  auto v = integrand_exponents(2);
  EXPECT_EQ(v.get("a1"), (AffineExp{Rat(0), Rat(-2)}));
  EXPECT_EQ(v.get("a2"), (AffineExp{Rat(1), Rat(-2)}));
  EXPECT_EQ(v.get(kDetY), (AffineExp{Rat(-1), Rat(3, 2)}));
  EXPECT_EQ(v.get(kHalf), (AffineExp{Rat(2), Rat(-1)}));
  EXPECT_THROW(integrand_exponents(1), std::invalid_argument);
}

TEST(MellinLedgerTest, ClosedFormOfNu) {
  EXPECT_EQ(nu_closed_form(2), (AffineExp{Rat(4), Rat(-3)}));
  EXPECT_EQ(nu_closed_form(3), (AffineExp{Rat(13, 2), Rat(-9, 2)}));
}

TEST(MellinLedgerTest, SubstitutionAgreesWithHandSums) {
  for (std::size_t n = 2; n <= 10; ++n) {
    auto f = d_substitution(n, SubstitutionRules::factorized);
    auto l = d_substitution(n, SubstitutionRules::listed);
    ASSERT_EQ(f.tau.size(), n - 1);
    for (std::size_t j = 2; j <= n; ++j) {
      EXPECT_EQ(f.tau[j - 2], hand_tau(n, j));
      EXPECT_EQ(l.tau[j - 2], hand_tau(n, j));
    }
    EXPECT_EQ(f.center, hand_center(n));
    EXPECT_EQ(f.nu, (AffineExp{Rat(static_cast<long>((n - 1) * (n - 2)), 2), Rat(0)}));
    EXPECT_EQ(l.nu, hand_nu_listed(n));
    EXPECT_FALSE(f.nu_matches);
    EXPECT_FALSE(l.nu_matches);
  }
}

TEST(MellinLedgerTest, SubstitutionIsLinear) {
  TrialRng rng(1);
  for (std::size_t n = 2; n <= 6; ++n)
    for (int k = 0; k < 20; ++k) {
      ExpVector a, b;
      for (std::size_t i = 1; i <= n; ++i) {
        a.add(a_var(i), {rng.any(9), rng.any(9)});
        b.add(a_var(i), {rng.any(9), rng.any(9)});
      }
      a.add(kDetY, {rng.any(9), rng.any(9)});
      b.add(kHalf, {rng.any(9), rng.any(9)});
      for (auto r : {SubstitutionRules::listed, SubstitutionRules::factorized})
        ASSERT_EQ(substitute(a + b, n, r), substitute(a, n, r) + substitute(b, n, r));
      ASSERT_EQ(substitute(Rat(3) * a, n, SubstitutionRules::factorized),
                Rat(3) * substitute(a, n, SubstitutionRules::factorized));
    }
}

TEST(MellinLedgerTest, ValuationOracle) {
  for (std::size_t n = 2; n <= 8; ++n) {
    auto f = d_substitution(n, SubstitutionRules::factorized);
    auto l = d_substitution(n, SubstitutionRules::listed);
    for (long p : {2L, 3L, 5L}) {
      TrialRng rng(static_cast<std::uint64_t>(n * 10 + p));
      for (const auto& c : valuation_oracle(f, rng, Int(p), 10))
        ASSERT_TRUE(c.ok) << "n=" << n << " p=" << p;
    }
    TrialRng rng(n);
    for (const auto& c : valuation_oracle(l, rng, Int(3), 10))
      ASSERT_TRUE(c.ok);
    bool some_mismatch = false;
    for (const auto& c : valuation_oracle(l, rng, Int(2), 10))
      some_mismatch = some_mismatch || !c.ok;
    EXPECT_TRUE(some_mismatch) << n;
  }
}

TEST(MellinLedgerTest, ZeroSliceMatchesMeasure) {
  for (std::size_t n = 2; n <= 10; ++n) {
    auto s = s0_slice(n);
    EXPECT_TRUE(s.ok) << n;
    for (std::size_t i = 0; i < n; ++i)
      EXPECT_EQ(s.integrand[i], Rat(static_cast<long>(i)));
  }
}

TEST(MellinLedgerTest, OmegaArgument) {
  auto two = omega_argument_check({1, 1});
  EXPECT_EQ(two.lhs, Rat(1));
  EXPECT_EQ(two.rhs_listed, Rat(256));
  EXPECT_EQ(two.constant, Rat(1, 4));
  EXPECT_FALSE(two.holds);
  auto three = omega_argument_check({1, 1, 1});
  EXPECT_EQ(three.lhs, Rat(1, 4));
  EXPECT_EQ(three.rhs_listed, Rat(64));
  EXPECT_FALSE(three.holds);
  TrialRng rng(2);
  for (std::size_t n = 2; n <= 6; ++n) {
    RatVec a = rng.nonzero_vector(n);
    Rat t = rng.nonzero(20);
    RatVec b = a;
    for (std::size_t i = 0; i + 1 < n; ++i)
      b[i] *= t * t;
    b[n - 1] *= t;
    auto x = omega_argument_check(a), y = omega_argument_check(b);
    EXPECT_EQ(x.constant, Rat(1, 4));
    EXPECT_EQ(y.constant, Rat(1, 4));
    EXPECT_EQ(x.holds, y.holds);
  }
}
