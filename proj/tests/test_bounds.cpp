#include <gtest/gtest.h>

#include "hydra/ackermann.hpp"
#include "hydra/bounds.hpp"

namespace hydra {
namespace {

TEST(Bounds, BaseCases) {
  EXPECT_EQ(kappa_bound(1, 5, 7), 8);
  EXPECT_EQ(psi_bound(1, 3, 9), 1);
  for (int n = 0; n <= 20; ++n) {
    EXPECT_EQ(kappa_bound(2, 0, n), 4 * n + 4);
    for (int l = 0; l <= 4; ++l) {
      for (int p = 0; p <= 4; ++p) {
        EXPECT_EQ(K_bound(1, l, p, n), n + p);
        EXPECT_EQ(Psi_bound(1, l, p, n), p);
      }
      for (int k = 1; k <= 3; ++k) {
        EXPECT_EQ(K_bound(k, l, 0, n), n);
        EXPECT_EQ(Psi_bound(k, l, 0, n), 0);
      }
    }
  }
}

TEST(Bounds, Unfolding) {
  BigNat inner = kappa_bound(2, 1, 1);
  EXPECT_EQ(inner, 10);
  EXPECT_EQ(K_bound(2, 1, 2, 1), kappa_bound(2, 1, inner));
  EXPECT_EQ(K_bound(2, 1, 2, 1), 46);
  for (int k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 3; ++n) EXPECT_GE(kappa_bound(k, 0, n), n);
  }
}

TEST(Bounds, Constants) {
  AckermannConstants c1 = ackermann_constants(1);
  EXPECT_EQ(c1.D, 1);
  EXPECT_EQ(c1.E, 1);
  EXPECT_EQ(c1.F, 1);
  AckermannConstants c2 = ackermann_constants(2);
  EXPECT_EQ(c2.D, 12);
  EXPECT_EQ(c2.E, 24);
  EXPECT_EQ(c2.F, 312);
  AckermannConstants c3 = ackermann_constants(3);
  EXPECT_EQ(c3.D, 2 * 13 + 4 * 12 * 3);
  EXPECT_EQ(c3.E, 3 * 7 * 12 + 7 * 312 + 4);
  EXPECT_EQ(c3.F, (c3.D + 1) * c3.E);
}

TEST(Bounds, Monotone) {
  for (int k = 1; k <= 2; ++k) {
    for (int l = 0; l <= 3; ++l) {
      for (int n = 0; n < 6; ++n) {
        EXPECT_LE(kappa_bound(k, l, n), kappa_bound(k, l, n + 1));
        EXPECT_LE(kappa_bound(k, l, n), kappa_bound(k, l + 1, n));
        EXPECT_LE(psi_bound(k, l, n), psi_bound(k, l, n + 1));
      }
    }
  }
}

TEST(Bounds, AckermannDominance) {
  int checked = 0;
  for (int k = 1; k <= 3; ++k) {
    AckermannConstants c = ackermann_constants(k);
    for (int l = 1; l <= 3; ++l) {
      for (int n = 0; n <= 4; ++n) {
        EvalBudget b{1 << 20, 1'000'000};
        try {
          EXPECT_LE(kappa_bound(k, l, n, b), ack(k - 1, c.D * n + c.D * l, b))
              << "k=" << k << " l=" << l << " n=" << n;
          ++checked;
        } catch (const BudgetExceeded&) {
        }
        try {
          EXPECT_LE(psi_bound(k, l, n, b), ack(k - 1, c.E * n + c.E * l, b))
              << "k=" << k << " l=" << l << " n=" << n;
          ++checked;
        } catch (const BudgetExceeded&) {
        }
      }
    }
  }
  EXPECT_GE(checked, 40);
}

TEST(Bounds, ZeroLengthEdge) {
  EXPECT_EQ(kappa_bound(2, 0, 0), 4);
  EXPECT_GT(kappa_bound(2, 0, 0), ack(1, 0));
}

TEST(Bounds, BudgetAndDomain) {
  EXPECT_THROW(kappa_bound(4, 2, 3, EvalBudget{4096, 100'000}), BudgetExceeded);
  EXPECT_THROW(kappa_bound(0, 1, 1), std::invalid_argument);
  EXPECT_THROW(ackermann_constants(0), std::invalid_argument);
}

}  // namespace
}  // namespace hydra
