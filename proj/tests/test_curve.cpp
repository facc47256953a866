#include <gtest/gtest.h>

#include "gfw/curve.hpp"
#include "gfw/error.hpp"
#include "gfw/theorems.hpp"
#include "support.hpp"

namespace gfw {
namespace {

const std::vector<std::pair<int, int>> kGrid{{2, 4}, {2, 5}, {3, 3}, {3, 4}, {5, 3}};

GFCurve generic_curve(int k, int n) {
  std::vector<Rational> l;
  for (int i = 0; i < n - 2; ++i) l.emplace_back(i == 0 ? -1 : i + 1);
  return GFCurve::validate(k, n, l);
}

TEST(Curve, GenusAndCounts) {
  EXPECT_EQ(genus(2, 4), 5);
  EXPECT_EQ(genus(3, 3), 10);
  EXPECT_EQ(genus(5, 3), 76);
  EXPECT_EQ(genus(5, 2), 6);
  EXPECT_EQ(genus(2, 3), 1);
  EXPECT_EQ(genus(2, 2), 0);
  const GFCurve c = generic_curve(2, 4);
  EXPECT_EQ(c.fixed_point_count(), 40);
  EXPECT_EQ(c.canonical_twist(), 1);
  EXPECT_EQ(c.degree(), 8);
}

TEST(Curve, Validation) {
  EXPECT_THROW(GFCurve::validate(2, 3, test::rationals({"2"})), DomainError);   // genus 1
  EXPECT_THROW(GFCurve::validate(3, 3, test::rationals({"1"})), DomainError);
  EXPECT_THROW(GFCurve::validate(3, 3, test::rationals({"0"})), DomainError);
  EXPECT_THROW(GFCurve::validate(2, 4, test::rationals({"2", "2"})), DomainError);
  EXPECT_THROW(GFCurve::validate(2, 4, test::rationals({"2"})), DomainError);
  EXPECT_THROW(GFCurve::validate(1, 4, test::rationals({"2", "3"})), DomainError);
  EXPECT_NO_THROW(GFCurve::validate(4, 2, std::vector<Rational>{}));
}

TEST(Curve, HilbertMatchesEnumeration) {
  for (int k = 2; k <= 5; ++k)
    for (int n = 2; n <= 4; ++n)
      for (int m = 0; m <= 8; ++m)
        EXPECT_EQ(hilbert_coefficient(k, n, m), static_cast<std::int64_t>(normal_form_monomials(k, n + 1, m).size()))
            << k << "," << n << "," << m;
}

TEST(Curve, CanonicalDimensionIsGenus) {
  for (auto [k, n] : kGrid) {
    const GFCurve c = generic_curve(k, n);
    EXPECT_EQ(dim_gamma(c, c.canonical_twist()), c.genus());
    EXPECT_EQ(h_prime(c, c.canonical_twist()), c.genus());
  }
}

TEST(Curve, SummandDimensions) {
  for (auto [k, n] : kGrid) {
    const GFCurve c = generic_curve(k, n);
    std::int64_t total = 0;
    for (int j = 0; j < k; ++j) {
      const auto enumerated = static_cast<std::int64_t>(sub_basis_Q(c, c.canonical_twist(), j).size());
      EXPECT_EQ(s_dim(c, j), enumerated) << k << "," << n << " j=" << j;
      total += s_dim(c, j);
    }
    EXPECT_EQ(total, c.genus());
  }
}

TEST(Curve, WeightBoundClosedForm) {
  for (auto [k, n] : kGrid) EXPECT_EQ(w_hat_sum_check(k, n), w_hat(k, n)) << k << "," << n;
  for (int k = 4; k <= 9; ++k) {
    EXPECT_EQ(w_hat_sum_check(k, 2), w_hat(k, 2));
    EXPECT_EQ(w_hat(k, 2), static_cast<std::int64_t>((k - 1) * (k - 2) * (k - 3) * (k + 4) / 24));
  }
  EXPECT_EQ(w_hat(5, 3), 529);
  EXPECT_EQ(w_hat(3, 3), 14);
  EXPECT_EQ(w_hat(2, 4), 3);
}

TEST(Curve, RiemannRochBeyondCanonical) {
  for (auto [k, n] : kGrid) {
    const GFCurve c = generic_curve(k, n);
    const int r = c.canonical_twist();
    for (int m = r + 1; m <= r + 2; ++m) EXPECT_EQ(h_prime(c, m), dim_gamma(c, m));
  }
}

TEST(Curve, MonomialOrder) {
  const GradedBasis b = normal_form_monomials(2, 3, 2);
  ASSERT_FALSE(b.monomials.empty());
  EXPECT_EQ(b.monomials.front().e, (std::vector<int>{2, 0, 0}));
  for (const auto& m : b.monomials) EXPECT_LT(m.e[2], 2);
}

TEST(Curve, QuotientCurve) {
  const GFCurve c = GFCurve::validate(3, 4, test::rationals({"-1", "2"}));
  const GFCurve q = quotient_curve(c);
  EXPECT_EQ(q.n(), 3);
  ASSERT_EQ(q.lambda().size(), 1u);
  EXPECT_EQ(q.lambda()[0].as_rational(), Rational(-1));
  EXPECT_TRUE(sub_basis_Q(c, 0, 2).monomials.empty());
}

}  // namespace
}  // namespace gfw
