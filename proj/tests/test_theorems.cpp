#include <gtest/gtest.h>

#include "gfw/error.hpp"
#include "gfw/theorems.hpp"
#include "support.hpp"

namespace gfw {
namespace {

const std::vector<std::tuple<int, int, std::vector<Rational>>>& grid() {
  static const std::vector<std::tuple<int, int, std::vector<Rational>>> g{
      {2, 4, test::rationals({"-1", "2"})},
      {2, 5, test::rationals({"-1", "2", "3"})},
      {3, 3, test::rationals({"-1"})},
      {3, 4, test::rationals({"-1", "2"})},
      {5, 3, test::rationals({"-1"})}};
  return g;
}

TEST(Theorems, PlueckerSequences) {
  EXPECT_EQ(pluecker_sequence(GFCurve::validate(2, 4, test::rationals({"-1", "2"}))).dees,
            (std::vector<std::int64_t>{8, 24, 48, 40, 0}));
  EXPECT_EQ(pluecker_sequence(GFCurve::validate(5, 3, test::rationals({"-1"}))).dees,
            (std::vector<std::int64_t>{25, 200, 225, 0}));
  for (const auto& [k, n, l] : grid()) EXPECT_EQ(pluecker_sequence(GFCurve::validate(k, n, l)).dees.back(), 0);
}

TEST(Theorems, PointwiseRamificationSumsToTotals) {
  for (const auto& [k, n, l] : grid()) {
    const GFCurve c = GFCurve::validate(k, n, l);
    std::vector<std::int64_t> summed(static_cast<std::size_t>(n), 0);
    for (int a = 0; a <= n; ++a) {
      const OscProfile p = embedding_profile(c, GenericFixed{a});
      ASSERT_EQ(p.bees.size(), static_cast<std::size_t>(n));
      EXPECT_EQ(p.bees[0], 0);
      EXPECT_EQ(p.bees[1], k - 2);
      for (int j = 2; j < n; ++j) EXPECT_EQ(p.bees[static_cast<std::size_t>(j)], k - 1);
      for (int j = 0; j < n; ++j) summed[static_cast<std::size_t>(j)] += c.degree() * p.bees[static_cast<std::size_t>(j)];
    }
    EXPECT_EQ(summed, b_totals(c));
  }
}

TEST(Theorems, StrictnessIdentityAndBiconditional) {
  for (const auto& [k, n, l] : grid()) {
    const GFCurve c = GFCurve::validate(k, n, l);
    for (int a = 0; a <= n; ++a) {
      const StrictnessReport rep = strictness_diagnostic(c, GenericFixed{a});
      EXPECT_TRUE(rep.identity_holds) << k << "," << n << " axis " << a;
      EXPECT_TRUE(rep.consistent) << k << "," << n << " axis " << a;
      EXPECT_GE(rep.w, rep.w_hat);
    }
  }
  const StrictnessReport eq = strictness_diagnostic(GFCurve::validate(3, 3, test::rationals({"5"})), GenericFixed{3});
  EXPECT_EQ(eq.w, 14);
  EXPECT_TRUE(eq.predicted_equal);
  const GFCurve c53 = GFCurve::validate(5, 3, test::rationals({"-1"}));
  const StrictnessReport strict = strictness_diagnostic(c53, GenericFixed{3});
  EXPECT_EQ(strict.w, 574);
  std::int64_t excess = 0;
  for (const auto& d : strict.per_j) {
    EXPECT_TRUE(d.flagged);
    excess += d.excess;
  }
  EXPECT_EQ(excess, 9);
  EXPECT_THROW(strictness_diagnostic(c53, GenericFiber{FieldElem(c53.field(), Rational(3))}), DomainError);
}

TEST(Theorems, MhoProbe) {
  const GFCurve c53 = GFCurve::validate(5, 3, test::rationals({"-1"}));
  for (int j = 0; j < 5; ++j) {
    EXPECT_EQ(mho_probe(c53, j).status, Membership::NotMember);
    const MhoResult emb = mho_probe(c53, j, MhoMode::Embedded);
    EXPECT_NE(emb.status, Membership::Member);
  }
  const GFCurve c33 = GFCurve::validate(3, 3, test::rationals({"5"}));
  for (int j = 0; j < 3; ++j) {
    EXPECT_EQ(mho_probe(c33, j).status, Membership::Member);
    // 5 has no cube root in Q, so the embedded probe cannot decide.
    const MhoResult emb = mho_probe(c33, j, MhoMode::Embedded);
    if (sub_basis_Q(c33, c33.canonical_twist(), j).size() > 0) {
      EXPECT_EQ(emb.status, Membership::Undetermined);
      EXPECT_FALSE(emb.missing_roots.empty());
    }
  }
  EXPECT_THROW(mho_probe(c33, 3), DomainError);
}

TEST(Theorems, EmbeddedMhoOverASplittingField) {
  // Over Q(zeta_24) every branch value of the (2,4) curve is a point.
  const FieldPtr f = NumberField::create({Rational(1), 0, 0, 0, Rational(-1), 0, 0, 0, 1});
  const GFCurve c = GFCurve::validate(2, 4, test::rationals({"-1", "2"}), f);
  for (int j = 0; j < 2; ++j) {
    const MhoResult gen = mho_probe(c, j);
    const MhoResult emb = mho_probe(c, j, MhoMode::Embedded);
    EXPECT_NE(emb.status, Membership::Undetermined);
    EXPECT_EQ(gen.status, emb.status) << j;
  }
}

TEST(Theorems, ResidualWeight) {
  const GFCurve c = GFCurve::validate(2, 4, test::rationals({"-1", "2"}));
  EXPECT_EQ(residual_weight(c, {120}), 0);
  EXPECT_THROW(residual_weight(c, {121}), InternalError);
}

}  // namespace
}  // namespace gfw
