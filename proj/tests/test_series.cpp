#include <gtest/gtest.h>

#include "gfw/error.hpp"
#include "gfw/series.hpp"
#include "support.hpp"

namespace gfw {
namespace {

TruncatedSeries random_series(const FieldPtr& f, int T, std::mt19937& rng, bool zero_constant = false) {
  std::vector<FieldElem> c;
  for (int i = 0; i < T; ++i) c.push_back(i == 0 && zero_constant ? FieldElem::zero(f) : test::random_elem(f, rng));
  return TruncatedSeries(f, std::move(c));
}

const std::vector<FieldPtr>& fields() {
  static const std::vector<FieldPtr> fs{NumberField::rationals(), NumberField::create({Rational(-2), 0, 0, 1})};
  return fs;
}

TEST(Series, RingAxioms) {
  std::mt19937 rng(3);
  for (const auto& f : fields()) {
    for (int trial = 0; trial < 10; ++trial) {
      const int T = 6 + trial;
      const auto a = random_series(f, T, rng), b = random_series(f, T, rng), c = random_series(f, T, rng);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a - a, TruncatedSeries(f, T));
      EXPECT_EQ(a * TruncatedSeries::constant(FieldElem::one(f), T), a);
    }
  }
}

TEST(Series, Orders) {
  const FieldPtr q = NumberField::rationals();
  const auto m = TruncatedSeries::monomial(FieldElem(q, Rational(3)), 4, 10);
  EXPECT_EQ(m.order(), 4);
  EXPECT_EQ((m * m).order(), 8);
  EXPECT_FALSE((m * m * m).order().has_value());
  EXPECT_EQ(m.shifted(2).order(), 6);
  EXPECT_THROW(m.shifted(-2), DomainError);
  EXPECT_EQ(m.spread(2, 10).order(), 8);
  EXPECT_THROW(TruncatedSeries(q, 3) + TruncatedSeries(q, 4), DomainError);
}

TEST(Series, IntPow) {
  std::mt19937 rng(5);
  const FieldPtr q = NumberField::rationals();
  const auto a = random_series(q, 9, rng);
  EXPECT_EQ(int_pow(a, 3), a * a * a);
  EXPECT_EQ(int_pow(a, 0), TruncatedSeries::constant(FieldElem::one(q), 9));
}

TEST(Series, KthRootPostcondition) {
  std::mt19937 rng(9);
  for (const auto& f : fields())
    for (int k : {2, 3, 5, 7})
      for (int trial = 0; trial < 4; ++trial) {
        const int T = 8 + 3 * trial;
        const auto u = random_series(f, T, rng, true);
        const auto y = kth_root_one_plus(u, k);
        EXPECT_TRUE(y[0].is_one());
        EXPECT_EQ(int_pow(y, k), u + TruncatedSeries::constant(FieldElem::one(f), T)) << "k=" << k;
      }
}

TEST(Series, RootRecurrenceMatchesBinomialSum) {
  std::mt19937 rng(21);
  for (const auto& f : fields())
    for (int k : {2, 3, 4, 5}) {
      const auto u = random_series(f, 12, rng, true);
      EXPECT_EQ(kth_root_one_plus(u, k), kth_root_one_plus_binomial(u, k));
    }
}

TEST(Series, RootRejectsNonzeroConstant) {
  const FieldPtr q = NumberField::rationals();
  EXPECT_THROW(kth_root_one_plus(TruncatedSeries::constant(FieldElem::one(q), 5), 3), DomainError);
}

}  // namespace
}  // namespace gfw
