#include <gtest/gtest.h>

#include "heckelab/chow.hpp"
#include "heckelab/qcalc.hpp"
#include "oracles.hpp"

using heckelab::BundleClass;
using heckelab::ChowClass;
using heckelab::ExcessIntegral;

namespace {

ChowClass cls(int m, std::vector<long> c) {
  std::vector<mpz_class> v(c.begin(), c.end());
  return ChowClass(m, v);
}

TEST(ChowClass, ProductTruncates) {
  const ChowClass a = cls(2, {1, 1});
  EXPECT_EQ(a * a, cls(2, {1, 2, 1}));
  EXPECT_EQ(a * a * a, cls(2, {1, 3, 3}));
  EXPECT_EQ(a.inverse(), cls(2, {1, -1, 1}));
  EXPECT_EQ((a * a * a).integrate(), 3);
  EXPECT_EQ(cls(3, {1, -2, 0, 5}).to_string(), "1 - 2*η + 5*η^3");
  EXPECT_THROW(cls(2, {2, 1}).inverse(), heckelab::DomainError);
  EXPECT_THROW(cls(2, {1}) + cls(3, {1}), heckelab::DomainError);
}

TEST(Bundle, TautologicalExamples) {
  const BundleClass t2 = heckelab::tautological_sub(2);
  EXPECT_EQ(t2.rank(), 1);
  EXPECT_EQ(t2.total(), cls(1, {1, -1}));
  EXPECT_EQ(heckelab::tautological_sub(3).total(), cls(2, {1, -1, 1}));
  for (int n = 1; n <= 8; ++n) {
    const BundleClass t = heckelab::tautological_sub(n);
    EXPECT_EQ(t.rank(), n - 1);
    EXPECT_EQ(t.c(n), 0);
    for (int j = 0; j < n; ++j) EXPECT_EQ(t.c(j), j % 2 == 0 ? 1 : -1);
  }
}

TEST(Bundle, RankBoundIsAsserted) {
  EXPECT_THROW(BundleClass(1, cls(3, {1, 2, 1})), heckelab::InvariantViolation);
  EXPECT_THROW(BundleClass(1, cls(3, {2, 1})), heckelab::InvariantViolation);
}

TEST(Bundle, TwistExamples) {
  for (long k : {-3L, -1L, 0L, 2L, 5L}) {
    EXPECT_EQ(heckelab::twist(BundleClass::trivial(4, 1), k).total(), cls(4, {1, k}));
  }
  for (int n = 2; n <= 7; ++n) {
    const BundleClass E = heckelab::frobenius(heckelab::tautological_sub(n), 3) + BundleClass::line(n - 1, 2);
    for (long k : {-2L, 1L, 4L}) {
      const BundleClass T = heckelab::twist(E, k);
      EXPECT_EQ(heckelab::twist(T, -k), E);
      EXPECT_EQ(T.c(1), E.c(1) + E.rank() * k);
    }
  }
}

TEST(Bundle, TwistOfSumIsSumOfTwists) {
  const BundleClass a = heckelab::tautological_sub(5);
  const BundleClass b = BundleClass::line(4, 3) + BundleClass::line(4, -1);
  EXPECT_EQ(heckelab::twist(a + b, 2), heckelab::twist(a, 2) + heckelab::twist(b, 2));
}

TEST(Bundle, FrobeniusExamples) {
  EXPECT_EQ(heckelab::frobenius(heckelab::tautological_sub(2), 7).total(), cls(1, {1, -7}));
  EXPECT_EQ(heckelab::frobenius(BundleClass::trivial(3, 2), 5), BundleClass::trivial(3, 2));
  const BundleClass t = heckelab::tautological_sub(6);
  EXPECT_EQ(heckelab::frobenius(heckelab::frobenius(t, 2), 3), heckelab::frobenius(t, 6));
  EXPECT_THROW(heckelab::frobenius(t, 1), heckelab::DomainError);
}

TEST(Bundle, WhitneyForDefiningSequences) {
  for (int n = 1; n <= 8; ++n) {
    const int m = n - 1;
    BundleClass trivial = BundleClass::trivial(m, n);
    const BundleClass sub = heckelab::tautological_sub(n);
    EXPECT_TRUE(heckelab::whitney_holds(sub, trivial, BundleClass::line(m, 1)));
    EXPECT_EQ(heckelab::kernel_of(trivial, BundleClass::line(m, 1)), sub);
    for (long p : {2L, 3L}) {
      const BundleClass pulled = heckelab::frobenius(sub, p);
      EXPECT_TRUE(heckelab::whitney_holds(pulled, trivial, BundleClass::line(m, p)));
      BundleClass ones = BundleClass::trivial(m, 0);
      for (int i = 0; i < n; ++i) ones = ones + BundleClass::line(m, 1);
      EXPECT_TRUE(heckelab::whitney_holds(heckelab::twist(pulled, 1), ones, BundleClass::line(m, p + 1)));
    }
  }
}

TEST(Excess, SpecExamples) {
  for (long p : {2L, 3L, 5L, 7L}) {
    EXPECT_EQ(heckelab::check_excess_integral(ExcessIntegral::I3, 1, p).first, 1 - p);
    EXPECT_EQ(heckelab::check_excess_integral(ExcessIntegral::I2, 2, p).first, -p);
    EXPECT_EQ(heckelab::check_excess_integral(ExcessIntegral::I1, 1, p).first, 1);
  }
}

TEST(Excess, AllRanges) {
  for (long p : {2L, 3L, 5L, 7L}) {
    for (int n = 1; n <= 8; ++n) {
      for (ExcessIntegral w : {ExcessIntegral::I1, ExcessIntegral::I2}) {
        const auto [got, want] = heckelab::check_excess_integral(w, n, p);
        EXPECT_EQ(got, want) << heckelab::to_string(w) << " r=" << n << " p=" << p;
      }
    }
    for (int d = 0; d <= 8; ++d) {
      const auto [got, want] = heckelab::check_excess_integral(ExcessIntegral::I3, d, p);
      EXPECT_EQ(got, want) << "I3 d=" << d << " p=" << p;
      // Independent closed form.
      const mpq_class expect = (1 - oracle::power(mpq_class(-p), d + 1)) / mpq_class(p + 1);
      EXPECT_EQ(mpq_class(want), expect);
    }
  }
  EXPECT_THROW(heckelab::check_excess_integral(ExcessIntegral::I1, 0, 2), heckelab::DomainError);
  EXPECT_THROW(heckelab::parse_excess_integral("I4"), heckelab::DomainError);
}

TEST(Excess, BridgeToDNumbers) {
  for (int r = 1; r <= 8; ++r) EXPECT_TRUE(heckelab::d_bullet_bridge_discrepancy(r).is_zero()) << r;
}

}  // namespace
