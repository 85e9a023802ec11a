#include <gtest/gtest.h>

#include "heckelab/qcalc.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using heckelab::LaurentPoly;
using heckelab::QBase;

namespace {

LaurentPoly poly(const std::vector<long>& low_first) {
  LaurentPoly p;
  for (std::size_t i = 0; i < low_first.size(); ++i) p += LaurentPoly::monomial(low_first[i], static_cast<int>(i));
  return p;
}

TEST(Laurent, ArithmeticAndCanonicalForm) {
  const LaurentPoly q = LaurentPoly::var();
  const LaurentPoly qinv = LaurentPoly::monomial(1, -1);
  EXPECT_EQ(q * qinv, LaurentPoly(1));
  EXPECT_TRUE((q - q).is_zero());
  EXPECT_EQ((q + 1).pow(2), q * q + 2 * q + 1);
  EXPECT_EQ((q + qinv).to_ascii(), "q+q^-1");
  EXPECT_EQ(poly({1, -1, -2}).to_pretty(), "−2q²−q+1");
}

TEST(Laurent, ExactDivision) {
  const LaurentPoly q = LaurentPoly::var();
  auto quotient = LaurentPoly::try_divide(q * q - 1, q + 1);
  ASSERT_TRUE(quotient.has_value());
  EXPECT_EQ(*quotient, q - 1);
  EXPECT_FALSE(LaurentPoly::try_divide(q * q + 1, q + 1).has_value());
  EXPECT_FALSE(LaurentPoly::try_divide(q + 1, LaurentPoly(2)).has_value());
  EXPECT_THROW(LaurentPoly::divide_exact(q, q + 1, "test"), heckelab::InvariantViolation);
  EXPECT_EQ(LaurentPoly::divide_exact(q.shifted(-3) - q.shifted(-5), LaurentPoly::monomial(1, -4), "test"), q * q - 1);
}

TEST(QInteger, Examples) {
  const LaurentPoly q = LaurentPoly::var();
  EXPECT_EQ(heckelab::q_integer(2, QBase::q()), q + 1);
  EXPECT_EQ(heckelab::q_integer(3, QBase::minus_q()), q * q - q + 1);
  EXPECT_EQ(heckelab::q_integer(1, QBase::q_squared()), LaurentPoly(1));
  EXPECT_EQ(heckelab::q_integer(0, QBase::q()), LaurentPoly(1));
  EXPECT_THROW(heckelab::QBase::integer(1), heckelab::DomainError);
}

TEST(QBinomial, Examples) {
  const LaurentPoly q = LaurentPoly::var();
  EXPECT_EQ(heckelab::q_binomial(2, 1, QBase::minus_q()), 1 - q);
  EXPECT_EQ(heckelab::q_binomial(7, 0, QBase::q()), LaurentPoly(1));
  EXPECT_EQ(heckelab::q_binomial(2, 2, QBase::q_squared()), LaurentPoly(1));
  EXPECT_THROW(heckelab::q_binomial(2, 3, QBase::q()), heckelab::DomainError);
  EXPECT_THROW(heckelab::q_binomial(2, -1, QBase::q()), heckelab::DomainError);
}

TEST(QBinomial, SymmetryAndPascal) {
  for (const QBase& b : {QBase::q(), QBase::minus_q(), QBase::q_squared()}) {
    for (int n = 1; n <= 20; ++n) {
      for (int m = 0; m <= n; ++m) {
        const LaurentPoly value = heckelab::q_binomial(n, m, b);
        EXPECT_EQ(value, heckelab::q_binomial(n, n - m, b));
        if (m >= 1 && m <= n - 1) {
          const LaurentPoly pascal =
              heckelab::q_binomial(n - 1, m - 1, b) + b.value().pow(m) * heckelab::q_binomial(n - 1, m, b);
          EXPECT_EQ(value, pascal) << "n=" << n << " m=" << m << " base " << b.name();
        }
      }
    }
  }
}

TEST(QBinomial, MatchesRationalOracle) {
  for (int n = 0; n <= 12; ++n) {
    for (int m = 0; m <= n; ++m) {
      EXPECT_EQ(heckelab::q_binomial(n, m, QBase::q()).evaluate(1), mpq_class(oracle::ordinary_binomial(n, m)));
      for (long t : {2L, 3L, -2L, 5L}) {
        const mpq_class q(t);
        EXPECT_EQ(heckelab::q_binomial(n, m, QBase::q()).evaluate(t), oracle::gaussian_binomial_at(n, m, q));
        EXPECT_EQ(heckelab::q_binomial(n, m, QBase::minus_q()).evaluate(t), oracle::gaussian_binomial_at(n, m, -q));
        EXPECT_EQ(heckelab::q_binomial(n, m, QBase::q_squared()).evaluate(t), oracle::gaussian_binomial_at(n, m, q * q));
      }
    }
  }
}

TEST(QBinomial, MinusQAtOneMatchesSignedOracle) {
  for (int n = 0; n <= 12; ++n) {
    for (int m = 0; m <= n; ++m) {
      EXPECT_EQ(heckelab::q_binomial(n, m, QBase::minus_q()).evaluate(1),
                mpq_class(oracle::gaussian_binomial_at_minus_one(n, m)));
    }
  }
}

TEST(DNumbers, FrozenExpansions) {
  const auto& d = oracle::d_number_table();
  for (std::size_t r = 0; r < d.size(); ++r) {
    EXPECT_EQ(heckelab::d_number(static_cast<int>(r)), poly(d[r])) << "r=" << r;
  }
  const auto& db = oracle::d_bullet_table();
  for (std::size_t r = 1; r < db.size(); ++r) {
    EXPECT_EQ(heckelab::d_bullet_number(static_cast<int>(r)), poly(db[r])) << "r=" << r;
  }
}

TEST(DNumbers, SpecValues) {
  const LaurentPoly q = LaurentPoly::var();
  EXPECT_EQ(heckelab::d_number(0), LaurentPoly(1));
  EXPECT_EQ(heckelab::d_number(1), -2 * q * q - q + 1);
  EXPECT_EQ(heckelab::d_bullet_number(1), -q);
  EXPECT_THROW(heckelab::d_bullet_number(0), heckelab::DomainError);
}

TEST(DNumbers, AgreeWithRationalOracle) {
  for (int r = 0; r <= 8; ++r) {
    for (long t : {2L, 3L, 7L}) {
      EXPECT_EQ(heckelab::d_number(r).evaluate(t), oracle::d_number_at(r, t)) << "r=" << r << " q=" << t;
    }
  }
}

TEST(DNumbers, BulletDefinitionalRelation) {
  const LaurentPoly q = LaurentPoly::var();
  for (int r = 1; r <= 10; ++r) {
    const LaurentPoly inner = LaurentPoly::divide_exact(heckelab::minus_q_power(r + 1) - 1, q + 1, "test");
    EXPECT_EQ((q + 1) * heckelab::d_bullet_number(r) - inner * heckelab::odd_product(r, heckelab::Parity::even),
              heckelab::d_number(r))
        << "r=" << r;
  }
}

TEST(OddProduct, Examples) {
  const LaurentPoly q = LaurentPoly::var();
  EXPECT_EQ(heckelab::odd_product(1, heckelab::Parity::even), q + 1);
  EXPECT_EQ(heckelab::odd_product(1, heckelab::Parity::odd), q * q * q + 1);
  EXPECT_EQ(heckelab::odd_product(0, heckelab::Parity::odd), LaurentPoly(1));
  EXPECT_EQ(heckelab::odd_product(2, heckelab::Parity::even).evaluate(2), mpq_class(3 * 9));
}

TEST(QIdentities, HandExpansionsAtOne) {
  EXPECT_TRUE(heckelab::check_q_identity(heckelab::QIdentity::gauss, 1).is_zero());
  EXPECT_TRUE(heckelab::check_q_identity(heckelab::QIdentity::signed_sum, 1).is_zero());
  EXPECT_THROW(heckelab::check_q_identity(heckelab::QIdentity::gauss, 0), heckelab::DomainError);
}

TEST(QIdentities, AllVanishUpToTen) {
  for (auto which : {heckelab::QIdentity::gauss, heckelab::QIdentity::weighted, heckelab::QIdentity::signed_sum,
                     heckelab::QIdentity::odd_chain}) {
    for (int k = 1; k <= 10; ++k) {
      const LaurentPoly discrepancy = heckelab::check_q_identity(which, k);
      EXPECT_TRUE(discrepancy.is_zero()) << heckelab::to_string(which) << " k=" << k << ": " << discrepancy.to_ascii();
    }
  }
}

TEST(QIdentities, Parsing) {
  EXPECT_EQ(heckelab::parse_q_identity("signed"), heckelab::QIdentity::signed_sum);
  EXPECT_THROW(heckelab::parse_q_identity("nope"), heckelab::DomainError);
}

}  // namespace
