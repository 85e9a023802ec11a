#include <gtest/gtest.h>

#include "heckelab/charring.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using heckelab::LaurentPoly;
using heckelab::SymLaurent;

namespace {

SymLaurent m(int r, int i) { return SymLaurent::m(r, i); }
SymLaurent c(int r, long v) { return SymLaurent::constant(r, LaurentPoly(v)); }

TEST(ElemSym, Examples) {
  EXPECT_EQ(heckelab::elem_sym(2, 1), m(2, 0) + m(2, 1));
  EXPECT_EQ(heckelab::elem_sym(4, 0), c(4, 1));
  EXPECT_EQ(heckelab::elem_sym(3, 3), m(3, 0) * m(3, 1) * m(3, 2));
  EXPECT_TRUE(heckelab::elem_sym(2, 3).is_zero());
  EXPECT_THROW(heckelab::elem_sym(2, -1), heckelab::DomainError);
}

TEST(Character, Examples) {
  EXPECT_EQ(heckelab::character(2, 1), m(1, 0));
  EXPECT_EQ(heckelab::character(3, 1), m(1, 0) + c(1, 1));
  for (int N = 1; N <= 6; ++N) EXPECT_EQ(heckelab::character(N, 0), c(N / 2, 1));
  EXPECT_THROW(heckelab::character(4, 3), heckelab::DomainError);
  EXPECT_THROW(heckelab::character(0, 0), heckelab::DomainError);
}

TEST(CharacterBruteforce, Examples) {
  EXPECT_EQ(heckelab::character_bruteforce(3, 1), m(1, 0) + c(1, 1));
  EXPECT_EQ(heckelab::character_bruteforce(2, 1), m(1, 0));
  EXPECT_THROW(heckelab::character_bruteforce(13, 1), heckelab::ResourceError);
}

TEST(CharacterBruteforce, SubsetOfTwoInRankTwo) {
  // δ = r = 1, N = 2: the subsets {1} and {2} contribute y and y^{-1}
  const SymLaurent full = heckelab::character_bruteforce(2, 1);
  EXPECT_EQ(full, m(1, 0));
}

TEST(Character, ClosedFormMatchesBruteforce) {
  for (int N = 1; N <= 8; ++N) {
    for (int delta = 0; delta <= N / 2; ++delta) {
      const SymLaurent closed = heckelab::character(N, delta);
      const SymLaurent brute = heckelab::character_bruteforce(N, delta);
      EXPECT_EQ(closed, brute) << "N=" << N << " delta=" << delta << "\n closed: " << closed.to_string()
                               << "\n brute:  " << brute.to_string();
      EXPECT_TRUE(brute.is_symmetric());
    }
  }
}

TEST(Character, ElementaryBasisCoefficientsAreBinomials) {
  for (int N = 1; N <= 8; ++N) {
    const int r = N / 2;
    for (int delta = 0; delta <= r; ++delta) {
      const auto basis = heckelab::to_elementary_basis(heckelab::character_bruteforce(N, delta));
      for (int j = 0; j <= r; ++j) {
        long expected = 0;
        if (N % 2 == 1 && j <= delta) expected = oracle::ordinary_binomial(r - j, (delta - j) / 2);
        if (N % 2 == 0 && j <= delta && (delta - j) % 2 == 0) expected = oracle::ordinary_binomial(r - j, (delta - j) / 2);
        std::vector<int> e(static_cast<std::size_t>(r), 0);
        if (j > 0) e[static_cast<std::size_t>(j - 1)] = 1;
        EXPECT_EQ(basis.coeff(e), LaurentPoly(expected)) << "N=" << N << " delta=" << delta << " j=" << j;
      }
    }
  }
}

TEST(ElementaryBasis, RoundTripAndRejection) {
  const SymLaurent f = m(2, 0) * m(2, 0) + m(2, 1) * m(2, 1) + LaurentPoly::var() * m(2, 0) * m(2, 1);
  const auto g = heckelab::to_elementary_basis(f);
  EXPECT_EQ(heckelab::from_elementary_basis(2, g), f);
  // s1^2 + (q-2) s2
  EXPECT_EQ(g.coeff({2, 0}), LaurentPoly(1));
  EXPECT_EQ(g.coeff({0, 1}), LaurentPoly::var() - 2);
  EXPECT_THROW(heckelab::to_elementary_basis(m(2, 1)), heckelab::InvariantViolation);
}

TEST(Chebyshev, ReductionIsANormalForm) {
  const SymLaurent m1 = m(2, 0);
  const SymLaurent f = m1 * m1 * m(2, 1) + c(2, 3) * m(2, 1) + LaurentPoly::monomial(5, -1) * m1 * m1 * m1 * m1;
  EXPECT_EQ(heckelab::reduce_to_m(heckelab::InversionLaurent::expand(f)), f);
  const auto y = heckelab::InversionLaurent::y_power(1, 0, 1);
  EXPECT_THROW(heckelab::reduce_to_m(y), heckelab::InvariantViolation);
  const auto sym = heckelab::InversionLaurent(
      1, heckelab::InversionLaurent::y_power(1, 0, 3).poly() + heckelab::InversionLaurent::y_power(1, 0, -3).poly());
  // y^3 + y^-3 = m^3 - 3m
  EXPECT_EQ(heckelab::reduce_to_m(sym), m(1, 0) * m(1, 0) * m(1, 0) - c(1, 3) * m(1, 0));
}

TEST(Symmetry, TranspositionCheck) {
  EXPECT_TRUE(heckelab::elem_sym(4, 2).is_symmetric());
  EXPECT_FALSE((m(3, 0) * m(3, 0) + m(3, 1)).is_symmetric());
}

TEST(LambdaIdentities, EvenSumRankOneByHand) {
  EXPECT_TRUE(heckelab::check_lambda_identity(2, heckelab::LambdaIdentity::even_sum).is_zero());
}

TEST(LambdaIdentities, AllVanishUpToRankFive) {
  for (int r = 1; r <= 5; ++r) {
    for (auto which : {heckelab::LambdaIdentity::even_sum, heckelab::LambdaIdentity::even_derivative}) {
      const SymLaurent d = heckelab::check_lambda_identity(2 * r, which);
      EXPECT_TRUE(d.is_zero()) << heckelab::to_string(which) << " r=" << r << ": " << d.to_string();
    }
  }
  for (int r = 0; r <= 5; ++r) {
    const SymLaurent d = heckelab::check_lambda_identity(2 * r + 1, heckelab::LambdaIdentity::odd);
    EXPECT_TRUE(d.is_zero()) << "odd r=" << r << ": " << d.to_string();
  }
  for (int k = 0; k <= 8; ++k) {
    EXPECT_TRUE(heckelab::check_lambda_identity(k, heckelab::LambdaIdentity::odd_binomial).is_zero()) << "k=" << k;
  }
}

TEST(LambdaIdentities, ParityMismatch) {
  EXPECT_THROW(heckelab::check_lambda_identity(3, heckelab::LambdaIdentity::even_sum), heckelab::DomainError);
  EXPECT_THROW(heckelab::check_lambda_identity(4, heckelab::LambdaIdentity::odd), heckelab::DomainError);
}

}  // namespace
