#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "heckelab/finitegeom.hpp"
#include "oracles.hpp"

using heckelab::FMatrix;
using heckelab::GaloisField;
using heckelab::HermSpace;
using heckelab::LatticeType;
using heckelab::LinAlg;
using heckelab::SemilinearPair;
using heckelab::WindowLattice;
using heckelab::WindowModel;

namespace {

TEST(GaloisField, FieldAxiomsSmallOrders) {
  for (unsigned Q : {2u, 3u, 4u, 8u, 9u, 16u, 25u, 27u}) {
    const auto F = GaloisField::of_order(Q);
    for (GaloisField::Elem a = 0; a < Q; ++a) {
      EXPECT_EQ(F->add(a, F->neg(a)), 0u);
      if (a != 0) {
        EXPECT_EQ(F->mul(a, F->inv(a)), 1u);
      }
      EXPECT_EQ(F->pow(a, Q), a);
      for (GaloisField::Elem b = 0; b < Q; ++b) {
        for (GaloisField::Elem c = 0; c < Q; c += 3) {
          EXPECT_EQ(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c)));
        }
      }
    }
  }
}

TEST(GaloisField, FrobeniusFixesPrimeField) {
  const auto F = GaloisField::of_order(81);
  int fixed = 0;
  for (GaloisField::Elem a = 0; a < 81; ++a) {
    EXPECT_EQ(F->frobenius(F->frobenius(a, 2), 2), a);
    if (F->frobenius(a, 1) == a) ++fixed;
  }
  EXPECT_EQ(fixed, 3);
}

TEST(GaloisField, RejectsNonPrimePowers) {
  EXPECT_THROW(GaloisField::of_order(6), heckelab::DomainError);
  EXPECT_THROW(GaloisField::of_order(1), heckelab::DomainError);
}

TEST(Fq2, ConjugationFixesSubfield) {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const heckelab::Fq2 K(q);
    int fixed = 0;
    for (GaloisField::Elem x = 0; x < q * q; ++x) {
      EXPECT_EQ(K.conj(K.conj(x)), x);
      if (K.conj(x) == x) ++fixed;
    }
    EXPECT_EQ(fixed, static_cast<int>(q));
  }
}

TEST(LinAlg, GrassmannianSizesAreGaussianBinomials) {
  for (unsigned Q : {2u, 4u, 9u}) {
    for (unsigned n = 0; n <= 5; ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        const mpq_class expect = oracle::gaussian_binomial_at(static_cast<int>(n), static_cast<int>(k), mpq_class(Q));
        EXPECT_EQ(mpz_class(LinAlg::grassmannian_size(Q, n, k)), expect.get_num()) << Q << " " << n << " " << k;
      }
    }
  }
  const auto F = GaloisField::of_order(4);
  EXPECT_EQ(LinAlg(*F).subspaces(4, 2, 1000).size(), 357u);
  EXPECT_THROW(LinAlg(*F).subspaces(4, 2, 100), heckelab::ResourceError);
}

TEST(LinAlg, IntersectionDimension) {
  const auto F = GaloisField::of_order(3);
  const LinAlg la(*F);
  const FMatrix a{{1, 0, 0}, {0, 1, 0}};
  const FMatrix b{{0, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(la.intersection(a, b, 3), (FMatrix{{0, 1, 0}}));
  EXPECT_EQ(la.nullspace(FMatrix{{1, 1, 1}}, 3).size(), 2u);
}

TEST(HermSpace, RejectsBadGram) {
  EXPECT_THROW(HermSpace(2, FMatrix{{1, 0}, {0, 0}}), heckelab::DomainError);
  // For q = 2 the element 2 of F_4 is not fixed by conjugation.
  EXPECT_THROW(HermSpace(2, FMatrix{{2, 0}, {0, 1}}), heckelab::DomainError);
  EXPECT_NO_THROW(HermSpace(2, FMatrix{{1, 0}, {0, 1}}));
}

TEST(Isotropic, SpecExamples) {
  EXPECT_EQ(heckelab::enumerate_isotropic(HermSpace(2, 2), 1).size(), 3u);
  for (int N = 1; N <= 4; ++N) {
    const auto zero = heckelab::enumerate_isotropic(HermSpace(3, N), 0);
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_TRUE(zero[0].empty());
  }
  EXPECT_EQ(heckelab::count_max_isotropic(2, 2), 3u);
  EXPECT_EQ(heckelab::count_max_isotropic(2, 3), 9u);
  EXPECT_EQ(heckelab::count_max_isotropic(3, 2), 4u);
}

TEST(Isotropic, NoDuplicatesAndCanonical) {
  const HermSpace space(3, 4);
  const auto all = heckelab::enumerate_isotropic(space, 2);
  const std::set<FMatrix> unique(all.begin(), all.end());
  EXPECT_EQ(unique.size(), all.size());
  const LinAlg la(space.fq2().field());
  for (const FMatrix& Y : all) {
    FMatrix copy = Y;
    la.rref(copy);
    EXPECT_EQ(copy, Y);
    for (const auto& x : Y) {
      for (const auto& y : Y) EXPECT_EQ(space.pair(x, y), 0u);
    }
  }
}

TEST(Isotropic, MaximalCountsMatchClosedForm) {
  for (unsigned q : {2u, 3u}) {
    for (int N = 2; N <= 5; ++N) {
      const mpz_class expect = oracle::max_isotropic_at(N, q);
      EXPECT_EQ(mpz_class(heckelab::count_max_isotropic(q, N)), expect) << q << " " << N;
      EXPECT_EQ(heckelab::max_isotropic_closed_form(q, N), expect);
    }
  }
}

TEST(Isotropic, MeetingCountsAndPartition) {
  EXPECT_EQ(heckelab::count_meeting(2, 3, 0), 1u);
  EXPECT_EQ(heckelab::count_meeting(2, 3, 1), 8u);
  EXPECT_EQ(heckelab::count_meeting(2, 4, 1), 10u);
  for (unsigned q : {2u, 3u}) {
    for (int N = 2; N <= 5; ++N) {
      std::uint64_t total = 0;
      for (int s = 0; s <= N / 2; ++s) {
        const std::uint64_t c = heckelab::count_meeting(q, N, s);
        EXPECT_EQ(mpz_class(c), oracle::meeting_at(N, s, q)) << q << " " << N << " " << s;
        EXPECT_EQ(heckelab::meeting_closed_form(q, N, s), oracle::meeting_at(N, s, q));
        total += c;
      }
      EXPECT_EQ(total, heckelab::count_max_isotropic(q, N));
    }
  }
}

TEST(Isotropic, BudgetIsHard) {
  EXPECT_THROW(heckelab::enumerate_isotropic(HermSpace(3, 5), 2, 1000), heckelab::ResourceError);
}

TEST(SemilinearPair, AdmissibleGram) {
  for (unsigned q : {2u, 3u, 5u}) {
    for (int d = 0; d <= 2; ++d) {
      const SemilinearPair pair(q, 4, d);
      const auto F = GaloisField::of_order(q * q);
      const FMatrix J = pair.gram(*F);
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(F->pow(J[j][i], q), F->neg(J[i][j]));
      }
      EXPECT_EQ(LinAlg(*F).rank(J), 4 - d);
    }
  }
}

TEST(DeligneLusztig, SpecExamples) {
  const SemilinearPair plane(2, 2);
  EXPECT_EQ(heckelab::dl_points(plane, 2, 1), 1u);
  EXPECT_EQ(heckelab::dl_points(plane, 1, 1), 3u);
  EXPECT_EQ(heckelab::dl_points(plane, 0, 1), 0u);
  EXPECT_EQ(heckelab::dl_points(SemilinearPair(3, 2), 1, 1), 4u);
}

TEST(DeligneLusztig, RegressionBaselines) {
  EXPECT_EQ(heckelab::dl_points(SemilinearPair(2, 3), 2, 1), 9u);
  EXPECT_EQ(heckelab::dl_points(SemilinearPair(2, 3, 1), 2, 1), 3u);
  EXPECT_EQ(heckelab::dl_points(SemilinearPair(2, 4), 3, 1), 45u);
  EXPECT_EQ(heckelab::dl_points(SemilinearPair(2, 4), 3, 2), 369u);
  EXPECT_EQ(heckelab::dl_bullet_points(SemilinearPair(2, 2), 1), 5u);
  EXPECT_EQ(heckelab::dl_bullet_points(SemilinearPair(2, 2), 2), 17u);
  EXPECT_EQ(heckelab::dl_bullet_points(SemilinearPair(2, 3, 1), 1), 5u);
  EXPECT_EQ(heckelab::dl_bullet_points(SemilinearPair(2, 4), 1), 225u);
  EXPECT_EQ(heckelab::dl_bullet_points(SemilinearPair(2, 4), 2), 1089u);
  EXPECT_EQ(heckelab::dl_bullet_points(SemilinearPair(3, 2), 1), 10u);
}

TEST(DeligneLusztig, EmptyRanges) {
  for (int N = 2; N <= 4; ++N) {
    for (int d = (N + 1) / 2; d <= N; ++d) {
      EXPECT_EQ(heckelab::dl_bullet_points(SemilinearPair(2, N, d), 1), 0u) << N << " " << d;
    }
    EXPECT_EQ(heckelab::dl_points(SemilinearPair(2, N), N + 1, 1), 0u);
  }
  EXPECT_THROW(heckelab::dl_points(SemilinearPair(2, 2), 1, 3), heckelab::DomainError);
}

TEST(DeligneLusztig, BulletCountsSandwich) {
  // Deviation from Q^{dim} at e = 2 stays within the e = 1 deviation scale.
  for (unsigned q : {2u, 3u}) {
    for (int N = 2; N <= 3; ++N) {
      const SemilinearPair pair(q, N, N % 2);
      const int dim = N / 2;
      const double c1 = static_cast<double>(heckelab::dl_bullet_points(pair, 1));
      const double c2 = static_cast<double>(heckelab::dl_bullet_points(pair, 2));
      const double Q1 = std::pow(q, 2), Q2 = std::pow(q, 4);
      const double scale = std::abs(c1 - std::pow(Q1, dim)) / std::pow(Q1, dim - 0.5);
      EXPECT_LE(std::abs(c2 - std::pow(Q2, dim)), scale * std::pow(Q2, dim - 0.5) + 1e-9);
      EXPECT_GT(c2, c1);
    }
  }
}

class WindowTest : public ::testing::TestWithParam<std::pair<unsigned, int>> {};

TEST_P(WindowTest, DualityInvolutionAndOrderReversal) {
  const auto [q, N] = GetParam();
  const WindowModel model(q, N);
  const auto window = heckelab::enumerate_window(q, N);
  const std::set<WindowLattice> unique(window.begin(), window.end());
  EXPECT_EQ(unique.size(), window.size());
  const WindowLattice unit = model.standard();
  EXPECT_TRUE(unique.count(unit));
  EXPECT_TRUE(unique.count(model.standard_bullet()));
  for (const WindowLattice& L : window) {
    ASSERT_TRUE(model.is_pi_stable(L));
    const WindowLattice D = model.dual(L);
    EXPECT_EQ(model.dual(D), L);
    EXPECT_EQ(D.length(), 2 * N - L.length());
    EXPECT_TRUE(model.contains(model.dual(model.intersection(L, unit)), D));
    EXPECT_TRUE(model.contains(D, model.dual(model.sum(L, unit))));
  }
}

TEST_P(WindowTest, SmithFormAgreesWithSubspaceModel) {
  const auto [q, N] = GetParam();
  const WindowModel model(q, N);
  const auto window = heckelab::enumerate_window(q, N);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const WindowLattice& L = window[rng() % window.size()];
    const std::vector<int> a = model.smith_exponents(L);
    int zeros = 0, ones = 0;
    for (int x : a) {
      zeros += x == 0;
      ones += x == 1;
    }
    EXPECT_EQ(zeros, model.times_pi(L).length());
    EXPECT_EQ(ones, L.length() - 2 * model.times_pi(L).length());
    std::vector<int> flipped;
    for (int x : a) flipped.push_back(2 - x);
    std::sort(flipped.begin(), flipped.end());
    EXPECT_EQ(model.smith_exponents(model.dual(L)), flipped);
  }
}

INSTANTIATE_TEST_SUITE_P(Small, WindowTest,
                         ::testing::Values(std::make_pair(2u, 1), std::make_pair(2u, 2), std::make_pair(2u, 3),
                                           std::make_pair(3u, 2), std::make_pair(3u, 3)));

TEST(Window, ClassifyExamples) {
  for (unsigned q : {2u, 3u}) {
    for (int N = 1; N <= 4; ++N) {
      const WindowModel model(q, N);
      EXPECT_EQ(model.classify(model.standard()), LatticeType::circ);
      EXPECT_EQ(model.dual(model.standard()), model.standard());
      EXPECT_EQ(model.classify(model.scaled_standard(-1)), LatticeType::other);
      if (N >= 2) {
        EXPECT_EQ(model.classify(model.standard_bullet()), LatticeType::bullet);
      }
    }
  }
}

TEST(Window, SizesAndBudget) {
  EXPECT_EQ(heckelab::enumerate_window(2, 2).size(), 33u);
  EXPECT_EQ(heckelab::enumerate_window(2, 3).size(), 1179u);
  EXPECT_THROW(heckelab::enumerate_window(3, 4), heckelab::ResourceError);
}

TEST(Window, EmbeddingPreservesType) {
  const WindowModel narrow(2, 3, 2);
  const WindowModel wide(2, 3, 4);
  for (const WindowLattice& L : heckelab::enumerate_window(2, 3)) {
    const WindowLattice E = narrow.embed(L, wide);
    EXPECT_EQ(wide.classify(E), narrow.classify(L));
    EXPECT_EQ(wide.dual(E), narrow.embed(narrow.dual(L), wide));
  }
}

TEST(BulletBetween, SpecExamples) {
  for (auto [q, N, expect0] : {std::tuple{2u, 2, 3u}, std::tuple{2u, 3, 9u}, std::tuple{3u, 2, 4u}, std::tuple{3u, 3, 28u}}) {
    const WindowModel model(q, N);
    EXPECT_EQ(heckelab::count_bullet_between(model, model.standard(), model.standard()), expect0);
  }
  const WindowModel model(2, 2);
  // ϖ^{-1}e_0 ⊕ ϖe_1 is at Disc = 2r from Λ°.
  WindowLattice far = model.from_generators(FMatrix{{1, 0, 0, 0}});
  EXPECT_EQ(model.classify(far), LatticeType::circ);
  EXPECT_EQ(model.disc(model.standard(), far), 2);
  EXPECT_EQ(heckelab::count_bullet_between(model, model.standard(), far), 1u);
}

TEST(BulletBetween, AllPairsMatchClosedForm) {
  for (unsigned q : {2u, 3u}) {
    for (int N = 2; N <= 3; ++N) {
      const WindowModel model(q, N);
      const auto window = heckelab::enumerate_window(q, N);
      std::vector<WindowLattice> circ;
      for (const auto& L : window) {
        if (model.classify(L) == LatticeType::circ) circ.push_back(L);
      }
      int checked = 0;
      for (const auto& L1 : circ) {
        for (const auto& L2 : circ) {
          if (!model.contains(L2, model.times_pi(L1)) || !model.contains(L1, model.times_pi(L2))) continue;
          const int disc = model.disc(L1, L2);
          ASSERT_EQ(disc % 2, 0);
          const mpz_class expect = oracle::odd_product_at(N / 2 - disc / 2, N % 2 == 1, q);
          EXPECT_EQ(mpz_class(heckelab::count_bullet_between(model, L1, L2)), expect);
          if (L1 == model.standard()) {
            EXPECT_EQ(heckelab::count_bullet_between_filtered(model, window, L1, L2),
                      heckelab::count_bullet_between(model, L1, L2));
          }
          ++checked;
        }
      }
      EXPECT_GT(checked, static_cast<int>(circ.size()));
    }
  }
}

TEST(BulletBetween, RejectsFarPairs) {
  const WindowModel model(2, 2);
  EXPECT_THROW(heckelab::count_bullet_between(model, model.standard(), model.standard_bullet()), heckelab::DomainError);
}

TEST(MixedCounts, SpecExamplesAndClosedForms) {
  const auto a = heckelab::mixed_counts(2, 3, 1, 0);
  EXPECT_EQ(a.c_bullet, 8u);
  const auto b = heckelab::mixed_counts(2, 3, 1, 1);
  EXPECT_EQ(b.c_bullet, 1u);
  const auto c = heckelab::mixed_counts(2, 3, 0, 1);
  EXPECT_EQ(c.c_bullet, 0u);
  EXPECT_EQ(c.c_circ, 0u);
  for (unsigned q : {2u, 3u}) {
    for (int delta = 0; delta <= 1; ++delta) {
      for (int gamma = 0; gamma <= 1; ++gamma) {
        const auto got = heckelab::mixed_counts(q, 3, delta, gamma);
        const auto expect = heckelab::mixed_closed_form(q, 3, delta, gamma);
        EXPECT_TRUE(got.uniform);
        EXPECT_GT(got.lattices, 0u);
        EXPECT_EQ(mpz_class(got.c_bullet), expect.first);
        EXPECT_EQ(mpz_class(got.c_circ), expect.second);
      }
    }
  }
  EXPECT_EQ(heckelab::mixed_closed_form(2, 3, 1, 0), std::make_pair(mpz_class(8), mpz_class(2)));
  EXPECT_THROW(heckelab::mixed_counts(2, 4, 1, 0), heckelab::DomainError);
}

TEST(Census, CsvShape) {
  const std::string csv = heckelab::census_csv({{2, 3, "max_isotropic", 9, "9", true}});
  EXPECT_EQ(csv, "q,N,parameter,count,closed_form,match\n2,3,max_isotropic,9,9,true\n");
}

}  // namespace
