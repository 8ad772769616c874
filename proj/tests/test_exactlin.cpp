#include <gtest/gtest.h>

#include "prelog/exactlin.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace prelog;

TEST(Hermite, SmallExample) {
  const auto h = hnf(IntMatrix{{2, 4}, {4, 8}});
  EXPECT_EQ(h.H, (IntMatrix{{2, 4}, {0, 0}}));
  EXPECT_EQ(h.rank, 1u);
  EXPECT_EQ(h.U * IntMatrix({{2, 4}, {4, 8}}), h.H);
}

TEST(Hermite, EntriesAbovePivotsReduced) {
  const IntMatrix A{{3, 5, 7}, {0, 2, 9}, {1, 1, 1}};
  const auto h = hnf(A);
  for (std::size_t k = 0; k < h.rank; ++k) {
    const auto pc = h.pivots[k];
    EXPECT_GT(h.H(k, pc), 0);
    for (std::size_t above = 0; above < k; ++above) {
      EXPECT_GE(h.H(above, pc), 0);
      EXPECT_LT(h.H(above, pc), h.H(k, pc));
    }
  }
}

TEST(Smith, Diagonal) {
  const auto s = snf(IntMatrix{{2, 4}, {4, 8}});
  EXPECT_EQ(s.invariant_factors(), (IntVector{2}));
  EXPECT_EQ(s.rank(), 1u);
  const auto t = snf(IntMatrix::diagonal({6, 4}));
  EXPECT_EQ(t.invariant_factors(), (IntVector{2, 12}));
}

TEST(Rank, MatchesRationalOracle) {
  gen::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto A = gen::small_matrix(rng, 7);
    ASSERT_EQ(rank(A), oracle::rational_rank(A)) << A;
  }
}

TEST(RankModP, MatchesModularOracle) {
  gen::Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const auto A = gen::small_matrix(rng, 6);
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) ASSERT_EQ(rank_mod_p(A, p), oracle::modular_rank(A, p)) << A;
  }
}

TEST(RankModP, RejectsComposite) { EXPECT_THROW(rank_mod_p(IntMatrix{{1}}, 4), std::invalid_argument); }

TEST(Primes, Small) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(13));
  EXPECT_FALSE(is_prime(91));
}

TEST(Kernel, Basic) {
  const auto K = kernel_saturated(IntMatrix{{1, 1}});
  ASSERT_EQ(K.cols(), 1u);
  EXPECT_EQ(abs(K(0, 0)), 1);
  EXPECT_EQ(K(0, 0) + K(1, 0), 0);
  EXPECT_EQ(kernel_saturated(IntMatrix::identity(3)).cols(), 0u);
}

TEST(Kernel, RandomKernelsAreSaturatedAndAnnihilated) {
  gen::Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const auto A = gen::small_matrix(rng, 6);
    const auto K = kernel_saturated(A);
    EXPECT_EQ(K.cols(), A.cols() - oracle::rational_rank(A));
    EXPECT_TRUE((A * K).is_zero());
    if (K.cols() > 0) EXPECT_EQ(oracle::enumerated_minor_gcd(K), 1) << "kernel basis not saturated\n" << A;
    const auto L = left_kernel_saturated(A);
    EXPECT_TRUE((L * A).is_zero());
    EXPECT_EQ(L.rows(), A.rows() - oracle::rational_rank(A));
  }
}

TEST(KernelModP, AnnihilatesModP) {
  const IntMatrix A{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};  // det 2
  const auto K = kernel_mod_p(A, 2);
  ASSERT_EQ(K.cols(), 1u);
  const auto v = (A * K).column(0);
  for (const auto& x : v) EXPECT_EQ(x % 2, 0);
  EXPECT_EQ(kernel_mod_p(A, 3).cols(), 0u);
}

TEST(Cokernel, TorsionAndProjection) {
  const IntMatrix A{{2, 0}, {0, 0}, {0, 3}};
  const auto c = cokernel(A);
  EXPECT_EQ(c.free_rank, 1u);
  EXPECT_EQ(c.invariant_factors, (IntVector{6}));
  EXPECT_TRUE((c.projection * A).is_zero());
  EXPECT_EQ(c.projection.rows(), 1u);
  const auto d = cokernel(IntMatrix{{2}});
  EXPECT_EQ(d.free_rank, 0u);
  EXPECT_EQ(d.invariant_factors, (IntVector{2}));
}

TEST(Cokernel, ProjectionIsSurjectiveOnRandomMaps) {
  gen::Rng rng(14);
  for (int i = 0; i < 60; ++i) {
    const auto A = gen::small_matrix(rng, 5);
    const auto c = cokernel(A);
    EXPECT_EQ(c.free_rank, A.rows() - oracle::rational_rank(A));
    EXPECT_TRUE((c.projection * A).is_zero());
    if (c.free_rank > 0) EXPECT_EQ(oracle::enumerated_minor_gcd(c.projection), 1);
  }
}

TEST(Saturate, Basic) {
  const auto S = saturate(IntMatrix{{2}, {4}});
  ASSERT_EQ(S.cols(), 1u);
  EXPECT_EQ(abs(S(0, 0)), 1);
  EXPECT_EQ(abs(S(1, 0)), 2);
}

TEST(Lattice, SameColumnLattice) {
  const IntMatrix A{{1, 0}, {0, 2}};
  const IntMatrix B{{1, 0}, {0, 4}};
  EXPECT_TRUE(same_column_lattice(A, IntMatrix{{1, 1}, {0, 2}}));
  EXPECT_FALSE(same_column_lattice(A, B));
  EXPECT_EQ(column_lattice_basis(IntMatrix{{2, 4}, {2, 4}}).cols(), 1u);
}

TEST(Minors, GcdOfMaximalMinors) {
  EXPECT_EQ(gcd_maximal_minors(IntMatrix::diagonal({2, 3})), 6);
  EXPECT_EQ(gcd_maximal_minors(IntMatrix{{1, 2}, {2, 4}}), 0);
  gen::Rng rng(15);
  for (int i = 0; i < 60; ++i) {
    const auto A = gen::small_matrix(rng, 5, 6);
    EXPECT_EQ(gcd_maximal_minors(A), oracle::enumerated_minor_gcd(A)) << A;
  }
}

TEST(Determinant, MatchesCofactorExpansion) {
  gen::Rng rng(16);
  for (int i = 0; i < 80; ++i) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
    const auto A = gen::matrix(rng, n, n);
    EXPECT_EQ(determinant(A), oracle::cofactor_det(A)) << A;
  }
  EXPECT_THROW(determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST(SolveInteger, SolvesWhenPossible) {
  const IntMatrix A{{2, 0}, {0, 3}};
  auto s = solve_integer(A, {4, 9});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->x, (IntVector{2, 3}));
  EXPECT_TRUE(s->unique);
  EXPECT_FALSE(solve_integer(A, {1, 0}));
  auto t = solve_integer(IntMatrix{{1, 1}}, {5});
  ASSERT_TRUE(t);
  EXPECT_FALSE(t->unique);
  EXPECT_EQ(t->x[0] + t->x[1], 5);
  EXPECT_THROW(solve_integer(A, {1}), std::invalid_argument);
}

TEST(SolveInteger, RandomConsistentSystems) {
  gen::Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const auto A = gen::small_matrix(rng, 6);
    const auto x = gen::vector(rng, A.cols());
    const auto b = A.apply(x);
    const auto s = solve_integer(A, b);
    ASSERT_TRUE(s);
    EXPECT_EQ(A.apply(s->x), b);
    EXPECT_EQ(s->unique, oracle::rational_rank(A) == A.cols());
  }
}

TEST(EchelonCoordinates, InsideAndOutside) {
  const auto h = hnf(IntMatrix{{2, 0}, {0, 3}});
  auto c = echelon_coordinates(h.H, h.pivots, {4, 3});
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, (IntVector{2, 1}));
  EXPECT_FALSE(echelon_coordinates(h.H, h.pivots, {1, 0}));
}
