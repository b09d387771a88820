#include <gtest/gtest.h>

#include "l0/oracle/fiber_oracle.hpp"
#include "l0/oracle/generate.hpp"
#include "support.hpp"

namespace l0::oracle {
namespace {

using test::C;
using test::c;
using test::q;
using test::Q;

TEST(FiberOracle, RankAndNullspace) {
  EXPECT_EQ(fiber_rank<Q>({{1, 2}, {2, 4}}, 2), 1u);
  EXPECT_EQ(fiber_rank<Q>({{0, 0}}, 2), 0u);
  EXPECT_EQ(fiber_rank<Q>({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3), 3u);
  auto ns = fiber_nullspace<Q>({{1, 1, 0}}, 3);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_EQ(v[0] + v[1], Q(0));
  EXPECT_EQ(fiber_rank<Q>(ns, 3), 2u);
  EXPECT_TRUE(fiber_nullspace<Q>({{1, 0}, {0, 1}}, 2).empty());
  EXPECT_EQ(fiber_rank<C>({{c(1, 0), c(0, 1)}, {c(0, 1), c(-1, 0)}}, 2), 1u);
}

TEST(FiberOracle, MinNormSolve) {
  auto x = fiber_minnorm_solve<Q>({{1, 1}}, {2}, 2);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, (Vec<Q>{1, 1}));
  EXPECT_FALSE(fiber_minnorm_solve<Q>({{1, 0}, {1, 0}}, {1, 2}, 2).has_value());
  EXPECT_EQ(*fiber_minnorm_solve<Q>({{0, 0}}, {0}, 2), (Vec<Q>{0, 0}));
  auto z = fiber_minnorm_solve<C>({{c(0, 1), c(0, 0)}}, {c(1, 0)}, 2);
  EXPECT_EQ(*z, (Vec<C>{c(0, -1), c(0, 0)}));
}

TEST(FiberOracle, MinNormIsOrthogonalToNullspace) {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t cols = 2 + rng.index(3);
    const std::size_t rows = 1 + rng.index(3);
    auto a = rank_profile_matrix<C>(rng, rows, cols, rng.index(std::min(rows, cols) + 1));
    auto b = mat_vec(a, rng.vec<C>(cols));
    auto x = fiber_minnorm_solve<C>(a, b, cols);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(mat_vec(a, *x), b);
    for (const auto& n : fiber_nullspace<C>(a, cols)) EXPECT_EQ(herm(*x, n), C());
  }
}

TEST(FiberOracle, HellyAndGridAgree) {
  EXPECT_TRUE(fiber_helly<Q>({{1, 0}}, {1}, Q(1), 2).feasible);
  EXPECT_FALSE(fiber_helly<Q>({{1, 0}}, {1}, q(1, 2), 2).feasible);
  EXPECT_FALSE(fiber_helly<Q>({{1, 0}, {1, 0}}, {1, 2}, Q(9), 2).consistent);
  EXPECT_TRUE(condition_on_grid<Q>({{1, 0}}, {1}, Q(1), 2));
  EXPECT_FALSE(condition_on_grid<Q>({{1, 0}}, {1}, q(1, 2), 2));
  EXPECT_FALSE(condition_on_grid<Q>({{1, 0}, {1, 0}}, {1, 2}, Q(9), 2));
  EXPECT_FALSE(condition_holds<Q>({{1, 0}}, {1}, q(1, 2), {1}, 2));
  EXPECT_TRUE(condition_holds<Q>({{1, 0}}, {1}, q(1, 2), {0}, 2));
}

TEST(Generators, QuarterBounds) {
  EXPECT_EQ(quarter_ceil_sqrt(Q(4)), Q(2));
  EXPECT_EQ(quarter_ceil_sqrt(Q(2)), q(3, 2));
  EXPECT_EQ(below_sqrt(Q(4)), q(7, 8));
  EXPECT_LT(below_sqrt(q(1, 100)) * below_sqrt(q(1, 100)), q(1, 100));
}

TEST(Generators, ModuleHasRequestedRanks) {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    auto sp = gen_space(rng, 4, {3});
    EXPECT_TRUE(sp->is_null(3));
    const std::size_t dim = 1 + rng.index(3);
    auto profile = random_profile(rng, 4, dim);
    auto g = gen_module<Q>(rng, sp, dim, dim + 1, profile);
    auto again = represent(rng, g.module);
    for (std::size_t a = 0; a < 4; ++a) {
      EXPECT_EQ(fiber_rank<Q>(g.module.fiber(a), dim), profile[a]);
      EXPECT_EQ(fiber_rank<Q>(again.fiber(a), dim), profile[a]);
    }
  }
}

TEST(Generators, HellyTagsArePlantedAsAdvertised) {
  Rng rng(9);
  for (int t = 0; t < 90; ++t) {
    auto sp = gen_space(rng, 3, rng.coin() ? std::vector<std::size_t>{2} : std::vector<std::size_t>{});
    auto tag = static_cast<HellyTag>(t % 3);
    auto g = gen_helly<Q>(rng, sp, 1 + rng.index(3), 1 + rng.index(3), tag);
    for (std::size_t a = 0; a < 3; ++a) {
      if (sp->is_null(a)) continue;
      Vec<Q> xi;
      for (const auto& x : g.instance.targets) xi.push_back(x[a]);
      auto r = fiber_helly<Q>(fiber_rows(g.instance, a), xi, g.instance.beta[a], g.instance.dim());
      const bool planted = g.planted.contains(a);
      EXPECT_EQ(r.feasible, !planted);
      if (planted && tag == HellyTag::inconsistent) {
        EXPECT_FALSE(r.consistent);
      }
      if (planted && tag == HellyTag::over_budget) {
        EXPECT_TRUE(r.consistent);
      }
    }
    EXPECT_EQ(g.planted.is_empty(), tag == HellyTag::feasible);
  }
}

}  // namespace
}  // namespace l0::oracle
