#include <gtest/gtest.h>

#include "support.hpp"

namespace l0 {
namespace {

using test::C;
using test::c;
using test::ev;
using test::fn;
using test::q;
using test::Q;
using test::scal;
using test::space;
using test::vec;

TEST(RandomFunctional, CoordinateFunctional) {
  auto sp = space({"1/2", "1/2"});
  auto f = RandomFunctional<Q>(L0Vector<Q>::constant(sp, {1, 0}));
  auto x = vec(sp, {{3, 8}, {-1, 2}});
  EXPECT_EQ(apply(f, x).values(), (std::vector<Q>{3, -1}));
  EXPECT_TRUE(support(apply(f, L0Vector<Q>::zero(sp, 2))).is_empty());
  EXPECT_THROW(apply(f, L0Vector<Q>::zero(sp, 3)), DimensionMismatch);
}

TEST(RandomFunctional, DualNorm) {
  auto sp = space({"1"});
  EXPECT_EQ(*dual_norm(RandomFunctional<Q>(L0Vector<Q>::constant(sp, {3, 4}))).exact(0), Q(5));
  EXPECT_EQ(*dual_norm(RandomFunctional<Q>(L0Vector<Q>::zero(sp, 2))).exact(0), Q(0));
}

TEST(RandomFunctional, ModuleOperations) {
  auto sp = space({"1/2", "1/2"});
  auto f = fn<C>(sp, {{c(1, 1), c(0, 2)}, {c(3, 0), c(1, -1)}});
  auto g = fn<C>(sp, {{c(0, 1), c(1, 0)}, {c(2, 2), c(0, 0)}});
  auto x = vec<C>(sp, {{c(2, -1), c(1, 0)}, {c(0, 3), c(-1, 1)}});
  auto ia = L0Scalar<C>::indicator(ev(sp, {"a1"}));
  EXPECT_TRUE(equal_as(apply(ia * f, x), ia * apply(f, x)));
  EXPECT_TRUE(equal_as(apply(f + g, x), apply(f, x) + apply(g, x)));
  auto xi = scal<C>(sp, {c(1, 2), c(0, -3)});
  EXPECT_TRUE(equal_as(apply(xi * f, x), xi * apply(f, x)));
  EXPECT_EQ(dual_norm(xi * f).squared().values(), dual_norm(f).scaled_by(xi).squared().values());
}

TEST(RandomFunctional, Combine) {
  auto sp = space({"1/2", "1/2"});
  std::vector<RandomFunctional<C>> fs{fn<C>(sp, {{c(1, 0), c(0, 0)}, {c(0, 1), c(1, 0)}}),
                                      fn<C>(sp, {{c(0, 0), c(1, 0)}, {c(2, 0), c(0, -1)}})};
  std::vector<L0Scalar<C>> lambda{scal<C>(sp, {c(0, 1), c(1, 0)}), scal<C>(sp, {c(2, 0), c(1, 1)})};
  auto x = vec<C>(sp, {{c(1, 1), c(2, 0)}, {c(0, 1), c(3, -2)}});
  auto expected = lambda[0] * apply(fs[0], x) + lambda[1] * apply(fs[1], x);
  EXPECT_TRUE(equal_as(apply(combine<C>(lambda, fs), x), expected));
  EXPECT_THROW(combine<C>(std::span<const L0Scalar<C>>(lambda.data(), 1), fs), DimensionMismatch);
}

TEST(RandomFunctional, CauchySchwarzIsTight) {
  auto sp = space({"1/2", "1/2"});
  auto f = fn(sp, {{1, 2}, {q(1, 2), -3}});
  auto x = vec(sp, {{4, -1}, {2, 2}});
  auto lhs = apply(f, x).abs2();
  auto rhs = dual_norm(f).squared() * norm(x).squared();
  EXPECT_TRUE(leq_as(lhs, rhs));
  auto y = f.riesz_vector();
  EXPECT_TRUE(equal_as(apply(f, y).abs2(), dual_norm(f).squared() * norm(y).squared()));
}

TEST(RandomFunctional, Independence) {
  auto sp = space({"1/2", "1/2"});
  std::vector<RandomFunctional<Q>> indep{fn(sp, {{1, 0}, {1, 1}}), fn(sp, {{0, 1}, {1, 2}})};
  EXPECT_TRUE(l0_independent<Q>(indep));
  std::vector<RandomFunctional<Q>> dep{fn(sp, {{1, 0}, {1, 1}}), fn(sp, {{0, 1}, {2, 2}})};
  EXPECT_FALSE(l0_independent<Q>(dep));
  auto s = stratify(riesz_span<Q>(dep));
  EXPECT_EQ(s.parts[2].ids(), std::vector<std::string>{"a1"});
}

}  // namespace
}  // namespace l0
