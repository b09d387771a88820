#include <gtest/gtest.h>

#include "l0/helly.hpp"
#include "l0/oracle/fiber_oracle.hpp"
#include "l0/oracle/generate.hpp"
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

template <Field K>
HellyInstance<K> instance(std::vector<RandomFunctional<K>> fs, std::vector<L0Scalar<K>> xi,
                          L0Scalar<RealOf<K>> beta) {
  auto eps = L0Scalar<RealOf<K>>::constant(beta.space(), FieldTraits<RealOf<K>>::from_rational(Q(1, 1000)));
  return {std::move(fs), std::move(xi), std::move(beta), std::move(eps)};
}

/// |sum lambda xi|^2 > beta^2 ||sum lambda f||*^2 on the event.
template <Field K>
bool violates_on(const HellyInstance<K>& inst, const std::vector<L0Scalar<K>>& lambda, const Event& a) {
  L0Scalar<K> lhs = L0Scalar<K>::zero(inst.space());
  for (std::size_t k = 0; k < lambda.size(); ++k) lhs = lhs + lambda[k] * inst.targets[k];
  auto dual = dual_norm(combine<K>(lambda, inst.functionals)).squared();
  return greater_on(lhs.abs2(), inst.beta * inst.beta * dual, a);
}

template <Field K>
void expect_solution(const HellyInstance<K>& inst, const L0Vector<K>& x) {
  for (std::size_t k = 0; k < inst.count(); ++k) EXPECT_TRUE(equal_as(apply(inst.functionals[k], x), inst.targets[k]));
  EXPECT_TRUE(leq_as(norm(x), inst.beta));
}

TEST(Helly, SingleFunctionalFeasible) {
  auto sp = space({"1/2", "1/2"});
  auto inst = instance<Q>({RandomFunctional<Q>(L0Vector<Q>::constant(sp, {1, 0}))}, {L0Scalar<Q>::one(sp)},
                          L0Scalar<Q>::one(sp));
  auto v = check(inst);
  EXPECT_TRUE(v.feasible);
  EXPECT_FALSE(v.witness.has_value());
  auto x = construct(inst);
  EXPECT_TRUE(equal_as(x, L0Vector<Q>::constant(sp, {1, 0})));
  EXPECT_EQ(*norm(x).exact(0), Q(1));
  EXPECT_THROW(witness(inst), VerdictMismatch);
}

TEST(Helly, SingleFunctionalOverBudget) {
  auto sp = space({"1/2", "1/2"});
  auto inst = instance<Q>({RandomFunctional<Q>(L0Vector<Q>::constant(sp, {1, 0}))}, {L0Scalar<Q>::one(sp)},
                          L0Scalar<Q>::constant(sp, q(1, 2)));
  auto v = solve(inst);
  ASSERT_FALSE(v.feasible);
  EXPECT_EQ(*v.violation_event, Event::full(sp));
  EXPECT_EQ(v.over_budget, Event::full(sp));
  EXPECT_TRUE(v.inconsistent.is_empty());
  EXPECT_EQ(v.witness->front().values(), (std::vector<Q>{1, 1}));
  EXPECT_TRUE(violates_on(inst, *v.witness, *v.violation_event));
  EXPECT_THROW(construct(inst), VerdictMismatch);
}

TEST(Helly, InconsistentOnOneAtom) {
  auto sp = space({"1/2", "1/2"});
  auto e1 = RandomFunctional<Q>(L0Vector<Q>::constant(sp, {1, 0}));
  auto inst = instance<Q>({e1, e1}, {scal(sp, {1, 1}), scal(sp, {1, 2})}, L0Scalar<Q>::constant(sp, Q(10)));
  auto v = solve(inst);
  ASSERT_FALSE(v.feasible);
  EXPECT_EQ(v.violation_event->ids(), std::vector<std::string>{"a2"});
  EXPECT_EQ(v.inconsistent.ids(), std::vector<std::string>{"a2"});
  const auto& w = *v.witness;
  EXPECT_EQ(w[0].values(), (std::vector<Q>{0, 1}));
  EXPECT_EQ(w[1].values(), (std::vector<Q>{0, -1}));
  EXPECT_TRUE(violates_on(inst, w, *v.violation_event));
}

TEST(Helly, WitnessIsNormalisedOnViolation) {
  auto sp = space({"1/3", "2/3"});
  auto inst = instance<C>({fn<C>(sp, {{c(1, 0), c(0, 1)}, {c(2, 0), c(0, 0)}}),
                           fn<C>(sp, {{c(0, 2), c(1, 0)}, {c(4, 0), c(0, 0)}})},
                          {scal<C>(sp, {c(3, 0), c(1, 0)}), scal<C>(sp, {c(0, 1), c(5, 1)})}, scal(sp, {1, 1}));
  auto v = solve(inst);
  ASSERT_FALSE(v.feasible);
  for (std::size_t a : v.violation_event->indices()) {
    Q best = 0;
    for (const auto& l : *v.witness) best = std::max(best, FieldTraits<C>::abs2(l[a]));
    EXPECT_EQ(best, Q(1));
  }
  EXPECT_TRUE(violates_on(inst, *v.witness, *v.violation_event));
}

TEST(Helly, RedundantFunctionals) {
  auto sp = space({"1/4", "1/4", "1/2"});
  Event a = ev(sp, {"a1", "a3"});
  auto ia = L0Scalar<Q>::indicator(a);
  auto f1 = fn(sp, {{1, 2}, {0, 1}, {3, -1}});
  auto xi1 = scal(sp, {2, 1, q(1, 2)});
  auto inst = instance<Q>({f1, ia * f1}, {xi1, ia * xi1}, L0Scalar<Q>::constant(sp, Q(2)));
  auto v = solve(inst);
  ASSERT_TRUE(v.feasible);
  expect_solution(inst, *v.solution);
  auto s = stratify(riesz_span<Q>(inst.functionals));
  EXPECT_EQ(s.parts[1], Event::full(sp));
}

TEST(Helly, RankVaryingAcrossAtoms) {
  auto sp = space({"1/2", "1/2"});
  auto inst = instance<Q>({fn(sp, {{1, 0, 0}, {1, 1, 0}}), fn(sp, {{0, 1, 0}, {2, 2, 0}})},
                          {scal(sp, {1, 2}), scal(sp, {2, 4})}, L0Scalar<Q>::constant(sp, Q(3)));
  auto v = solve(inst);
  ASSERT_TRUE(v.feasible);
  expect_solution(inst, *v.solution);
  for (std::size_t a = 0; a < 2; ++a) {
    auto rows = oracle::Mat<Q>{inst.functionals[0].fiber_row(a), inst.functionals[1].fiber_row(a)};
    auto xmin = oracle::fiber_minnorm_solve<Q>(rows, {inst.targets[0][a], inst.targets[1][a]}, 3);
    ASSERT_TRUE(xmin.has_value());
    EXPECT_EQ(v.solution->fiber(a), *xmin);
    EXPECT_EQ(v.minimal_norm.squared()[a], oracle::norm2(*xmin));
  }
}

TEST(Helly, NullAtomsNeverDecideTheVerdict) {
  auto sp = space({"1", "0"});
  auto e1 = RandomFunctional<Q>(L0Vector<Q>::constant(sp, {1}));
  auto inst = instance<Q>({e1, e1}, {scal(sp, {1, 1}), scal(sp, {1, 5})}, scal(sp, {1, 0}));
  auto v = solve(inst);
  EXPECT_TRUE(v.feasible);
  EXPECT_EQ(v.inconsistent.ids(), std::vector<std::string>{"a2"});
}

TEST(Helly, MalformedInstances) {
  auto sp = space({"1/2", "1/2"});
  auto f = RandomFunctional<Q>(L0Vector<Q>::constant(sp, {1}));
  auto one = L0Scalar<Q>::one(sp);
  EXPECT_THROW(check(instance<Q>({f}, {one, one}, one)), InvalidArgument);
  EXPECT_THROW(check(instance<Q>({f}, {one}, scal(sp, {1, -1}))), InvalidArgument);
  HellyInstance<Q> zero_eps{{f}, {one}, one, L0Scalar<Q>::zero(sp)};
  EXPECT_THROW(check(zero_eps), InvalidArgument);
  EXPECT_THROW(check(instance<Q>({f}, {L0Scalar<Q>::one(space({"1"}))}, one)), SpaceMismatch);
}

TEST(Helly, ScalingPreservesVerdictAndEvent) {
  oracle::Rng rng(7);
  for (int t = 0; t < 40; ++t) {
    auto sp = oracle::gen_space(rng, 3);
    auto tag = static_cast<oracle::HellyTag>(t % 3);
    auto g = oracle::gen_helly<Q>(rng, sp, 2, 2, tag);
    std::vector<Q> s;
    for (int k = 0; k < 3; ++k) s.push_back(rng.coin() ? Q(-2) : Q(1, 3));
    auto xi = scal(sp, s);
    auto scaled = g.instance;
    for (std::size_t k = 0; k < scaled.count(); ++k) {
      scaled.functionals[k] = xi * scaled.functionals[k];
      scaled.targets[k] = xi * scaled.targets[k];
    }
    auto v0 = check(g.instance);
    auto v1 = check(scaled);
    EXPECT_EQ(v0.feasible, v1.feasible);
    if (!v0.feasible) {
      EXPECT_EQ(*v0.violation_event, *v1.violation_event);
    }
  }
}

TEST(Helly, MonotoneInBeta) {
  oracle::Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    auto sp = oracle::gen_space(rng, 3);
    auto g = oracle::gen_helly<Q>(rng, sp, 3, 2, oracle::HellyTag::feasible);
    ASSERT_TRUE(check(g.instance).feasible);
    auto bigger = g.instance;
    bigger.beta = bigger.beta + scal(sp, {q(1, 2), 0, 3});
    EXPECT_TRUE(check(bigger).feasible);
  }
}

TEST(Helly, NecessityForAnySolution) {
  oracle::Rng rng(13);
  for (int t = 0; t < 40; ++t) {
    auto sp = oracle::gen_space(rng, 3);
    auto g = oracle::gen_helly<Q>(rng, sp, 3, 3, oracle::HellyTag::feasible);
    auto x = construct(g.instance);
    for (int d = 0; d < 25; ++d) {
      std::vector<L0Scalar<Q>> lambda;
      for (std::size_t k = 0; k < 3; ++k) lambda.push_back(scal(sp, {rng.rational(), rng.rational(), rng.rational()}));
      L0Scalar<Q> lhs = L0Scalar<Q>::zero(sp);
      for (std::size_t k = 0; k < 3; ++k) lhs = lhs + lambda[k] * apply(g.instance.functionals[k], x);
      auto b = g.instance.beta + g.instance.eps;
      auto dual = dual_norm(combine<Q>(lambda, g.instance.functionals)).squared();
      EXPECT_TRUE(leq_as(lhs.abs2(), b * b * dual));
    }
  }
}

TEST(Helly, FloatModeMatchesExact) {
  auto sp = space({"1/2", "1/2"});
  auto fsp = sp->with_mode(Mode::approximate);
  auto e1 = RandomFunctional<double>(L0Vector<double>::constant(fsp, {1.0, 0.0}));
  auto beta = L0Scalar<double>::constant(fsp, 1.0);
  HellyInstance<double> ok{{e1}, {L0Scalar<double>::one(fsp)}, beta, L0Scalar<double>::constant(fsp, 1e-3)};
  EXPECT_TRUE(check(ok).feasible);
  ok.targets[0] = L0Scalar<double>(fsp, {1.0, 1.5});
  auto v = check(ok);
  ASSERT_FALSE(v.feasible);
  EXPECT_EQ(v.violation_event->ids(), std::vector<std::string>{"a2"});
}

template <Field K>
SamplewiseProblem<K> samplewise(std::vector<L0Vector<K>> rows, std::vector<L0Scalar<K>> xi, L0Scalar<RealOf<K>> beta) {
  auto eps = L0Scalar<RealOf<K>>::constant(beta.space(), FieldTraits<RealOf<K>>::from_rational(Q(1, 1000)));
  return {std::move(rows), std::move(xi), std::move(beta), std::move(eps)};
}

TEST(Samplewise, ReplicatedClassicalSolve) {
  auto sp = space({"1/3", "1/3", "1/3"});
  auto p = samplewise<Q>({L0Vector<Q>::constant(sp, {1, 1}), L0Vector<Q>::constant(sp, {1, -1})},
                         {L0Scalar<Q>::constant(sp, 2), L0Scalar<Q>::zero(sp)}, L0Scalar<Q>::constant(sp, 2));
  auto r = solve_samplewise(p, false);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.solved, Event::full(sp));
  for (std::size_t a = 0; a < 3; ++a) EXPECT_EQ(r.solution->fiber(a), (std::vector<Q>{1, 1}));
}

TEST(Samplewise, RowsAreNotConjugated) {
  auto sp = space({"1"});
  auto p = samplewise<C>({vec<C>(sp, {{c(0, 1)}})}, {scal<C>(sp, {c(0, 1)})}, scal(sp, {1}));
  auto r = solve_samplewise(p, false);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.solution->fiber(0), (std::vector<C>{c(1, 0)}));
}

TEST(Samplewise, NullAtomAlmostSureVersusEverywhere) {
  auto sp = space({"1", "0"});
  auto row = L0Vector<Q>::constant(sp, {1});
  auto p = samplewise<Q>({row}, {scal(sp, {1, 5})}, scal(sp, {1, 1}));
  auto as = solve_samplewise(p, false);
  EXPECT_TRUE(as.feasible);
  EXPECT_EQ(as.solved.ids(), std::vector<std::string>{"a1"});
  auto every = solve_samplewise(p, true);
  EXPECT_FALSE(every.feasible);
  EXPECT_EQ(every.failing.ids(), std::vector<std::string>{"a2"});

  auto solvable = samplewise<Q>({row}, {scal(sp, {1, q(1, 2)})}, scal(sp, {1, 1}));
  auto r = solve_samplewise(solvable, true);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.solved, Event::full(sp));
  EXPECT_EQ(r.solution->fiber(1), (std::vector<Q>{q(1, 2)}));
}

TEST(Samplewise, PositiveAtomFailureIsReported) {
  auto sp = space({"1/2", "1/2"});
  auto p = samplewise<Q>({L0Vector<Q>::constant(sp, {1})}, {scal(sp, {1, 3})}, scal(sp, {2, 2}));
  auto r = solve_samplewise(p, false);
  EXPECT_FALSE(r.feasible);
  EXPECT_EQ(r.failing.ids(), std::vector<std::string>{"a2"});
}

}  // namespace
}  // namespace l0
