#include "l0/oracle/suites.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <complex>
#include <exception>
#include <sstream>

#include "l0/helly.hpp"
#include "l0/oracle/fiber_oracle.hpp"
#include "l0/oracle/generate.hpp"
#include "l0/stratification.hpp"

namespace l0::oracle {
namespace {

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Recorder {
  SuiteResult& result;
  std::size_t current = 0;

  void fail(const std::string& what) {
    ++result.failures;
    if (result.first_failure.empty())
      result.first_failure = "case " + std::to_string(current) + ": " + what;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

std::uint64_t case_seed(const SuiteSizes& s, std::uint64_t suite, std::size_t i) {
  return s.seed * 1000003ULL + suite * 7919ULL + i;
}

std::vector<std::size_t> pick_nulls(Rng& rng, std::size_t atoms, int max_nulls) {
  std::vector<std::size_t> nulls;
  if (atoms < 2) return nulls;
  int count = rng.uniform(0, max_nulls);
  for (int c = 0; c < count; ++c) nulls.push_back(rng.index(atoms));
  return nulls;
}

template <Field K>
bool row_equal(const Vec<K>& a, const Vec<K>& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (!(a[j] == b[j])) return false;
  return true;
}

// ---------------------------------------------------------------- stratify

template <Field K>
void stratification_case(Recorder& rec, Rng& rng) {
  const std::size_t atoms = static_cast<std::size_t>(rng.uniform(1, 8));
  const std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 6));
  const std::size_t gens = static_cast<std::size_t>(rng.uniform(1, 6));
  SpacePtr space = gen_space(rng, atoms, pick_nulls(rng, atoms, 2));
  auto gm = gen_module<K>(rng, space, dim, gens, random_profile(rng, atoms, std::min(dim, gens)));
  auto s = stratify(gm.module);

  for (std::size_t a = 0; a < atoms; ++a) {
    std::size_t r = fiber_rank(gm.module.fiber(a), dim);
    if (r != gm.ranks[a]) rec.fail("generator missed its rank profile at atom " + space->atom(a).id);
    if (space->is_null(a)) continue;
    rec.expect(s.parts.size() > r && s.parts[r].contains(a), "partition disagrees with fiber rank at " +
                                                                  space->atom(a).id);
    // the stratum basis spans the fiber span
    Mat<K> basis;
    for (const auto& b : s.bases[r]) basis.push_back(b.fiber(a));
    rec.expect(fiber_rank(basis, dim) == r, "stratum basis is not independent at " + space->atom(a).id);
    Mat<K> both = gm.module.fiber(a);
    both.insert(both.end(), basis.begin(), basis.end());
    rec.expect(fiber_rank(both, dim) == r, "stratum basis leaves the module at " + space->atom(a).id);
  }

  auto s2 = stratify(represent(rng, gm.module));
  for (std::size_t i = 0; i < s.parts.size(); ++i)
    rec.expect(equal_as(s.parts[i], s2.parts[i]), "re-presented module gives a different partition");

  for (const auto& g : gm.module.generators()) {
    auto coords = expand_in_basis(s, g);
    if (!coords) {
      rec.fail("generator has no stratum coordinates");
      continue;
    }
    L0Vector<K> back = reconstruct(s, *coords);
    for (std::size_t a = 0; a < atoms; ++a)
      if (!space->is_null(a)) rec.expect(row_equal(back.fiber(a), g.fiber(a)), "reconstruction differs");
  }
}

// ------------------------------------------------------------- elimination

template <Field K>
void elimination_case(Recorder& rec, Rng& rng) {
  const std::size_t atoms = static_cast<std::size_t>(rng.uniform(1, 6));
  const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 5));
  const std::size_t h = static_cast<std::size_t>(rng.uniform(int(m) + 1, 6));
  SpacePtr space = gen_space(rng, atoms, pick_nulls(rng, atoms, 1));
  std::vector<bool> in_a(atoms);
  for (std::size_t a = 0; a < atoms; ++a) in_a[a] = rng.coin(75);
  Event ev(space, in_a);
  if (ev.is_null()) {
    for (std::size_t a = 0; a < atoms; ++a)
      if (!space->is_null(a)) in_a[a] = true;
    ev = Event(space, in_a);
  }
  const int zero_pct = rng.uniform(0, 60);
  L0Matrix<K> coeffs(m);
  for (auto& row : coeffs)
    for (std::size_t j = 0; j < h; ++j) {
      std::vector<K> v;
      for (std::size_t a = 0; a < atoms; ++a)
        v.push_back(rng.coin(zero_pct) ? FieldTraits<K>::zero() : rng.value<K>());
      row.emplace_back(space, std::move(v));
    }
  auto sol = solve_underdetermined(coeffs, ev);

  for (std::size_t a = 0; a < atoms; ++a) {
    Vec<K> lam;
    for (const auto& l : sol.solution) lam.push_back(l[a]);
    Mat<K> c;
    for (const auto& row : coeffs) {
      Vec<K> r;
      for (const auto& x : row) r.push_back(x[a]);
      c.push_back(std::move(r));
    }
    if (!ev.contains(a)) {
      rec.expect(is_zero_vec(lam), "solution not masked outside the event");
      continue;
    }
    rec.expect(is_zero_vec(mat_vec(c, lam)), "system not satisfied at " + space->atom(a).id);
    if (!space->is_null(a)) rec.expect(!is_zero_vec(lam), "trivial solution at " + space->atom(a).id);
    Mat<K> null = fiber_nullspace(c, h);
    std::size_t r = null.size();
    null.push_back(lam);
    rec.expect(fiber_rank(null, h) == r, "solution outside the oracle nullspace at " + space->atom(a).id);
  }
  rec.expect(subset_as(ev, sol.nontrivial_on), "nontrivial event misses part of A");
}

// ------------------------------------------------------------------- helly

template <Field K>
bool witness_refutes(const GeneratedHelly<K>& g, const std::vector<L0Scalar<K>>& lambda, std::size_t a) {
  Vec<K> lam;
  for (const auto& l : lambda) lam.push_back(l[a]);
  const auto& inst = g.instance;
  Vec<K> xi;
  for (const auto& t : inst.targets) xi.push_back(t[a]);
  return !condition_holds(g.rows[a], xi, inst.beta[a], lam, inst.dim());
}

template <Field K>
void helly_case(Recorder& rec, Rng& rng, HellyTag tag, std::size_t draws) {
  const bool small = rng.coin(30);
  const std::size_t atoms = static_cast<std::size_t>(rng.uniform(1, small ? 3 : 6));
  const std::size_t n = static_cast<std::size_t>(rng.uniform(1, small ? 3 : 5));
  const std::size_t dim = static_cast<std::size_t>(rng.uniform(1, small ? 3 : 5));
  if (tag == HellyTag::inconsistent && n == 1) tag = HellyTag::over_budget;  // rank < n needs n >= 2 to be interesting
  SpacePtr space = gen_space(rng, atoms, pick_nulls(rng, atoms, 1));
  auto g = gen_helly<K>(rng, space, n, dim, tag, static_cast<std::size_t>(rng.uniform(1, 2)));
  const auto& inst = g.instance;
  auto v = solve(inst);

  // per-atom classical oracle
  std::vector<bool> bad(atoms, false);
  for (std::size_t a = 0; a < atoms; ++a) {
    Vec<K> xi;
    for (const auto& t : inst.targets) xi.push_back(t[a]);
    bad[a] = !space->is_null(a) && !fiber_helly(g.rows[a], xi, inst.beta[a], dim).feasible;
  }
  Event oracle_bad(space, bad);
  const bool expect_feasible = tag == HellyTag::feasible;
  rec.expect(oracle_bad.is_empty() == expect_feasible, "generator tag disagrees with the fiber oracle");
  rec.expect(v.feasible == expect_feasible, "verdict disagrees with the tag");

  if (v.feasible) {
    const L0Vector<K>& x = *v.solution;
    for (std::size_t k = 0; k < n; ++k)
      rec.expect(equal_as(apply(inst.functionals[k], x), inst.targets[k]), "construct misses an equation");
    rec.expect(leq_as(norm(x), inst.beta), "construct exceeds beta");
    auto x2 = construct(inst);
    rec.expect(equal_as(x, x2), "construct and solve differ");
    for (std::size_t a = 0; a < atoms; ++a) {
      if (space->is_null(a)) continue;
      Vec<K> xi;
      for (const auto& t : inst.targets) xi.push_back(t[a]);
      auto o = fiber_minnorm_solve(g.rows[a], xi, dim);
      rec.expect(o && norm2(*o) == norm2(x.fiber(a)), "solution is not minimal at " + space->atom(a).id);
    }
    // necessity: random lambda never violates the condition
    for (std::size_t d = 0; d < draws; ++d) {
      for (std::size_t a = 0; a < atoms; ++a) {
        if (space->is_null(a)) continue;
        Vec<K> xi;
        for (const auto& t : inst.targets) xi.push_back(t[a]);
        if (!condition_holds(g.rows[a], xi, inst.beta[a], rng.vec<K>(n, 4), dim)) {
          rec.fail("random lambda violates a feasible instance");
          d = draws;
          break;
        }
      }
    }
  } else {
    rec.expect(v.violation_event && *v.violation_event == oracle_bad, "violation event differs from the oracle");
    rec.expect(v.violation_event && equal_as(*v.violation_event, g.planted), "violation event differs from the plant");
    const auto& lambda = *v.witness;
    bool thrown = false;
    try {
      (void)construct(inst);
    } catch (const VerdictMismatch&) {
      thrown = true;
    }
    rec.expect(thrown, "construct accepted an infeasible instance");
    for (std::size_t a = 0; a < atoms; ++a) {
      if (v.violation_event->contains(a)) {
        rec.expect(witness_refutes(g, lambda, a), "witness does not refute at " + space->atom(a).id);
        RealOf<K> top{};
        for (const auto& l : lambda) top = std::max<RealOf<K>>(top, FieldTraits<K>::abs2(l[a]));
        rec.expect(top == 1, "witness not normalised at " + space->atom(a).id);
      } else {
        for (const auto& l : lambda) rec.expect(FieldTraits<K>::is_zero(l[a], 0.0), "witness nonzero off the event");
      }
    }
  }

  if (small) {
    // brute force: the grid plus the witness direction decides the verdict
    bool all_hold = true;
    for (std::size_t a = 0; a < atoms; ++a) {
      if (space->is_null(a)) continue;
      Vec<K> xi;
      for (const auto& t : inst.targets) xi.push_back(t[a]);
      bool holds = condition_on_grid(g.rows[a], xi, inst.beta[a], dim);
      if (v.witness) holds = holds && !witness_refutes(g, *v.witness, a);
      all_hold = all_hold && holds;
    }
    rec.expect(all_hold == v.feasible, "brute-force grid verdict differs");
  }
}

// -------------------------------------------------------------- orthogonal

template <Field K>
void orthogonal_case(Recorder& rec, Rng& rng, bool full) {
  const std::size_t atoms = static_cast<std::size_t>(rng.uniform(1, 8));
  const std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 6));
  const std::size_t gens = static_cast<std::size_t>(rng.uniform(int(full ? dim : 1), 6));
  SpacePtr space = gen_space(rng, atoms, pick_nulls(rng, atoms, 2));
  std::vector<std::size_t> ranks;
  for (std::size_t a = 0; a < atoms; ++a)
    ranks.push_back(full && !space->is_null(a) ? dim
                                               : static_cast<std::size_t>(rng.uniform(0, int(std::min(dim, gens)))));
  if (!full) {
    // a known proper event of positive probability
    std::vector<std::size_t> positive;
    for (std::size_t a = 0; a < atoms; ++a)
      if (!space->is_null(a)) positive.push_back(a);
    std::size_t a = positive[rng.index(positive.size())];
    if (ranks[a] == dim) ranks[a] = dim - 1;
  }
  auto gm = gen_module<K>(rng, space, dim, gens, ranks);
  std::vector<bool> proper(atoms);
  for (std::size_t a = 0; a < atoms; ++a) proper[a] = ranks[a] < dim;
  Event expected(space, proper);

  auto w = orthogonal_witness(gm.module);
  if (full) {
    rec.expect(w.module_is_full(), "full module not reported as full");
    return;
  }
  if (w.module_is_full()) {
    rec.fail("proper module reported as full");
    return;
  }
  rec.expect(w.proper == expected, "proper event differs from the planted one");
  const auto& x = *w.vector;
  rec.expect(x.support() == expected, "witness support differs from the proper event");
  for (const auto& g : gm.module.generators()) {
    auto ip = inner_product(x, g);
    for (std::size_t a = 0; a < atoms; ++a) rec.expect(ip.is_zero_at(a), "witness not orthogonal");
  }
}

// -------------------------------------------------------------- samplewise

template <Field K>
void samplewise_case(Recorder& rec, Rng& rng) {
  using R = RealOf<K>;
  const std::size_t atoms = static_cast<std::size_t>(rng.uniform(2, 6));
  const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
  const std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 4));
  SpacePtr space = gen_space(rng, atoms, pick_nulls(rng, atoms, 2));
  HellyTag tag = rng.coin(80) ? HellyTag::feasible : HellyTag::over_budget;
  auto g = gen_helly<K>(rng, space, n, dim, tag);
  const auto& inst = g.instance;
  std::vector<L0Vector<K>> rows;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<detail::Row<K>> fibers;
    for (std::size_t a = 0; a < atoms; ++a) fibers.push_back(g.rows[a][k]);
    rows.push_back(L0Vector<K>::from_fibers(space, dim, fibers));
  }
  SamplewiseProblem<K> p{std::move(rows), inst.targets, inst.beta, inst.eps};

  std::vector<bool> classical(atoms), loose(atoms), pos_fail(atoms);
  for (std::size_t a = 0; a < atoms; ++a) {
    Vec<K> xi;
    for (const auto& t : inst.targets) xi.push_back(t[a]);
    auto o = fiber_helly(g.rows[a], xi, inst.beta[a], dim);
    classical[a] = o.feasible;
    loose[a] = o.consistent && sq_leq(o.minnorm2, R(inst.beta[a] + inst.eps[a]), 0.0);
    pos_fail[a] = !space->is_null(a) && !classical[a];
  }
  Event positive_failures(space, pos_fail);
  Event solvable(space, loose);

  for (bool everywhere : {false, true}) {
    auto rep = solve_samplewise(p, everywhere);
    const std::string tagname = everywhere ? "[everywhere] " : "[a.s.] ";
    if (!positive_failures.is_empty()) {
      rec.expect(!rep.feasible, tagname + "infeasible data reported feasible");
      rec.expect(rep.failing == positive_failures, tagname + "failing atoms differ from the oracle");
      continue;
    }
    rec.expect(rep.solved == solvable, tagname + "solved event differs from the per-atom oracle");
    if (everywhere) {
      rec.expect(rep.failing == solvable.complement(), tagname + "failing atoms differ from the oracle");
      rec.expect(rep.feasible == solvable.complement().is_empty(), tagname + "everywhere verdict differs");
    } else {
      rec.expect(rep.feasible, tagname + "null atoms affected the a.s. verdict");
    }
    for (std::size_t a = 0; a < atoms; ++a) {
      if (!rep.solved.contains(a)) continue;
      Vec<K> x = rep.solution->fiber(a);
      Vec<K> xi;
      for (const auto& t : inst.targets) xi.push_back(t[a]);
      rec.expect(row_equal(mat_vec(g.rows[a], x), xi), tagname + "equations fail on a solved atom");
      rec.expect(sq_leq(norm2(x), R(inst.beta[a] + inst.eps[a]), 0.0), tagname + "bound fails on a solved atom");
    }
  }
}

// ------------------------------------------------------------------- float

L0Vector<double> to_float(const L0Vector<Rational>& x, const SpacePtr& space) {
  std::vector<L0Scalar<double>> c;
  for (const auto& s : x.coords()) c.push_back(convert<double, Rational>(s, space));
  return L0Vector<double>(space, std::move(c));
}

/// Smallest nonzero singular value of a rational fiber matrix (infinity if zero).
double min_singular(const Mat<Rational>& m, std::size_t cols) {
  if (m.empty() || cols == 0) return 1e300;
  Eigen::MatrixXd e(m.size(), cols);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) e(Eigen::Index(i), Eigen::Index(j)) = m[i][j].get_d();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(e);
  const auto& s = svd.singularValues();
  double best = 1e300;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s(k) > 1e-12) best = std::min(best, s(k));
  return best;
}

/// Distance of the rational data from a verdict boundary at one atom: the
/// budget gap |beta - minimal norm| on consistent atoms.
double budget_gap(const Mat<Rational>& f, const Vec<Rational>& xi, const Rational& beta, std::size_t dim) {
  auto o = fiber_minnorm_solve(f, xi, dim);
  if (!o) return 1e300;
  return std::abs(beta.get_d() - std::sqrt(norm2(*o).get_d()));
}

struct FloatTally {
  std::size_t compared = 0;
  std::size_t skipped = 0;
};

void float_helly_case(Recorder& rec, Rng& rng, FloatTally& tally) {
  const std::size_t atoms = static_cast<std::size_t>(rng.uniform(1, 6));
  const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
  const std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 5));
  SpacePtr space = gen_space(rng, atoms, pick_nulls(rng, atoms, 1));
  HellyTag tag = static_cast<HellyTag>(rng.uniform(0, 2));
  if (tag == HellyTag::inconsistent && n == 1) tag = HellyTag::over_budget;
  auto g = gen_helly<Rational>(rng, space, n, dim, tag);
  const auto& inst = g.instance;

  bool well_conditioned = true;
  for (std::size_t a = 0; a < atoms; ++a) {
    Vec<Rational> xi;
    for (const auto& t : inst.targets) xi.push_back(t[a]);
    well_conditioned = well_conditioned && min_singular(g.rows[a], dim) > 1e-6;
    // an exact tie beta = minimal norm is a boundary case, not a conditioning one
    double gap = budget_gap(g.rows[a], xi, inst.beta[a], dim);
    well_conditioned = well_conditioned && (gap == 0 || gap > 1e-6);
  }
  if (!well_conditioned) {
    ++tally.skipped;
    return;
  }
  ++tally.compared;
  auto exact = check(inst);

  SpacePtr fspace = space->with_mode(Mode::approximate);
  std::vector<RandomFunctional<double>> fs;
  for (const auto& f : inst.functionals) fs.emplace_back(to_float(f.riesz_vector(), fspace));
  std::vector<L0Scalar<double>> ts;
  for (const auto& t : inst.targets) ts.push_back(convert<double, Rational>(t, fspace));
  HellyInstance<double> finst{std::move(fs), std::move(ts), convert<double, Rational>(inst.beta, fspace),
                              convert<double, Rational>(inst.eps, fspace)};
  auto approx = check(finst);
  rec.expect(approx.feasible == exact.feasible, "float verdict flipped");
  if (!exact.feasible && !approx.feasible)
    rec.expect(approx.violation_event->members() == exact.violation_event->members(), "float violation event differs");
  if (approx.feasible) {
    auto x = construct(finst);
    for (std::size_t k = 0; k < n; ++k) {
      auto got = apply(finst.functionals[k], x);
      for (std::size_t a = 0; a < atoms; ++a)
        if (!space->is_null(a))
          rec.expect(std::abs(got[a] - finst.targets[k][a]) <= 1e-7 * std::max(1.0, std::abs(finst.targets[k][a])),
                     "float construct misses an equation");
    }
    NormValue<double> nx = norm(x);
    for (std::size_t a = 0; a < atoms; ++a)
      if (!space->is_null(a))
        rec.expect(nx.to_double(a) <= finst.beta[a] + finst.eps[a], "float construct exceeds beta + eps");
  }
}

void float_stratify_case(Recorder& rec, Rng& rng, FloatTally& tally) {
  const std::size_t atoms = static_cast<std::size_t>(rng.uniform(1, 8));
  const std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 6));
  const std::size_t gens = static_cast<std::size_t>(rng.uniform(1, 6));
  SpacePtr space = gen_space(rng, atoms, pick_nulls(rng, atoms, 2));
  auto gm = gen_module<Rational>(rng, space, dim, gens, random_profile(rng, atoms, std::min(dim, gens)));
  for (std::size_t a = 0; a < atoms; ++a)
    if (min_singular(gm.module.fiber(a), dim) <= 1e-6) {
      ++tally.skipped;
      return;
    }
  ++tally.compared;
  auto exact = stratify(gm.module);
  SpacePtr fspace = space->with_mode(Mode::approximate);
  std::vector<L0Vector<double>> gens_f;
  for (const auto& g : gm.module.generators()) gens_f.push_back(to_float(g, fspace));
  auto approx = stratify(SubmoduleSpec<double>(dim, std::move(gens_f)));
  for (std::size_t i = 0; i < exact.parts.size(); ++i)
    rec.expect(exact.parts[i].members() == approx.parts[i].members(), "float partition differs");
}

template <class F>
SuiteResult run_suite(const std::string& name, F&& body) {
  SuiteResult r;
  r.name = name;
  Clock clock;
  Recorder rec{r};
  try {
    body(rec);
  } catch (const std::exception& e) {
    rec.fail(std::string("exception: ") + e.what());
  }
  r.seconds = clock.seconds();
  return r;
}

}  // namespace

SuiteResult suite_stratification(const SuiteSizes& sizes) {
  return run_suite("stratification", [&](Recorder& rec) {
    for (std::size_t i = 0; i < sizes.stratify; ++i) {
      rec.current = i;
      Rng rng(case_seed(sizes, 1, i));
      if (i % 4 == 3)
        stratification_case<GaussRational>(rec, rng);
      else
        stratification_case<Rational>(rec, rng);
      ++rec.result.cases;
    }
  });
}

SuiteResult suite_elimination(const SuiteSizes& sizes) {
  return run_suite("elimination", [&](Recorder& rec) {
    for (std::size_t i = 0; i < sizes.elimination; ++i) {
      rec.current = i;
      Rng rng(case_seed(sizes, 2, i));
      if (i % 4 == 3)
        elimination_case<GaussRational>(rec, rng);
      else
        elimination_case<Rational>(rec, rng);
      ++rec.result.cases;
    }
  });
}

SuiteResult suite_helly(const SuiteSizes& sizes) {
  return run_suite("helly", [&](Recorder& rec) {
    std::size_t feasible = 0, infeasible = 0;
    for (std::size_t i = 0; i < 2 * sizes.helly; ++i) {
      rec.current = i;
      Rng rng(case_seed(sizes, 3, i));
      HellyTag tag = i % 2 == 0 ? HellyTag::feasible : (i % 4 == 1 ? HellyTag::inconsistent : HellyTag::over_budget);
      (tag == HellyTag::feasible ? feasible : infeasible) += 1;
      if (i % 8 >= 6)
        helly_case<GaussRational>(rec, rng, tag, sizes.lambda_draws);
      else
        helly_case<Rational>(rec, rng, tag, sizes.lambda_draws);
      ++rec.result.cases;
    }
    rec.result.note = std::to_string(feasible) + " feasible, " + std::to_string(infeasible) + " infeasible, " +
                      std::to_string(sizes.lambda_draws) + " lambda draws each";
  });
}

SuiteResult suite_orthogonal(const SuiteSizes& sizes) {
  return run_suite("orthogonal", [&](Recorder& rec) {
    for (std::size_t i = 0; i < sizes.orthogonal; ++i) {
      rec.current = i;
      Rng rng(case_seed(sizes, 4, i));
      const bool full = i % 4 == 0;
      if (i % 3 == 2)
        orthogonal_case<GaussRational>(rec, rng, full);
      else
        orthogonal_case<Rational>(rec, rng, full);
      ++rec.result.cases;
    }
  });
}

SuiteResult suite_samplewise(const SuiteSizes& sizes) {
  return run_suite("samplewise", [&](Recorder& rec) {
    for (std::size_t i = 0; i < sizes.samplewise; ++i) {
      rec.current = i;
      Rng rng(case_seed(sizes, 5, i));
      if (i % 4 == 3)
        samplewise_case<GaussRational>(rec, rng);
      else
        samplewise_case<Rational>(rec, rng);
      ++rec.result.cases;
    }
  });
}

SuiteResult suite_float(const SuiteSizes& sizes) {
  return run_suite("float", [&](Recorder& rec) {
    FloatTally tally;
    for (std::size_t i = 0; i < sizes.float_cases; ++i) {
      rec.current = i;
      Rng rng(case_seed(sizes, 6, i));
      if (i % 3 == 2)
        float_stratify_case(rec, rng, tally);
      else
        float_helly_case(rec, rng, tally);
    }
    rec.result.cases = tally.compared;
    rec.result.note = std::to_string(tally.compared) + " compared, " + std::to_string(tally.skipped) +
                      " skipped as ill-conditioned";
  });
}

}  // namespace l0::oracle
