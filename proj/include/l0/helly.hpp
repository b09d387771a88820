// Helly-type feasibility for systems f_i(x) = xi_i, ||x|| <= beta (+ eps) of
// random linear functional equations on L0(F,K^n).
//
// The solution is built along the stratification of span{f_i}: on each
// stratum A_i a free basis g_j = sum_k zeta_kj f_k is extracted, the targets
// are transformed to gamma_j = sum_k zeta_kj xi_k, the reduced independent
// system g_j(x) = gamma_j is solved with minimal Euclidean norm, and the
// stratum solutions are concatenated. Infeasibility is certified per atom by
// a coefficient vector lambda with |sum lambda_k xi_k| > beta ||sum lambda_k f_k||*.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "l0/conjugate.hpp"
#include "l0/detail/fiber.hpp"
#include "l0/error.hpp"
#include "l0/stratification.hpp"
#include "l0/trace.hpp"

namespace l0 {

template <Field K>
struct HellyInstance {
  using Real = RealOf<K>;

  std::vector<RandomFunctional<K>> functionals;
  std::vector<L0Scalar<K>> targets;
  L0Scalar<Real> beta;
  L0Scalar<Real> eps;

  const SpacePtr& space() const { return beta.space(); }
  std::size_t dim() const { return functionals.front().dim(); }
  std::size_t count() const { return functionals.size(); }

  /// Throws InvalidArgument on a malformed instance.
  void validate() const {
    if (functionals.empty()) throw InvalidArgument("Helly instance: no functionals");
    if (targets.size() != functionals.size())
      throw InvalidArgument("Helly instance: " + std::to_string(functionals.size()) + " functionals but " +
                            std::to_string(targets.size()) + " targets");
    for (const auto& f : functionals) {
      require_same_space(space(), f.space(), "Helly instance");
      if (f.dim() != dim()) throw DimensionMismatch("Helly instance: functionals of different dimensions");
    }
    for (const auto& t : targets) require_same_space(space(), t.space(), "Helly instance");
    require_same_space(space(), eps.space(), "Helly instance");
    const double tol = beta.tolerance();
    for (std::size_t k = 0; k < beta.size(); ++k) {
      if (!space()->is_null(k) && RealOrder<Real>::sign(beta[k], tol) < 0)
        throw InvalidArgument("Helly instance: beta is negative at atom " + space()->atom(k).id);
      if (!(eps[k] > 0)) throw InvalidArgument("Helly instance: eps is not positive at atom " + space()->atom(k).id);
    }
  }
};

template <Field K>
struct HellyVerdict {
  bool feasible = false;
  std::optional<std::vector<L0Scalar<K>>> witness;  // present iff infeasible
  std::optional<L0Vector<K>> solution;              // present iff feasible and constructed
  std::optional<Event> violation_event;             // present iff infeasible
  Event inconsistent;                               // atoms (any probability) with no fiber solution
  Event over_budget;                                // consistent atoms whose minimal norm exceeds beta
  NormValue<RealOf<K>> minimal_norm;                // norm of the reduced minimal-norm solution
};

namespace detail {

template <Field K>
bool close(const K& a, const K& b, double tol) {
  if constexpr (FieldTraits<K>::exact) {
    return a == b;
  } else {
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
  }
}

template <class R>
bool exceeds(const R& norm2, const R& bound, double tol) {
  if constexpr (FieldTraits<R>::exact) {
    return norm2 > bound * bound;
  } else {
    return std::sqrt(std::max(norm2, 0.0)) > bound + tol * std::max(1.0, bound);
  }
}

/// The stratified reduction shared by check, witness and construct.
template <Field K>
struct HellyReduction {
  Stratification<K> strat;
  std::vector<std::vector<L0Scalar<K>>> gamma;  // gamma[i][j] on A_i
  L0Vector<K> x;                                // concatenated stratum solutions
  std::vector<bool> consistent;                 // per atom: f_k(x) = xi_k for all k
};

template <Field K>
HellyReduction<K> reduce(const HellyInstance<K>& inst, Trace* trace) {
  using S = L0Scalar<K>;
  const SpacePtr& space = inst.space();
  const double tol = space->tolerance();
  const std::size_t n = inst.count();
  const std::size_t dim = inst.dim();

  Stratification<K> strat = stratify(riesz_span(std::span<const RandomFunctional<K>>(inst.functionals)), trace);

  std::vector<std::vector<S>> gamma(strat.parts.size());
  for (std::size_t i = 1; i < strat.parts.size(); ++i) {
    for (std::size_t j = 0; j < strat.bases[i].size(); ++j) {
      S g = S::zero(space);
      for (std::size_t k = 0; k < n; ++k) g = g + strat.coefficients[i][j][k] * inst.targets[k];
      gamma[i].push_back(g.mask(strat.parts[i]));
    }
  }

  std::vector<Row<K>> fibers(space->size(), Row<K>(dim, FieldTraits<K>::zero()));
  std::vector<bool> consistent(space->size());
  for (std::size_t a = 0; a < space->size(); ++a) {
    const std::size_t i = strat.fiber_rank[a];
    if (i > 0) {
      Dense<K> g_rows;
      Row<K> rhs;
      for (std::size_t j = 0; j < i; ++j) {
        g_rows.push_back(conj_row(strat.bases[i][j].fiber(a)));
        rhs.push_back(gamma[i][j][a]);
      }
      auto sol = minnorm_full_row_rank(g_rows, rhs, dim, tol);
      if (!sol) throw Error("Helly reduction: stratum basis is not independent");
      fibers[a] = std::move(sol->first);
    }
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k)
      ok = close(dot_plain(inst.functionals[k].fiber_row(a), fibers[a]), inst.targets[k][a], tol);
    consistent[a] = ok;
  }
  L0Vector<K> x = L0Vector<K>::from_fibers(space, dim, fibers);
  for (std::size_t i = 0; i < strat.parts.size(); ++i)
    if (!strat.parts[i].is_empty())
      trace_add(trace, "reduced system on A" + std::to_string(i) + " = " + format_event(strat.parts[i]) + ": " +
                           std::to_string(i) + " independent equation(s)");
  return {std::move(strat), std::move(gamma), std::move(x), std::move(consistent)};
}

/// Certificate at one violating atom. `inconsistent` selects the residual
/// direction; otherwise the dual direction of the minimal-norm solution.
template <Field K>
Row<K> fiber_certificate(const HellyInstance<K>& inst, const HellyReduction<K>& red, std::size_t a,
                         bool inconsistent) {
  using T = FieldTraits<K>;
  const double tol = inst.space()->tolerance();
  const std::size_t n = inst.count();
  const std::size_t i = red.strat.fiber_rank[a];

  Dense<K> g_rows;
  for (std::size_t j = 0; j < i; ++j) g_rows.push_back(conj_row(red.strat.bases[i][j].fiber(a)));
  // F_k = sum_j h[k][j] G_j, so range(F) = range(h).
  Dense<K> h;
  for (std::size_t k = 0; k < n; ++k) {
    auto c = coordinates(g_rows, inst.functionals[k].fiber_row(a), tol);
    if (!c) throw Error("Helly certificate: functional outside its stratum span");
    h.push_back(std::move(*c));
  }
  // Solves (h^H h) v = rhs and returns h v.
  auto through_h = [&](const Row<K>& rhs) {
    Dense<K> hh(i, Row<K>(i, T::zero()));
    for (std::size_t p = 0; p < i; ++p)
      for (std::size_t q = 0; q < i; ++q)
        for (std::size_t k = 0; k < n; ++k) hh[p][q] += T::conj(h[k][p]) * h[k][q];
    auto v = solve_square(std::move(hh), rhs, tol);
    if (!v) throw Error("Helly certificate: singular stratum expansion");
    Row<K> out(n, T::zero());
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t p = 0; p < i; ++p) out[k] += h[k][p] * (*v)[p];
    return out;
  };

  Row<K> dir(n, T::zero());
  if (inconsistent) {
    Row<K> xi(n);
    for (std::size_t k = 0; k < n; ++k) xi[k] = inst.targets[k][a];
    Row<K> proj(n, T::zero());
    if (i > 0) {
      Row<K> hx(i, T::zero());
      for (std::size_t p = 0; p < i; ++p)
        for (std::size_t k = 0; k < n; ++k) hx[p] += T::conj(h[k][p]) * xi[k];
      proj = through_h(hx);
    }
    for (std::size_t k = 0; k < n; ++k) dir[k] = xi[k] - proj[k];  // residual r
  } else {
    Row<K> rhs;
    for (std::size_t j = 0; j < i; ++j) rhs.push_back(red.gamma[i][j][a]);
    auto u = solve_square(gram(g_rows), rhs, tol);
    if (!u) throw Error("Helly certificate: singular reduced Gram matrix");
    dir = through_h(*u);  // (F F^H)^+ xi
  }
  // lambda = conj(direction), scaled so its first largest entry is exactly 1.
  Row<K> lambda = conj_row(dir);
  std::size_t best = 0;
  for (std::size_t k = 1; k < n; ++k)
    if (T::abs2(lambda[k]) > T::abs2(lambda[best])) best = k;
  if (T::is_zero(lambda[best], tol)) throw Error("Helly certificate: zero certificate at a violating atom");
  K scale = T::one() / lambda[best];
  for (auto& v : lambda) v = v * scale;
  lambda[best] = T::one();
  return lambda;
}

template <Field K>
HellyVerdict<K> assess(const HellyInstance<K>& inst, const HellyReduction<K>& red) {
  using Real = RealOf<K>;
  const SpacePtr& space = inst.space();
  const double tol = space->tolerance();
  NormValue<Real> nrm = norm(red.x);
  std::vector<bool> bad_fit(space->size()), bad_norm(space->size());
  for (std::size_t a = 0; a < space->size(); ++a) {
    bad_fit[a] = !red.consistent[a];
    bad_norm[a] = red.consistent[a] && exceeds(nrm.squared()[a], inst.beta[a], tol);
  }
  Event inconsistent(space, std::move(bad_fit));
  Event over(space, std::move(bad_norm));
  Event violation = (inconsistent | over).positive_part();
  HellyVerdict<K> v{violation.is_empty(), std::nullopt, std::nullopt, std::nullopt, inconsistent, over, nrm};
  if (!v.feasible) v.violation_event = violation;
  return v;
}

template <Field K>
std::vector<L0Scalar<K>> build_witness(const HellyInstance<K>& inst, const HellyReduction<K>& red,
                                       const HellyVerdict<K>& v) {
  const SpacePtr& space = inst.space();
  const std::size_t n = inst.count();
  std::vector<std::vector<K>> vals(n, std::vector<K>(space->size(), FieldTraits<K>::zero()));
  for (std::size_t a : v.violation_event->indices()) {
    auto lambda = fiber_certificate(inst, red, a, v.inconsistent.contains(a));
    for (std::size_t k = 0; k < n; ++k) vals[k][a] = lambda[k];
  }
  std::vector<L0Scalar<K>> out;
  for (auto& col : vals) out.emplace_back(space, std::move(col));
  return out;
}

}  // namespace detail

/// Feasibility verdict; carries a witness and the violation event when infeasible.
template <Field K>
HellyVerdict<K> check(const HellyInstance<K>& inst, Trace* trace = nullptr) {
  inst.validate();
  auto red = detail::reduce(inst, trace);
  auto v = detail::assess(inst, red);
  if (!v.feasible) v.witness = detail::build_witness(inst, red, v);
  return v;
}

/// lambda violating |sum lambda_k xi_k| <= beta ||sum lambda_k f_k||* on the
/// violation event (zero elsewhere). Throws VerdictMismatch on feasible input.
template <Field K>
std::vector<L0Scalar<K>> witness(const HellyInstance<K>& inst, Trace* trace = nullptr) {
  auto v = check(inst, trace);
  if (v.feasible) throw VerdictMismatch("witness: the instance is feasible, no violating coefficients exist");
  return std::move(*v.witness);
}

/// x with f_i(x) = xi_i a.s. and ||x|| <= beta a.s. (hence <= beta + eps).
/// Throws VerdictMismatch on infeasible input.
template <Field K>
L0Vector<K> construct(const HellyInstance<K>& inst, Trace* trace = nullptr) {
  inst.validate();
  auto red = detail::reduce(inst, trace);
  auto v = detail::assess(inst, red);
  if (!v.feasible)
    throw VerdictMismatch("construct: the instance is infeasible on " + format_event(*v.violation_event));
  return std::move(red.x);
}

/// check followed by construct, sharing one reduction.
template <Field K>
HellyVerdict<K> solve(const HellyInstance<K>& inst, Trace* trace = nullptr) {
  inst.validate();
  auto red = detail::reduce(inst, trace);
  auto v = detail::assess(inst, red);
  if (v.feasible)
    v.solution = red.x;
  else
    v.witness = detail::build_witness(inst, red, v);
  return v;
}

// ---------------------------------------------------------------------------
// Sample-wise solutions: per-atom matrices on B = K^m.

template <Field K>
struct SamplewiseProblem {
  using Real = RealOf<K>;
  /// rows[i] holds the matrix row of f_i(omega, .): f_i(omega, b) = sum_j rows[i][j](omega) b_j.
  std::vector<L0Vector<K>> rows;
  std::vector<L0Scalar<K>> targets;
  L0Scalar<Real> beta;
  L0Scalar<Real> eps;

  const SpacePtr& space() const { return beta.space(); }

  HellyInstance<K> as_instance() const {
    std::vector<RandomFunctional<K>> fs;
    for (const auto& r : rows) fs.emplace_back(r.conj());
    return {std::move(fs), targets, beta, eps};
  }
};

template <Field K>
struct SamplewiseReport {
  bool feasible = false;
  std::optional<L0Vector<K>> solution;  // x^0, meaningful on `solved`
  Event solved;                         // Omega_0: equations and bound hold
  Event patched;                        // null atoms filled in by the per-atom fallback
  Event failing;                        // atoms that make the problem infeasible
};

namespace detail {

/// Classical Helly solve at one atom: minimal-norm solution if the fiber
/// system is consistent and its norm is at most beta.
template <Field K>
std::optional<Row<K>> classical_fiber_solve(const Dense<K>& f_rows, const Row<K>& xi, const RealOf<K>& beta,
                                            std::size_t dim, double tol) {
  IndependentRows<K> ind(dim, tol);
  Dense<K> sel;
  Row<K> rhs;
  for (std::size_t k = 0; k < f_rows.size(); ++k)
    if (ind.offer(f_rows[k])) {
      sel.push_back(f_rows[k]);
      rhs.push_back(xi[k]);
    }
  Row<K> x(dim, FieldTraits<K>::zero());
  if (!sel.empty()) {
    auto sol = minnorm_full_row_rank(sel, rhs, dim, tol);
    if (!sol) return std::nullopt;
    x = std::move(sol->first);
  }
  for (std::size_t k = 0; k < f_rows.size(); ++k)
    if (!close(dot_plain(f_rows[k], x), xi[k], tol)) return std::nullopt;
  RealOf<K> n2 = FieldTraits<RealOf<K>>::zero();
  for (const K& c : x) n2 += FieldTraits<K>::abs2(c);
  if (exceeds(n2, beta, tol)) return std::nullopt;
  return x;
}

}  // namespace detail

/// Per-atom solutions. With `everywhere` unset the answer is almost sure:
/// null atoms that fail are excluded from Omega_0 without affecting
/// feasibility. With `everywhere` set every atom must be solvable, and null
/// atoms outside Omega_0 are patched by the classical per-atom solve.
template <Field K>
SamplewiseReport<K> solve_samplewise(const SamplewiseProblem<K>& p, bool everywhere, Trace* trace = nullptr) {
  const SpacePtr& space = p.space();
  const double tol = space->tolerance();
  HellyInstance<K> inst = p.as_instance();
  for (std::size_t k = 0; k < space->size(); ++k)
    if (!(p.eps[k] > 0)) throw InvalidArgument("samplewise: eps must be positive at every atom");
  auto v = solve(inst, trace);
  SamplewiseReport<K> rep{false, std::nullopt, Event::empty(space), Event::empty(space), Event::empty(space)};
  if (!v.feasible) {
    rep.failing = *v.violation_event;
    trace_add(trace, "condition fails on positive atoms " + format_event(rep.failing));
    return rep;
  }
  const std::size_t dim = inst.dim();
  std::vector<detail::Row<K>> fibers;
  std::vector<bool> solved(space->size()), patched(space->size()), failing(space->size());
  NormValue<RealOf<K>> nrm = norm(*v.solution);
  for (std::size_t a = 0; a < space->size(); ++a) {
    detail::Row<K> x = v.solution->fiber(a);
    bool ok = !v.inconsistent.contains(a);
    // Omega_0 uses the conclusion's bound beta + eps.
    if (ok) ok = !detail::exceeds(nrm.squared()[a], RealOf<K>(p.beta[a] + p.eps[a]), tol);
    if (!ok && everywhere) {
      detail::Dense<K> f_rows;
      detail::Row<K> xi;
      for (std::size_t k = 0; k < p.rows.size(); ++k) {
        f_rows.push_back(p.rows[k].fiber(a));
        xi.push_back(p.targets[k][a]);
      }
      if (auto fix = detail::classical_fiber_solve(f_rows, xi, p.beta[a], dim, tol)) {
        x = std::move(*fix);
        ok = true;
        patched[a] = true;
        trace_add(trace, "patched null atom " + space->atom(a).id + " by the per-atom solve");
      } else {
        failing[a] = true;
        trace_add(trace, "atom " + space->atom(a).id + " has no classical solution");
      }
    }
    solved[a] = ok;
    fibers.push_back(std::move(x));
  }
  rep.solution = L0Vector<K>::from_fibers(space, dim, fibers);
  rep.solved = Event(space, std::move(solved));
  rep.patched = Event(space, std::move(patched));
  rep.failing = Event(space, std::move(failing));
  rep.feasible = rep.failing.is_empty();
  return rep;
}

}  // namespace l0
