// Free-rank stratification of finitely generated L0-modules.
//
// The elimination for underdetermined homogeneous systems works on whole
// random variables: each column is split into the event where it vanishes
// (a solution is read off there) and pivot strata C_l built from the support
// events of the column entries, normalised with the masked pseudo-inverse.
// Stratification groups atoms by fiber rank, takes per-atom bases by pivoted
// row reduction over the generators, and glues them rank class by rank class
// with stitch_bases.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "l0/detail/fiber.hpp"
#include "l0/error.hpp"
#include "l0/l0_module.hpp"
#include "l0/l0_scalar.hpp"
#include "l0/trace.hpp"

namespace l0 {

/// m x h matrix of random variables, row-major.
template <Field K>
using L0Matrix = std::vector<std::vector<L0Scalar<K>>>;

template <Field K>
struct EliminationSolution {
  std::vector<L0Scalar<K>> solution;  // lambda_1..lambda_h
  Event nontrivial_on;
};

namespace detail {

template <Field K>
Event union_of_supports(const std::vector<L0Scalar<K>>& xs, const SpacePtr& space) {
  Event e = Event::empty(space);
  for (const auto& x : xs) e = e | support(x);
  return e;
}

// Runs the stratified elimination on `live`; the solution is nonzero on every
// atom of `live`. Coefficients must already vanish off `live`.
template <Field K>
std::vector<L0Scalar<K>> stratified_elimination(L0Matrix<K> rows, Event live, Trace* trace) {
  using S = L0Scalar<K>;
  const SpacePtr space = live.space();
  const std::size_t m = rows.size();
  const std::size_t h = rows.front().size();
  std::vector<S> lambda(h, S::zero(space));

  for (std::size_t k = 0; k < m && !live.is_empty(); ++k) {
    Event column = Event::empty(space);
    for (std::size_t j = k; j < m; ++j) column = column | support(rows[j][k]);
    column = column & live;
    Event done = live - column;
    trace_add(trace, "step " + std::to_string(k + 1) + ": column support " + format_event(column) +
                         ", vanishing stratum " + format_event(done));
    if (!done.is_empty()) {
      // Column k is zero below the identity block: lambda_k = I, lambda_r = -beta_{r,k}.
      S ind = S::indicator(done);
      lambda[k] = lambda[k] + ind;
      for (std::size_t r = 0; r < k; ++r) lambda[r] = lambda[r] - rows[r][k] * ind;
      live = column;
      for (auto& row : rows)
        for (auto& x : row) x = x.mask(live);
      if (live.is_empty()) break;
    }

    // Pivot strata: the own row where its entry is nonzero, then C_l in row order.
    Event covered = support(rows[k][k]) & live;
    trace_add(trace, "  pivot stratum row " + std::to_string(k + 1) + ": " + format_event(covered));
    S off_pivot = S::indicator(live - covered);
    std::vector<S> eta(h, S::zero(space));
    S own_scale = off_pivot + pseudo_inverse(rows[k][k]);
    for (std::size_t i = 0; i < h; ++i) eta[i] = own_scale * rows[k][i];
    for (std::size_t l = k + 1; l < m; ++l) {
      Event c_l = (support(rows[l][k]) & live) - covered;
      covered = covered | c_l;
      if (c_l.is_empty()) continue;
      trace_add(trace, "  pivot stratum row " + std::to_string(l + 1) + ": " + format_event(c_l));
      S scale = S::indicator(c_l) * pseudo_inverse(rows[l][k]);
      for (std::size_t i = 0; i < h; ++i) eta[i] = eta[i] + scale * rows[l][i];
    }
    for (auto& x : eta) x = x.mask(live);

    for (std::size_t j = 0; j < m; ++j) {
      if (j == k) continue;
      S factor = rows[j][k];
      for (std::size_t i = 0; i < h; ++i) rows[j][i] = rows[j][i] - factor * eta[i];
    }
    rows[k] = std::move(eta);
  }

  if (!live.is_empty()) {
    // Reduced form lambda_r + sum_{i>=m} beta_{r,i} lambda_i = 0.
    trace_add(trace, "back-substitution on " + format_event(live));
    S ind = S::indicator(live);
    for (std::size_t r = 0; r < m; ++r) lambda[r] = lambda[r] + rows[r][m] * ind;
    lambda[m] = lambda[m] - ind;
  }
  return lambda;
}

}  // namespace detail

/// Nontrivial solution of the homogeneous system sum_j xi_{ij} lambda_j = 0
/// (i = 1..m) with h > m unknowns, nonzero on every atom of A. Coefficients
/// are masked to A.
template <Field K>
EliminationSolution<K> solve_underdetermined(const L0Matrix<K>& coeffs, const Event& a, Trace* trace = nullptr) {
  const std::size_t m = coeffs.size();
  if (m == 0) throw InvalidArgument("solve_underdetermined: need at least one equation");
  const std::size_t h = coeffs.front().size();
  for (const auto& row : coeffs) {
    if (row.size() != h) throw DimensionMismatch("solve_underdetermined: ragged coefficient matrix");
    for (const auto& x : row) require_same_space(a.space(), x.space(), "solve_underdetermined");
  }
  if (h <= m)
    throw InvalidArgument("solve_underdetermined: need more unknowns than equations (h=" + std::to_string(h) +
                          ", m=" + std::to_string(m) + ")");
  if (a.is_null()) throw InvalidArgument("solve_underdetermined: event has probability zero");

  L0Matrix<K> rows = coeffs;
  for (auto& row : rows)
    for (auto& x : row) x = x.mask(a);
  auto lambda = detail::stratified_elimination<K>(std::move(rows), a, trace);
  Event nontrivial = detail::union_of_supports(lambda, a.space());
  return {std::move(lambda), std::move(nontrivial)};
}

/// Stratification: parts[i] is the event where the module is
/// free of rank i; bases[i] (length i) is a basis there, each basis vector a
/// stitched selection of generators recorded in coefficients[i][j][g].
template <Field K>
struct Stratification {
  SubmoduleSpec<K> generators;
  std::vector<Event> parts;
  std::vector<std::vector<L0Vector<K>>> bases;
  std::vector<std::vector<std::vector<L0Scalar<K>>>> coefficients;
  std::vector<std::size_t> fiber_rank;

  std::size_t max_rank() const { return parts.size() - 1; }
};

namespace detail {

template <class T>
T stitch_one(const Event& a, const T& y, const Event& b, const T& y_other) {
  return y.mask(a) + y_other.mask(b - a);
}

}  // namespace detail

/// Basis of I_{A u B} E from bases of I_A E and I_B E of equal length:
/// z_j = I_A y_j + I_{B \ A} y'_j.
template <Field K>
std::vector<L0Vector<K>> stitch_bases(const Event& a, const std::vector<L0Vector<K>>& basis_a, const Event& b,
                                      const std::vector<L0Vector<K>>& basis_b) {
  if (basis_a.size() != basis_b.size())
    throw DimensionMismatch("stitch_bases: bases of length " + std::to_string(basis_a.size()) + " and " +
                            std::to_string(basis_b.size()));
  require_same_space(a.space(), b.space(), "stitch_bases");
  std::vector<L0Vector<K>> z;
  for (std::size_t j = 0; j < basis_a.size(); ++j) z.push_back(detail::stitch_one(a, basis_a[j], b, basis_b[j]));
  return z;
}

template <Field K>
Stratification<K> stratify(const SubmoduleSpec<K>& m, Trace* trace = nullptr) {
  using S = L0Scalar<K>;
  const SpacePtr& space = m.space();
  const std::size_t n_atoms = space->size();
  const std::size_t dim = m.dim();
  const std::size_t n_gens = m.generators().size();
  const double tol = space->tolerance();

  std::vector<std::size_t> rank(n_atoms);
  std::vector<std::vector<std::size_t>> pivots(n_atoms);
  for (std::size_t k = 0; k < n_atoms; ++k) {
    detail::IndependentRows<K> ind(dim, tol);
    auto rows = m.fiber(k);
    for (std::size_t g = 0; g < n_gens; ++g)
      if (ind.offer(rows[g])) pivots[k].push_back(g);
    rank[k] = ind.rank();
    std::string line = "atom " + space->atom(k).id + ": fiber rank " + std::to_string(rank[k]) + ", basis generators";
    for (auto g : pivots[k]) line += " g" + std::to_string(g + 1);
    trace_add(trace, line);
  }

  Stratification<K> out{m, {}, {}, {}, rank};
  for (std::size_t i = 0; i <= dim; ++i) {
    std::vector<Event> family;
    for (std::size_t k = 0; k < n_atoms; ++k)
      if (rank[k] == i) family.push_back(Event::atom(space, k));
    Event part = family.empty() ? Event::empty(space) : ess_sup_events(std::span<const Event>(family));
    if (!family.empty()) {
      std::string line = "A" + std::to_string(i) + " = esssup{";
      for (std::size_t f = 0; f < family.size(); ++f) line += (f ? "," : "") + format_event(family[f]);
      trace_add(trace, line + "} = " + format_event(part));
    }

    std::vector<L0Vector<K>> basis;
    std::vector<std::vector<S>> coeff;
    Event acc = Event::empty(space);
    if (i > 0) {
      for (std::size_t k = 0; k < n_atoms; ++k) {
        if (rank[k] != i) continue;
        Event at = Event::atom(space, k);
        std::vector<L0Vector<K>> local;
        std::vector<std::vector<S>> local_coeff;
        for (std::size_t j = 0; j < i; ++j) {
          std::size_t g = pivots[k][j];
          local.push_back(m.generators()[g].mask(at));
          std::vector<S> c(n_gens, S::zero(space));
          c[g] = S::indicator(at);
          local_coeff.push_back(std::move(c));
        }
        if (acc.is_empty()) {
          basis = std::move(local);
          coeff = std::move(local_coeff);
        } else {
          basis = stitch_bases(acc, basis, at, local);
          for (std::size_t j = 0; j < i; ++j)
            for (std::size_t g = 0; g < n_gens; ++g)
              coeff[j][g] = detail::stitch_one(acc, coeff[j][g], at, local_coeff[j][g]);
        }
        acc = acc | at;
      }
    }
    out.parts.push_back(std::move(part));
    out.bases.push_back(std::move(basis));
    out.coefficients.push_back(std::move(coeff));
  }
  return out;
}

/// Coordinates of y in the stratum bases: coords[i][j] lives on parts[i].
/// Nullopt when y is not in the submodule a.s.
template <Field K>
std::optional<std::vector<std::vector<L0Scalar<K>>>> expand_in_basis(const Stratification<K>& s,
                                                                     const L0Vector<K>& y) {
  using S = L0Scalar<K>;
  const SpacePtr& space = s.generators.space();
  require_same_space(space, y.space(), "expand_in_basis");
  const double tol = space->tolerance();
  std::vector<std::vector<std::vector<K>>> vals(s.parts.size());
  for (std::size_t i = 0; i < s.parts.size(); ++i)
    vals[i].assign(i, std::vector<K>(space->size(), FieldTraits<K>::zero()));
  for (std::size_t k = 0; k < space->size(); ++k) {
    std::size_t i = s.fiber_rank[k];
    detail::Dense<K> basis;
    for (const auto& b : s.bases[i]) basis.push_back(b.fiber(k));
    auto c = detail::coordinates(basis, y.fiber(k), tol);
    if (!c) {
      if (space->is_null(k)) continue;
      return std::nullopt;
    }
    for (std::size_t j = 0; j < i; ++j) vals[i][j][k] = (*c)[j];
  }
  std::vector<std::vector<S>> coords(s.parts.size());
  for (std::size_t i = 0; i < s.parts.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) coords[i].emplace_back(space, std::move(vals[i][j]));
  return coords;
}

/// sum_i sum_j coords[i][j] * bases[i][j].
template <Field K>
L0Vector<K> reconstruct(const Stratification<K>& s, const std::vector<std::vector<L0Scalar<K>>>& coords) {
  L0Vector<K> out = L0Vector<K>::zero(s.generators.space(), s.generators.dim());
  for (std::size_t i = 0; i < s.parts.size(); ++i)
    for (std::size_t j = 0; j < coords[i].size(); ++j)
      if (j < s.bases[i].size()) out = out + (coords[i][j] * s.bases[i][j]).mask(s.parts[i]);
  return out;
}

/// The hereditarily disjoint stratum H({y}, M): complement of membership(M, y).
/// Throws NoDisjointStratum when y lies in M almost surely.
template <Field K>
Event hds_point_vs_submodule(const SubmoduleSpec<K>& m, const L0Vector<K>& y) {
  Event h = membership(m, y).complement();
  if (h.is_null()) throw NoDisjointStratum();
  return h;
}

template <Field K>
struct OrthogonalWitness {
  Event proper;                       // where the fiber span is a proper subspace
  std::optional<L0Vector<K>> vector;  // nullopt iff the module is full a.s.

  bool module_is_full() const { return !vector.has_value(); }
};

/// x != 0 with <x, g> = 0 for every generator g, supported exactly where the
/// generator fibers do not span K^n. Built stratum by stratum from the
/// elimination applied to the conjugated stratum basis.
template <Field K>
OrthogonalWitness<K> orthogonal_witness(const SubmoduleSpec<K>& m, Trace* trace = nullptr) {
  using S = L0Scalar<K>;
  const SpacePtr& space = m.space();
  const std::size_t dim = m.dim();
  Stratification<K> s = stratify(m);
  Event proper = Event::empty(space);
  L0Vector<K> x = L0Vector<K>::zero(space, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const Event& part = s.parts[i];
    if (part.is_empty()) continue;
    proper = proper | part;
    if (i == 0) {
      std::vector<S> coords(dim, S::zero(space));
      coords[0] = S::indicator(part);
      x = x + L0Vector<K>(space, std::move(coords));
      continue;
    }
    L0Matrix<K> rows;
    for (const auto& b : s.bases[i]) {
      std::vector<S> row;
      for (std::size_t c = 0; c < dim; ++c) row.push_back(b[c].conj().mask(part));
      rows.push_back(std::move(row));
    }
    trace_add(trace, "orthogonal complement on A" + std::to_string(i) + " = " + format_event(part));
    auto lambda = detail::stratified_elimination<K>(std::move(rows), part, trace);
    x = x + L0Vector<K>(space, std::move(lambda));
  }
  if (proper.is_null()) return {proper, std::nullopt};
  return {proper, std::move(x)};
}

}  // namespace l0
