// Seeded random instances with prescribed per-atom rank profiles. Feasible
// Helly instances are built from a chosen solution; infeasible ones plant an
// off-range target or a budget below the per-atom minimal norm.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "l0/conjugate.hpp"
#include "l0/helly.hpp"
#include "l0/l0_module.hpp"
#include "l0/oracle/fiber_oracle.hpp"
#include "l0/prob_space.hpp"

namespace l0::oracle {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1)); }
  bool coin(int percent = 50) { return uniform(1, 100) <= percent; }

  Rational rational(int range = 3) {
    Rational q(uniform(-range, range), coin(25) ? 2 : 1);
    q.canonicalize();
    return q;
  }

  /// Small entries: integers in [-range, range], occasionally halves.
  template <Field K>
  K value(int range = 3) {
    if constexpr (std::is_same_v<K, GaussRational>) {
      return {rational(range), coin(60) ? rational(range) : Rational(0)};
    } else {
      return FieldTraits<K>::from_rational(rational(range));
    }
  }

  template <Field K>
  Vec<K> vec(std::size_t n, int range = 3) {
    Vec<K> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(value<K>(range));
    return v;
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

/// Atoms a1..an with random weights; the listed atoms get probability zero.
inline SpacePtr gen_space(Rng& rng, std::size_t atoms, const std::vector<std::size_t>& null_atoms = {},
                          Mode mode = Mode::exact) {
  std::vector<int> w(atoms);
  int total = 0;
  for (std::size_t k = 0; k < atoms; ++k) {
    bool is_null = false;
    for (std::size_t z : null_atoms) is_null = is_null || z == k;
    w[k] = is_null ? 0 : rng.uniform(1, 5);
    total += w[k];
  }
  if (total == 0) {
    w[0] = 1;
    total = 1;
  }
  std::vector<Atom> as;
  for (std::size_t k = 0; k < atoms; ++k) {
    Rational p(w[k], total);
    p.canonicalize();
    as.push_back({"a" + std::to_string(k + 1), p});
  }
  return ProbSpace::create(std::move(as), mode);
}

/// A random r x cols matrix of rank exactly r (r <= cols).
template <Field K>
Mat<K> full_rank_rows(Rng& rng, std::size_t r, std::size_t cols) {
  while (true) {
    Mat<K> m;
    for (std::size_t i = 0; i < r; ++i) m.push_back(rng.vec<K>(cols));
    if (fiber_rank(m, cols) == r) return m;
  }
}

/// rows x cols matrix of rank exactly r: C (rows x r) times B (r x cols).
template <Field K>
Mat<K> rank_profile_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::size_t r) {
  Mat<K> out(rows, Vec<K>(cols, FieldTraits<K>::zero()));
  if (r == 0) return out;
  Mat<K> b = full_rank_rows<K>(rng, r, cols);
  Mat<K> c;
  while (true) {
    c.clear();
    for (std::size_t i = 0; i < rows; ++i) c.push_back(rng.vec<K>(r, 2));
    // occasionally a zero or duplicated row, which keeps redundancy in play
    if (rows > r && rng.coin(30)) c[rng.index(rows)] = Vec<K>(r, FieldTraits<K>::zero());
    if (fiber_rank(c, r) == r) break;
  }
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t p = 0; p < r; ++p)
      for (std::size_t j = 0; j < cols; ++j) out[i][j] = out[i][j] + c[i][p] * b[p][j];
  return out;
}

inline std::vector<std::size_t> random_profile(Rng& rng, std::size_t atoms, std::size_t max_rank) {
  std::vector<std::size_t> r;
  for (std::size_t k = 0; k < atoms; ++k) r.push_back(static_cast<std::size_t>(rng.uniform(0, int(max_rank))));
  return r;
}

/// Vectors whose k-th fiber is row k of mats[atom].
template <Field K>
std::vector<L0Vector<K>> vectors_from_rows(const SpacePtr& space, const std::vector<Mat<K>>& mats, std::size_t count,
                                           std::size_t dim) {
  std::vector<L0Vector<K>> out;
  for (std::size_t g = 0; g < count; ++g) {
    std::vector<detail::Row<K>> fibers;
    for (std::size_t a = 0; a < space->size(); ++a) fibers.push_back(mats[a][g]);
    out.push_back(L0Vector<K>::from_fibers(space, dim, fibers));
  }
  return out;
}

template <Field K>
struct GeneratedModule {
  SubmoduleSpec<K> module;
  std::vector<std::size_t> ranks;
};

/// Submodule with `gens` generators in K^dim whose fiber span has rank ranks[a].
template <Field K>
GeneratedModule<K> gen_module(Rng& rng, const SpacePtr& space, std::size_t dim, std::size_t gens,
                              const std::vector<std::size_t>& ranks) {
  std::vector<Mat<K>> mats;
  for (std::size_t a = 0; a < space->size(); ++a) mats.push_back(rank_profile_matrix<K>(rng, gens, dim, ranks[a]));
  return {SubmoduleSpec<K>(dim, vectors_from_rows(space, mats, gens, dim)), ranks};
}

/// Same submodule, different presentation: an invertible per-atom mix of the
/// generators plus one redundant generator.
template <Field K>
SubmoduleSpec<K> represent(Rng& rng, const SubmoduleSpec<K>& m) {
  const SpacePtr& space = m.space();
  const std::size_t g = m.generators().size();
  std::vector<Mat<K>> mats;
  for (std::size_t a = 0; a < space->size(); ++a) {
    Mat<K> old = m.fiber(a);
    // unit lower-triangular mix after a random permutation
    std::vector<std::size_t> perm(g);
    for (std::size_t i = 0; i < g; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    Mat<K> fresh;
    for (std::size_t i = 0; i < g; ++i) {
      Vec<K> row = old[perm[i]];
      for (std::size_t p = 0; p < i; ++p) {
        K c = rng.value<K>(2);
        for (std::size_t j = 0; j < m.dim(); ++j) row[j] = row[j] + c * old[perm[p]][j];
      }
      fresh.push_back(std::move(row));
    }
    Vec<K> extra(m.dim(), FieldTraits<K>::zero());
    for (const auto& r : old) {
      K c = rng.value<K>(1);
      for (std::size_t j = 0; j < m.dim(); ++j) extra[j] = extra[j] + c * r[j];
    }
    fresh.push_back(std::move(extra));
    mats.push_back(std::move(fresh));
  }
  return SubmoduleSpec<K>(m.dim(), vectors_from_rows(space, mats, g + 1, m.dim()));
}

template <Field K>
bool is_zero_vec(const Vec<K>& v) {
  for (const K& x : v)
    if (!FieldTraits<K>::is_zero(x, 0.0)) return false;
  return true;
}

inline Rational to_rational(const Rational& q) { return q; }
inline Rational to_rational(double d) { return Rational(d); }

enum class HellyTag { feasible, inconsistent, over_budget };

template <Field K>
struct GeneratedHelly {
  HellyInstance<K> instance;
  std::vector<Mat<K>> rows;  // per atom: row k is the map x -> f_k(x)
  std::vector<std::size_t> ranks;
  Event planted;             // positive atoms made infeasible on purpose
};

/// Smallest multiple of 1/4 whose square is at least n2.
inline Rational quarter_ceil_sqrt(const Rational& n2) {
  Rational s(static_cast<long>(std::ceil(std::sqrt(n2.get_d()) * 4)), 4);
  s.canonicalize();
  while (s * s < n2) s += Rational(1, 4);
  return s;
}

/// Half of the largest multiple of 1/4 whose square is below n2 (n2 > 0).
inline Rational below_sqrt(const Rational& n2) {
  Rational s(static_cast<long>(std::floor(std::sqrt(n2.get_d()) * 4)), 4);
  s.canonicalize();
  while (s > 0 && s * s >= n2) s -= Rational(1, 4);
  if (s < 0) s = 0;
  return s / 2;
}

/// Helly instance on `space` with n functionals on K^dim. Null atoms receive
/// unconstrained random data. For infeasible tags `plant_count` positive
/// atoms are spoiled; all other positive atoms stay feasible.
template <Field K>
GeneratedHelly<K> gen_helly(Rng& rng, const SpacePtr& space, std::size_t n, std::size_t dim, HellyTag tag,
                            std::size_t plant_count = 1) {
  using R = RealOf<K>;
  const std::size_t atoms = space->size();
  const std::size_t max_rank = std::min(n, dim);
  std::vector<bool> plant(atoms, false);
  if (tag != HellyTag::feasible) {
    std::vector<std::size_t> positive;
    for (std::size_t a = 0; a < atoms; ++a)
      if (!space->is_null(a)) positive.push_back(a);
    std::shuffle(positive.begin(), positive.end(), rng.engine());
    for (std::size_t i = 0; i < std::max<std::size_t>(1, std::min(plant_count, positive.size())); ++i)
      plant[positive[i]] = true;
  }

  std::vector<Mat<K>> rows;
  std::vector<std::size_t> ranks;
  std::vector<std::vector<K>> xi(n, std::vector<K>(atoms));
  std::vector<R> beta(atoms);
  for (std::size_t a = 0; a < atoms; ++a) {
    std::size_t lo = 0, hi = max_rank;
    if (plant[a] && tag == HellyTag::inconsistent) hi = std::min(hi, n - 1);
    if (plant[a] && tag == HellyTag::over_budget) lo = 1;
    std::size_t r = static_cast<std::size_t>(rng.uniform(int(lo), int(hi)));
    Mat<K> f = rank_profile_matrix<K>(rng, n, dim, r);
    Vec<K> target;
    R b;
    if (space->is_null(a) && rng.coin(60)) {
      target = rng.vec<K>(n);
      b = FieldTraits<R>::from_rational(Rational(rng.uniform(0, 2)));
    } else if (plant[a] && tag == HellyTag::inconsistent) {
      // conj-transpose nullspace = complement of the range of f
      Mat<K> fh(dim, Vec<K>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < dim; ++j) fh[j][i] = FieldTraits<K>::conj(f[i][j]);
      Mat<K> left = fiber_nullspace(fh, n);
      Vec<K> off(n, FieldTraits<K>::zero());
      while (is_zero_vec(off)) {
        for (const auto& v : left) {
          K c = rng.value<K>(2);
          for (std::size_t i = 0; i < n; ++i) off[i] = off[i] + c * v[i];
        }
      }
      target = mat_vec(f, rng.vec<K>(dim));
      for (std::size_t i = 0; i < n; ++i) target[i] = target[i] + off[i];
      b = FieldTraits<R>::from_rational(Rational(rng.uniform(1, 50)));
    } else {
      Vec<K> x = rng.vec<K>(dim);
      target = mat_vec(f, x);
      if (plant[a]) {
        while (is_zero_vec(target)) target = mat_vec(f, rng.vec<K>(dim));
        auto sol = fiber_minnorm_solve(f, target, dim);
        b = FieldTraits<R>::from_rational(below_sqrt(to_rational(norm2(*sol))));
      } else {
        b = FieldTraits<R>::from_rational(quarter_ceil_sqrt(to_rational(norm2(x))) + Rational(rng.uniform(0, 2), 2));
      }
    }
    for (std::size_t i = 0; i < n; ++i) xi[i][a] = target[i];
    beta[a] = b;
    rows.push_back(std::move(f));
    ranks.push_back(r);
  }

  std::vector<RandomFunctional<K>> fs;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<detail::Row<K>> fibers;
    for (std::size_t a = 0; a < atoms; ++a) fibers.push_back(detail::conj_row(rows[a][k]));
    fs.emplace_back(L0Vector<K>::from_fibers(space, dim, fibers));
  }
  std::vector<L0Scalar<K>> targets;
  for (auto& t : xi) targets.emplace_back(space, std::move(t));
  std::vector<R> eps(atoms);
  for (auto& e : eps) e = FieldTraits<R>::from_rational(Rational(1, rng.uniform(2, 10)));
  HellyInstance<K> inst{std::move(fs), std::move(targets), L0Scalar<R>(space, std::move(beta)),
                        L0Scalar<R>(space, std::move(eps))};
  return {std::move(inst), std::move(rows), std::move(ranks), Event(space, std::move(plant))};
}

/// Fiber matrix of an instance at one atom, read back through the public API.
template <Field K>
Mat<K> fiber_rows(const HellyInstance<K>& inst, std::size_t atom) {
  Mat<K> m;
  for (const auto& f : inst.functionals) m.push_back(f.fiber_row(atom));
  return m;
}

}  // namespace l0::oracle
