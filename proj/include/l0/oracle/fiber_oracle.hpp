// Textbook linear algebra on one fiber, written independently of the main
// algorithms: elimination uses complete pivoting (largest modulus over the
// whole remaining block) instead of row-order pivots.
#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "l0/field.hpp"

namespace l0::oracle {

template <Field K>
using Vec = std::vector<K>;

template <Field K>
using Mat = std::vector<Vec<K>>;  // row-major

/// Echelon data of a matrix after complete pivoting.
template <Field K>
struct Echelon {
  Mat<K> reduced;                  // rows scaled to 1 on pivots, zero above and below
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> row_of;  // original row index of each echelon row
  std::size_t rank() const { return pivot_cols.size(); }
};

template <Field K>
bool negligible(const K& x, double tol) {
  if constexpr (FieldTraits<K>::exact) {
    return FieldTraits<K>::is_zero(x, 0.0);
  } else {
    return std::sqrt(FieldTraits<K>::to_double(FieldTraits<K>::abs2(x))) <= tol;
  }
}

/// Reduced row echelon form with complete pivoting. Optionally carries an
/// augmented right-hand side through the same row operations.
template <Field K>
Echelon<K> echelon(Mat<K> a, std::size_t cols, double tol, Vec<K>* rhs = nullptr) {
  using T = FieldTraits<K>;
  const std::size_t rows = a.size();
  std::vector<std::size_t> origin(rows);
  for (std::size_t i = 0; i < rows; ++i) origin[i] = i;
  std::vector<bool> used_col(cols, false);
  Echelon<K> out;
  double scale = 0;
  for (const auto& r : a)
    for (const K& x : r) scale = std::max(scale, std::sqrt(T::to_double(T::abs2(x))));
  const double thresh = tol * std::max(1.0, scale);

  std::size_t top = 0;
  while (top < rows) {
    std::size_t pr = rows, pc = cols;
    RealOf<K> best = FieldTraits<RealOf<K>>::zero();
    for (std::size_t i = top; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        if (used_col[j]) continue;
        RealOf<K> m = T::abs2(a[i][j]);
        if (m > best) {
          best = m;
          pr = i;
          pc = j;
        }
      }
    if (pr == rows || negligible<K>(a[pr][pc], thresh)) break;
    std::swap(a[top], a[pr]);
    std::swap(origin[top], origin[pr]);
    if (rhs) std::swap((*rhs)[top], (*rhs)[pr]);
    K inv = T::one() / a[top][pc];
    for (auto& x : a[top]) x = x * inv;
    if (rhs) (*rhs)[top] = (*rhs)[top] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == top) continue;
      K f = a[i][pc];
      if (T::is_zero(f, 0.0)) continue;
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = a[i][j] - f * a[top][j];
      if (rhs) (*rhs)[i] = (*rhs)[i] - f * (*rhs)[top];
    }
    used_col[pc] = true;
    out.pivot_cols.push_back(pc);
    ++top;
  }
  a.resize(top);
  origin.resize(top);
  out.reduced = std::move(a);
  out.row_of = std::move(origin);
  return out;
}

template <Field K>
std::size_t fiber_rank(const Mat<K>& a, std::size_t cols, double tol = 1e-9) {
  return echelon(a, cols, tol).rank();
}

/// Basis of {x : a x = 0}.
template <Field K>
Mat<K> fiber_nullspace(const Mat<K>& a, std::size_t cols, double tol = 1e-9) {
  using T = FieldTraits<K>;
  auto e = echelon(a, cols, tol);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  Mat<K> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec<K> v(cols, T::zero());
    v[f] = T::one();
    for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivot_cols[i]] = -e.reduced[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// sum_j a_j conj(b_j).
template <Field K>
K herm(const Vec<K>& a, const Vec<K>& b) {
  K s = FieldTraits<K>::zero();
  for (std::size_t j = 0; j < a.size(); ++j) s = s + a[j] * FieldTraits<K>::conj(b[j]);
  return s;
}

template <Field K>
RealOf<K> norm2(const Vec<K>& a) {
  RealOf<K> s = FieldTraits<RealOf<K>>::zero();
  for (const K& x : a) s = s + FieldTraits<K>::abs2(x);
  return s;
}

template <Field K>
Vec<K> mat_vec(const Mat<K>& a, const Vec<K>& x) {
  Vec<K> out;
  for (const auto& r : a) {
    K s = FieldTraits<K>::zero();
    for (std::size_t j = 0; j < x.size(); ++j) s = s + r[j] * x[j];
    out.push_back(s);
  }
  return out;
}

/// Minimal-norm solution of a x = b, or nullopt when inconsistent. A particular
/// solution from the echelon form is projected off the nullspace using an
/// orthogonalised nullspace basis.
template <Field K>
std::optional<Vec<K>> fiber_minnorm_solve(const Mat<K>& a, const Vec<K>& b, std::size_t cols, double tol = 1e-9) {
  using T = FieldTraits<K>;
  Vec<K> rhs = b;
  auto e = echelon(a, cols, tol, &rhs);
  // rows below the rank were dropped from `reduced`; rhs keeps them
  for (std::size_t i = e.rank(); i < rhs.size(); ++i) {
    double scale = 1;
    for (const K& x : b) scale = std::max(scale, std::sqrt(T::to_double(T::abs2(x))));
    if (!negligible<K>(rhs[i], tol * scale)) return std::nullopt;
  }
  Vec<K> x(cols, T::zero());
  for (std::size_t i = 0; i < e.rank(); ++i) x[e.pivot_cols[i]] = rhs[i];

  Mat<K> ortho;
  for (auto v : fiber_nullspace(a, cols, tol)) {
    for (const auto& q : ortho) {
      K c = herm(v, q) / FieldTraits<K>::from_real(norm2(q));
      for (std::size_t j = 0; j < cols; ++j) v[j] = v[j] - c * q[j];
    }
    ortho.push_back(std::move(v));
  }
  for (const auto& q : ortho) {
    K c = herm(x, q) / FieldTraits<K>::from_real(norm2(q));
    for (std::size_t j = 0; j < cols; ++j) x[j] = x[j] - c * q[j];
  }
  return x;
}

/// Classical Helly test on one fiber: the rows of `f` are the maps
/// x -> f_k x on K^cols, `xi` the targets, `beta` the budget.
template <Field K>
struct FiberHelly {
  bool consistent = false;
  std::optional<Vec<K>> minnorm;
  RealOf<K> minnorm2{};
  bool feasible = false;
};

template <class R>
bool sq_leq(const R& n2, const R& bound, double tol) {
  if constexpr (FieldTraits<R>::exact) {
    return n2 <= bound * bound;
  } else {
    return std::sqrt(std::max(n2, 0.0)) <= bound + tol * std::max(1.0, bound);
  }
}

template <Field K>
FiberHelly<K> fiber_helly(const Mat<K>& f, const Vec<K>& xi, const RealOf<K>& beta, std::size_t cols,
                          double tol = 1e-9) {
  FiberHelly<K> out;
  out.minnorm = fiber_minnorm_solve(f, xi, cols, tol);
  out.consistent = out.minnorm.has_value();
  if (out.consistent) {
    out.minnorm2 = norm2(*out.minnorm);
    out.feasible = sq_leq(out.minnorm2, beta, tol);
  }
  return out;
}

/// |sum lambda_k xi_k| <= beta ||sum lambda_k f_k||* at one fiber, where the
/// dual norm of a row functional is the Euclidean norm of the row.
template <Field K>
bool condition_holds(const Mat<K>& f, const Vec<K>& xi, const RealOf<K>& beta, const Vec<K>& lambda, std::size_t cols,
                     double tol = 1e-9) {
  using T = FieldTraits<K>;
  K lhs = T::zero();
  Vec<K> row(cols, T::zero());
  for (std::size_t k = 0; k < f.size(); ++k) {
    lhs = lhs + lambda[k] * xi[k];
    for (std::size_t j = 0; j < cols; ++j) row[j] = row[j] + lambda[k] * f[k][j];
  }
  RealOf<K> l2 = T::abs2(lhs);
  RealOf<K> r2 = norm2(row);
  if constexpr (T::exact) {
    return l2 <= beta * beta * r2;
  } else {
    double l = std::sqrt(l2), r = beta * std::sqrt(r2);
    return l <= r + tol * std::max(1.0, r);
  }
}

/// Brute-force version of the condition over a rational grid of lambdas
/// ({-2,-1,-1/2,0,1/2,1,2}^n, real and, for complex fields, imaginary parts).
template <Field K>
bool condition_on_grid(const Mat<K>& f, const Vec<K>& xi, const RealOf<K>& beta, std::size_t cols, double tol = 1e-9) {
  using T = FieldTraits<K>;
  std::vector<K> grid;
  const int nums[] = {-2, -1, 0, 1, 2};
  for (int a : nums) grid.push_back(T::from_rational(Rational(a)));
  grid.push_back(T::from_rational(Rational(1, 2)));
  grid.push_back(T::from_rational(Rational(-1, 2)));
  if constexpr (T::complex) {
    grid.push_back(K{Rational(0), Rational(1)});
    grid.push_back(K{Rational(1), Rational(-1)});
  }
  const std::size_t n = f.size();
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    Vec<K> lambda;
    for (std::size_t k = 0; k < n; ++k) lambda.push_back(grid[idx[k]]);
    if (!condition_holds(f, xi, beta, lambda, cols, tol)) return false;
    std::size_t k = 0;
    while (k < n && ++idx[k] == grid.size()) idx[k++] = 0;
    if (k == n) return true;
  }
}

}  // namespace l0::oracle
