// Small dense linear algebra on a single fiber (one atom's slice of the data).
//
// Rows are kept in input order and pivots are taken from the first usable
// row, so results are deterministic and match the elimination order used by
// the stratified algorithms. Float-mode rank decisions go through a singular
// value threshold relative to the largest singular value.
#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <vector>

#include "l0/field.hpp"

namespace l0::detail {

template <Field K>
using Row = std::vector<K>;

template <Field K>
using Dense = std::vector<Row<K>>;  // row-major, rows may be empty only when cols == 0

template <Field K>
bool is_zero_row(const Row<K>& r, double tol) {
  for (const K& x : r)
    if (!FieldTraits<K>::is_zero(x, tol)) return false;
  return true;
}

template <Field K>
K dot_plain(const Row<K>& a, const Row<K>& b) {
  K s = FieldTraits<K>::zero();
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

/// Hermitian inner product sum a_j * conj(b_j).
template <Field K>
K dot_herm(const Row<K>& a, const Row<K>& b) {
  K s = FieldTraits<K>::zero();
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * FieldTraits<K>::conj(b[j]);
  return s;
}

template <Field K>
Row<K> conj_row(const Row<K>& a) {
  Row<K> out;
  out.reserve(a.size());
  for (const K& x : a) out.push_back(FieldTraits<K>::conj(x));
  return out;
}

/// Rank of a double matrix via singular values, threshold tol * sigma_max.
inline std::size_t svd_rank(const Dense<double>& rows, std::size_t cols, double tol) {
  if (rows.empty() || cols == 0) return 0;
  Eigen::MatrixXd m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) <= tol) return 0;
  std::size_t r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s(k) > tol * s(0)) ++r;
  return r;
}

/// Incremental independence test over rows offered in order. Exact fields keep
/// an echelon form; float mode re-tests the rank of the accepted rows.
template <Field K>
class IndependentRows {
 public:
  IndependentRows(std::size_t cols, double tol) : cols_(cols), tol_(tol) {}

  /// Accepts the row iff it is independent of the rows accepted so far.
  bool offer(const Row<K>& row) {
    if constexpr (FieldTraits<K>::exact) {
      Row<K> r = row;
      for (std::size_t p = 0; p < echelon_.size(); ++p) {
        const K& c = r[pivots_[p]];
        if (FieldTraits<K>::is_zero(c, tol_)) continue;
        K factor = c / echelon_[p][pivots_[p]];
        for (std::size_t j = 0; j < cols_; ++j) r[j] -= factor * echelon_[p][j];
      }
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!FieldTraits<K>::is_zero(r[j], tol_)) {
          echelon_.push_back(std::move(r));
          pivots_.push_back(j);
          accepted_.push_back(row);
          return true;
        }
      }
      return false;
    } else {
      Dense<K> trial = accepted_;
      trial.push_back(row);
      if (svd_rank(trial, cols_, tol_) > accepted_.size()) {
        accepted_.push_back(row);
        return true;
      }
      return false;
    }
  }

  std::size_t rank() const { return accepted_.size(); }
  const Dense<K>& accepted() const { return accepted_; }

 private:
  std::size_t cols_;
  double tol_;
  Dense<K> echelon_;
  std::vector<std::size_t> pivots_;
  Dense<K> accepted_;
};

template <Field K>
std::size_t rank_of(const Dense<K>& rows, std::size_t cols, double tol) {
  IndependentRows<K> ind(cols, tol);
  for (const auto& r : rows) ind.offer(r);
  return ind.rank();
}

/// Solves the square system a * x = b by Gauss-Jordan elimination.
/// Returns nullopt when a is singular (under the field's zero test).
template <Field K>
std::optional<Row<K>> solve_square(Dense<K> a, Row<K> b, double tol) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    if constexpr (FieldTraits<K>::exact) {
      for (std::size_t r = c; r < n; ++r)
        if (!FieldTraits<K>::is_zero(a[r][c], tol)) {
          piv = r;
          break;
        }
    } else {
      double best = 0;
      for (std::size_t r = c; r < n; ++r)
        if (std::abs(a[r][c]) > best) {
          best = std::abs(a[r][c]);
          piv = r;
        }
      if (best <= tol) piv = n;
    }
    if (piv == n) return std::nullopt;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    K inv = FieldTraits<K>::one() / a[c][c];
    for (std::size_t j = 0; j < n; ++j) a[c][j] *= inv;
    b[c] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || FieldTraits<K>::is_zero(a[r][c], 0.0)) continue;
      K f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  return b;
}

/// Gram matrix G G^H of the given rows.
template <Field K>
Dense<K> gram(const Dense<K>& rows) {
  const std::size_t n = rows.size();
  Dense<K> g(n, Row<K>(n, FieldTraits<K>::zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = dot_herm(rows[i], rows[j]);
  return g;
}

/// Minimal-norm solution of rows * x = rhs for rows of full row rank:
/// x = rows^H (rows rows^H)^-1 rhs. Also returns the multiplier w.
template <Field K>
std::optional<std::pair<Row<K>, Row<K>>> minnorm_full_row_rank(const Dense<K>& rows, const Row<K>& rhs,
                                                               std::size_t cols, double tol) {
  auto w = solve_square(gram(rows), rhs, tol);
  if (!w) return std::nullopt;
  Row<K> x(cols, FieldTraits<K>::zero());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) x[j] += FieldTraits<K>::conj(rows[i][j]) * (*w)[i];
  return std::make_pair(std::move(x), std::move(*w));
}

/// Coefficients c with sum_i c_i basis_i = y, when y is in the span of the
/// (independent) basis rows.
template <Field K>
std::optional<Row<K>> coordinates(const Dense<K>& basis, const Row<K>& y, double tol) {
  const std::size_t n = basis.size();
  if (n == 0) return is_zero_row(y, tol) ? std::optional<Row<K>>(Row<K>{}) : std::nullopt;
  // (conj(B) B^T) c = conj(B) y
  Dense<K> a(n, Row<K>(n, FieldTraits<K>::zero()));
  Row<K> b(n, FieldTraits<K>::zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = dot_herm(basis[j], basis[i]);
    b[i] = dot_herm(y, basis[i]);
  }
  auto c = solve_square(std::move(a), std::move(b), tol);
  if (!c) return std::nullopt;
  Row<K> back(y.size(), FieldTraits<K>::zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < y.size(); ++j) back[j] += (*c)[i] * basis[i][j];
  for (std::size_t j = 0; j < y.size(); ++j) {
    K diff = back[j] - y[j];
    if constexpr (FieldTraits<K>::exact) {
      if (!FieldTraits<K>::is_zero(diff, tol)) return std::nullopt;
    } else {
      if (std::abs(diff) > tol * (1.0 + std::abs(y[j]))) return std::nullopt;
    }
  }
  return c;
}

}  // namespace l0::detail
