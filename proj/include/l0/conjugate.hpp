// Random conjugate space of L0(F,K^n). Every a.s. bounded random linear
// functional is stored through its Riesz vector y0: f(x) = <x, y0>.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "l0/l0_module.hpp"
#include "l0/stratification.hpp"

namespace l0 {

template <Field K>
class RandomFunctional {
 public:
  explicit RandomFunctional(L0Vector<K> riesz) : riesz_(std::move(riesz)) {}

  const L0Vector<K>& riesz_vector() const { return riesz_; }
  std::size_t dim() const { return riesz_.dim(); }
  const SpacePtr& space() const { return riesz_.space(); }

  /// Row of the fiber map x -> f(x) at one atom: conj(y0(omega)).
  detail::Row<K> fiber_row(std::size_t atom) const { return detail::conj_row(riesz_.fiber(atom)); }

  friend RandomFunctional operator+(const RandomFunctional& f, const RandomFunctional& g) {
    return RandomFunctional(f.riesz_ + g.riesz_);
  }
  friend RandomFunctional operator-(const RandomFunctional& f, const RandomFunctional& g) {
    return RandomFunctional(f.riesz_ - g.riesz_);
  }
  /// (xi . f)(x) = xi f(x); the Riesz vector picks up conj(xi).
  friend RandomFunctional operator*(const L0Scalar<K>& xi, const RandomFunctional& f) {
    return RandomFunctional(xi.conj() * f.riesz_);
  }

 private:
  L0Vector<K> riesz_;
};

template <Field K>
L0Scalar<K> apply(const RandomFunctional<K>& f, const L0Vector<K>& x) {
  if (f.dim() != x.dim()) throw DimensionMismatch("apply: functional and vector dimensions differ");
  return inner_product(x, f.riesz_vector());
}

/// ||f||* = ||y0|| per atom.
template <Field K>
NormValue<RealOf<K>> dual_norm(const RandomFunctional<K>& f) {
  return norm(f.riesz_vector());
}

/// sum_k lambda_k f_k.
template <Field K>
RandomFunctional<K> combine(std::span<const L0Scalar<K>> lambda, std::span<const RandomFunctional<K>> fs) {
  if (lambda.size() != fs.size() || fs.empty()) throw DimensionMismatch("combine: coefficient count");
  RandomFunctional<K> acc = lambda[0] * fs[0];
  for (std::size_t k = 1; k < fs.size(); ++k) acc = acc + lambda[k] * fs[k];
  return acc;
}

/// The submodule of L0(F,K^n) spanned by the Riesz vectors. It is the
/// conjugate image of span{f_k}, so both have the same stratification.
template <Field K>
SubmoduleSpec<K> riesz_span(std::span<const RandomFunctional<K>> fs) {
  if (fs.empty()) throw InvalidArgument("riesz_span: no functionals");
  std::vector<L0Vector<K>> gens;
  for (const auto& f : fs) gens.push_back(f.riesz_vector());
  return SubmoduleSpec<K>(fs.front().dim(), std::move(gens));
}

/// f_1..f_n are L0-independent iff span{f_k} is free of rank n on Omega a.s.
template <Field K>
bool l0_independent(std::span<const RandomFunctional<K>> fs) {
  auto s = stratify(riesz_span(fs));
  const std::size_t n = fs.size();
  if (n > s.max_rank()) return false;
  return s.parts[n].complement().is_null();
}

}  // namespace l0
