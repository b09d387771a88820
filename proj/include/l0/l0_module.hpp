// The free module L0(F,K^n) with its random inner product and L0-norm, and
// finitely generated submodules presented by generators.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "l0/detail/fiber.hpp"
#include "l0/error.hpp"
#include "l0/l0_scalar.hpp"

namespace l0 {

template <Field K>
class L0Vector {
 public:
  using Traits = FieldTraits<K>;

  L0Vector(SpacePtr space, std::vector<L0Scalar<K>> coords) : space_(std::move(space)), coords_(std::move(coords)) {
    for (const auto& c : coords_) require_same_space(space_, c.space(), "L0Vector");
  }

  static L0Vector zero(SpacePtr space, std::size_t dim) {
    return L0Vector(space, std::vector<L0Scalar<K>>(dim, L0Scalar<K>::zero(space)));
  }

  /// Builds a vector from per-atom fibers (each of length dim).
  static L0Vector from_fibers(SpacePtr space, std::size_t dim, const std::vector<detail::Row<K>>& fibers) {
    if (fibers.size() != space->size()) throw DimensionMismatch("one fiber per atom expected");
    std::vector<L0Scalar<K>> coords;
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<K> v;
      for (const auto& f : fibers) {
        if (f.size() != dim) throw DimensionMismatch("fiber length differs from dimension");
        v.push_back(f[i]);
      }
      coords.emplace_back(space, std::move(v));
    }
    return L0Vector(std::move(space), std::move(coords));
  }

  /// The same K^n vector on every atom.
  static L0Vector constant(SpacePtr space, const detail::Row<K>& c) {
    std::vector<L0Scalar<K>> coords;
    for (const K& x : c) coords.push_back(L0Scalar<K>::constant(space, x));
    return L0Vector(std::move(space), std::move(coords));
  }

  const SpacePtr& space() const { return space_; }
  std::size_t dim() const { return coords_.size(); }
  const L0Scalar<K>& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<L0Scalar<K>>& coords() const { return coords_; }

  detail::Row<K> fiber(std::size_t atom) const {
    detail::Row<K> r;
    r.reserve(coords_.size());
    for (const auto& c : coords_) r.push_back(c[atom]);
    return r;
  }

  friend L0Vector operator+(const L0Vector& a, const L0Vector& b) {
    require_same_shape(a, b, "vector add");
    std::vector<L0Scalar<K>> c;
    for (std::size_t i = 0; i < a.dim(); ++i) c.push_back(a[i] + b[i]);
    return L0Vector(a.space_, std::move(c));
  }
  friend L0Vector operator-(const L0Vector& a, const L0Vector& b) {
    require_same_shape(a, b, "vector sub");
    std::vector<L0Scalar<K>> c;
    for (std::size_t i = 0; i < a.dim(); ++i) c.push_back(a[i] - b[i]);
    return L0Vector(a.space_, std::move(c));
  }
  /// Module multiplication by an L0 scalar.
  friend L0Vector operator*(const L0Scalar<K>& xi, const L0Vector& x) {
    require_same_space(xi.space(), x.space_, "module multiplication");
    std::vector<L0Scalar<K>> c;
    for (const auto& coord : x.coords_) c.push_back(xi * coord);
    return L0Vector(x.space_, std::move(c));
  }

  L0Vector mask(const Event& a) const {
    std::vector<L0Scalar<K>> c;
    for (const auto& coord : coords_) c.push_back(coord.mask(a));
    return L0Vector(space_, std::move(c));
  }

  L0Vector conj() const {
    std::vector<L0Scalar<K>> c;
    for (const auto& coord : coords_) c.push_back(coord.conj());
    return L0Vector(space_, std::move(c));
  }

  /// Atoms where some coordinate is nonzero.
  Event support() const {
    std::vector<bool> m(space_->size(), false);
    for (const auto& coord : coords_)
      for (std::size_t k = 0; k < m.size(); ++k)
        if (!coord.is_zero_at(k)) m[k] = true;
    return Event(space_, std::move(m));
  }

  friend void require_same_shape(const L0Vector& a, const L0Vector& b, const char* op) {
    require_same_space(a.space_, b.space_, op);
    if (a.dim() != b.dim())
      throw DimensionMismatch(std::string(op) + ": " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }

 private:
  SpacePtr space_;
  std::vector<L0Scalar<K>> coords_;
};

template <Field K>
bool equal_as(const L0Vector<K>& a, const L0Vector<K>& b) {
  require_same_shape(a, b, "equal_as");
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!equal_as(a[i], b[i])) return false;
  return true;
}

/// Finitely generated submodule {sum xi_i x_i} of L0(F,K^n).
template <Field K>
class SubmoduleSpec {
 public:
  SubmoduleSpec(std::size_t dim, std::vector<L0Vector<K>> generators)
      : dim_(dim), generators_(std::move(generators)) {
    if (generators_.empty()) throw InvalidArgument("submodule needs at least one generator (possibly zero)");
    for (const auto& g : generators_) {
      require_same_space(generators_.front().space(), g.space(), "SubmoduleSpec");
      if (g.dim() != dim_) throw DimensionMismatch("generator dimension differs from ambient dimension");
    }
  }

  /// The standard generators of the full module L0(F,K^n).
  static SubmoduleSpec full(SpacePtr space, std::size_t dim) {
    std::vector<L0Vector<K>> gens;
    for (std::size_t i = 0; i < dim; ++i) {
      detail::Row<K> e(dim, FieldTraits<K>::zero());
      e[i] = FieldTraits<K>::one();
      gens.push_back(L0Vector<K>::constant(space, e));
    }
    return SubmoduleSpec(dim, std::move(gens));
  }

  std::size_t dim() const { return dim_; }
  const SpacePtr& space() const { return generators_.front().space(); }
  const std::vector<L0Vector<K>>& generators() const { return generators_; }

  /// Generator fibers at one atom, as rows.
  detail::Dense<K> fiber(std::size_t atom) const {
    detail::Dense<K> rows;
    for (const auto& g : generators_) rows.push_back(g.fiber(atom));
    return rows;
  }

 private:
  std::size_t dim_;
  std::vector<L0Vector<K>> generators_;
};

/// <x, y> = sum_i x_i conj(y_i), per atom.
template <Field K>
L0Scalar<K> inner_product(const L0Vector<K>& x, const L0Vector<K>& y) {
  require_same_shape(x, y, "inner_product");
  L0Scalar<K> s = L0Scalar<K>::zero(x.space());
  for (std::size_t i = 0; i < x.dim(); ++i) s = s + x[i] * y[i].conj();
  return s;
}

/// A nonnegative random variable sqrt(q) held through its square q, so that
/// Euclidean norms stay exact over the rationals.
template <class R>
class NormValue {
 public:
  explicit NormValue(L0Scalar<R> squared) : squared_(std::move(squared)) {}

  const L0Scalar<R>& squared() const { return squared_; }
  const SpacePtr& space() const { return squared_.space(); }
  std::size_t size() const { return squared_.size(); }

  double to_double(std::size_t k) const { return std::sqrt(FieldTraits<R>::to_double(squared_[k])); }

  /// The exact value at atom k when it is rational (or always, in float mode).
  std::optional<R> exact(std::size_t k) const {
    if constexpr (FieldTraits<R>::exact) {
      R root;
      if (rational_sqrt(squared_[k], root)) return root;
      return std::nullopt;
    } else {
      return std::sqrt(squared_[k]);
    }
  }

  /// |xi| * this, for real or complex xi.
  template <Field K>
  NormValue scaled_by(const L0Scalar<K>& xi) const {
    return NormValue(xi.abs2() * squared_);
  }

  /// Rendering: exact value when rational, else "sqrt(q)".
  std::string format(std::size_t k) const {
    if (auto v = exact(k)) return FieldTraits<R>::format(*v);
    return "sqrt(" + FieldTraits<R>::format(squared_[k]) + ")";
  }

 private:
  L0Scalar<R> squared_;
};

/// this <= bound on every positive-probability atom (bound must be >= 0 there).
template <class R>
bool leq_as(const NormValue<R>& n, const L0Scalar<R>& bound) {
  require_same_space(n.space(), bound.space(), "norm comparison");
  using Order = RealOrder<R>;
  const double tol = bound.tolerance();
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (n.space()->is_null(k)) continue;
    if (Order::sign(bound[k], tol) < 0) return false;
    if constexpr (FieldTraits<R>::exact) {
      if (n.squared()[k] > bound[k] * bound[k]) return false;
    } else {
      if (std::sqrt(std::max(n.squared()[k], 0.0)) > bound[k] + tol * std::max(1.0, bound[k])) return false;
    }
  }
  return true;
}

/// Per-atom test sqrt(a) <= sqrt(b) + sqrt(c); exact over the rationals.
template <class R>
bool root_leq_sum(const R& a, const R& b, const R& c, double tol) {
  if constexpr (FieldTraits<R>::exact) {
    R d = a - b - c;  // need d <= 2 sqrt(bc)
    if (d <= 0) return true;
    return d * d <= 4 * b * c;
  } else {
    return std::sqrt(a) <= std::sqrt(b) + std::sqrt(c) + tol;
  }
}

/// Euclidean L0-norm ||x|| = sqrt(<x,x>).
template <Field K>
NormValue<RealOf<K>> norm(const L0Vector<K>& x) {
  L0Scalar<RealOf<K>> s = L0Scalar<RealOf<K>>::zero(x.space());
  for (std::size_t i = 0; i < x.dim(); ++i) s = s + x[i].abs2();
  return NormValue<RealOf<K>>(std::move(s));
}

/// sum_n I_{A_n} x_n over a partition {A_n}.
template <Field K>
L0Vector<K> concatenate(std::span<const std::pair<Event, L0Vector<K>>> parts) {
  if (parts.empty()) throw InvalidArgument("concatenate: no parts");
  std::vector<Event> events;
  for (const auto& [e, x] : parts) {
    events.push_back(e);
    require_same_shape(parts.front().second, x, "concatenate");
    require_same_space(e.space(), x.space(), "concatenate");
  }
  if (!partition_validate(events)) throw InvalidArgument("concatenate: events do not form a partition");
  L0Vector<K> out = L0Vector<K>::zero(parts.front().second.space(), parts.front().second.dim());
  for (const auto& [e, x] : parts) out = out + x.mask(e);
  return out;
}

/// Largest event A with I_A y in I_A M: atoms where y's fiber lies in the span
/// of the generator fibers.
template <Field K>
Event membership(const SubmoduleSpec<K>& m, const L0Vector<K>& y) {
  require_same_space(m.space(), y.space(), "membership");
  if (y.dim() != m.dim()) throw DimensionMismatch("membership: vector and submodule dimensions differ");
  const double tol = m.space()->tolerance();
  std::vector<bool> in(m.space()->size());
  for (std::size_t k = 0; k < in.size(); ++k) {
    auto rows = m.fiber(k);
    std::size_t r = detail::rank_of(rows, m.dim(), tol);
    rows.push_back(y.fiber(k));
    in[k] = detail::rank_of(rows, m.dim(), tol) == r;
  }
  return Event(m.space(), std::move(in));
}

template <Field K>
std::string format_vector(const L0Vector<K>& x) {
  std::string s = "[";
  for (std::size_t k = 0; k < x.space()->size(); ++k) {
    if (k) s += ", ";
    s += "(";
    auto f = x.fiber(k);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) s += ",";
      s += FieldTraits<K>::format(f[i]);
    }
    s += ")";
  }
  return s + "]";
}

}  // namespace l0
