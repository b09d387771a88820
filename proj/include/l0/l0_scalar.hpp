// The algebra L0(F,K): random variables on a finite atomic space, stored as
// one K-value per atom. Equality and order are almost-sure notions.
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "l0/error.hpp"
#include "l0/field.hpp"
#include "l0/prob_space.hpp"

namespace l0 {

template <Field K>
class L0Scalar {
 public:
  using Traits = FieldTraits<K>;
  using Real = RealOf<K>;

  L0Scalar(SpacePtr space, std::vector<K> values) : space_(std::move(space)), values_(std::move(values)) {
    if (!space_) throw InvalidArgument("L0Scalar without a space");
    if (values_.size() != space_->size())
      throw DimensionMismatch("scalar has " + std::to_string(values_.size()) + " values for " +
                              std::to_string(space_->size()) + " atoms");
  }

  static L0Scalar constant(SpacePtr space, const K& c) {
    auto n = space->size();
    return L0Scalar(std::move(space), std::vector<K>(n, c));
  }
  static L0Scalar zero(SpacePtr space) { return constant(std::move(space), Traits::zero()); }
  static L0Scalar one(SpacePtr space) { return constant(std::move(space), Traits::one()); }
  /// The idempotent I_A.
  static L0Scalar indicator(const Event& a) {
    std::vector<K> v(a.size(), Traits::zero());
    for (std::size_t k = 0; k < v.size(); ++k)
      if (a.contains(k)) v[k] = Traits::one();
    return L0Scalar(a.space(), std::move(v));
  }

  const SpacePtr& space() const { return space_; }
  std::size_t size() const { return values_.size(); }
  const K& operator[](std::size_t k) const { return values_[k]; }
  const std::vector<K>& values() const { return values_; }
  double tolerance() const { return space_->tolerance(); }

  friend L0Scalar operator+(const L0Scalar& a, const L0Scalar& b) {
    return zip(a, b, "add", [](const K& x, const K& y) { return K(x + y); });
  }
  friend L0Scalar operator-(const L0Scalar& a, const L0Scalar& b) {
    return zip(a, b, "sub", [](const K& x, const K& y) { return K(x - y); });
  }
  friend L0Scalar operator*(const L0Scalar& a, const L0Scalar& b) {
    return zip(a, b, "mul", [](const K& x, const K& y) { return K(x * y); });
  }
  friend L0Scalar operator-(const L0Scalar& a) {
    return a.map([](const K& x) { return K(-x); });
  }
  /// Multiplication by a constant of K.
  friend L0Scalar operator*(const K& c, const L0Scalar& a) {
    return a.map([&](const K& x) { return K(c * x); });
  }

  /// Pointwise complex conjugate.
  L0Scalar conj() const {
    return map([](const K& x) { return Traits::conj(x); });
  }

  /// |xi|^2 as a real random variable.
  L0Scalar<Real> abs2() const {
    std::vector<Real> v;
    v.reserve(values_.size());
    for (const K& x : values_) v.push_back(Traits::abs2(x));
    return L0Scalar<Real>(space_, std::move(v));
  }

  /// Multiplication by the idempotent I_A.
  L0Scalar mask(const Event& a) const {
    require_same_space(space_, a.space(), "mask");
    std::vector<K> v = values_;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!a.contains(k)) v[k] = Traits::zero();
    return L0Scalar(space_, std::move(v));
  }

  /// Same values with atom k replaced.
  L0Scalar with_value(std::size_t k, K value) const {
    std::vector<K> v = values_;
    v.at(k) = std::move(value);
    return L0Scalar(space_, std::move(v));
  }

  bool is_zero_at(std::size_t k) const { return Traits::is_zero(values_[k], tolerance()); }

  template <class F>
  L0Scalar map(F&& f) const {
    std::vector<K> v;
    v.reserve(values_.size());
    for (const K& x : values_) v.push_back(f(x));
    return L0Scalar(space_, std::move(v));
  }

 private:
  template <class F>
  static L0Scalar zip(const L0Scalar& a, const L0Scalar& b, const char* op, F&& f) {
    require_same_space(a.space_, b.space_, op);
    std::vector<K> v;
    v.reserve(a.values_.size());
    for (std::size_t k = 0; k < a.values_.size(); ++k) v.push_back(f(a.values_[k], b.values_[k]));
    return L0Scalar(a.space_, std::move(v));
  }

  SpacePtr space_;
  std::vector<K> values_;
};

/// Per-atom reciprocal where nonzero, zero elsewhere; xi * xi^-1 = I_[|xi|>0].
template <Field K>
L0Scalar<K> pseudo_inverse(const L0Scalar<K>& xi) {
  std::vector<K> v;
  v.reserve(xi.size());
  for (std::size_t k = 0; k < xi.size(); ++k)
    v.push_back(xi.is_zero_at(k) ? FieldTraits<K>::zero() : K(FieldTraits<K>::one() / xi[k]));
  return L0Scalar<K>(xi.space(), std::move(v));
}

/// The event [|xi| > 0].
template <Field K>
Event support(const L0Scalar<K>& xi) {
  std::vector<bool> m(xi.size());
  for (std::size_t k = 0; k < xi.size(); ++k) m[k] = !xi.is_zero_at(k);
  return Event(xi.space(), std::move(m));
}

enum class Relation { greater, greater_equal, equal };

namespace detail {

template <Field K>
void require_real(const L0Scalar<K>& xi, const char* op) {
  for (const K& x : xi.values())
    if (!FieldTraits<K>::is_real(x)) throw ComplexComparison(op);
}

}  // namespace detail

/// The event [xi R eta] for R in {>, >=, =}. Real-valued inputs only.
template <Field K>
Event compare(const L0Scalar<K>& xi, const L0Scalar<K>& eta, Relation rel) {
  require_same_space(xi.space(), eta.space(), "compare");
  detail::require_real(xi, "compare");
  detail::require_real(eta, "compare");
  using T = FieldTraits<K>;
  using Order = RealOrder<RealOf<K>>;
  const double tol = xi.tolerance();
  std::vector<bool> m(xi.size());
  for (std::size_t k = 0; k < xi.size(); ++k) {
    auto a = T::real_part(xi[k]);
    auto b = T::real_part(eta[k]);
    switch (rel) {
      case Relation::greater: m[k] = Order::less(b, a, tol); break;
      case Relation::greater_equal: m[k] = Order::less_equal(b, a, tol); break;
      case Relation::equal: m[k] = Order::equal(a, b, tol); break;
    }
  }
  return Event(xi.space(), std::move(m));
}

/// Agreement on every positive-probability atom.
template <Field K>
bool equal_as(const L0Scalar<K>& a, const L0Scalar<K>& b) {
  require_same_space(a.space(), b.space(), "equal_as");
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a.space()->is_null(k)) continue;
    if (!FieldTraits<K>::is_zero(K(a[k] - b[k]), a.tolerance())) return false;
  }
  return true;
}

/// xi <= eta on the positive-probability atoms of A.
template <Field K>
bool leq_on(const L0Scalar<K>& xi, const L0Scalar<K>& eta, const Event& a) {
  Event ge = compare(eta, xi, Relation::greater_equal);
  return subset_as(a, ge);
}

/// xi <= eta almost surely.
template <Field K>
bool leq_as(const L0Scalar<K>& xi, const L0Scalar<K>& eta) {
  return leq_on(xi, eta, Event::full(xi.space()));
}

/// xi > eta on the positive-probability atoms of A.
template <Field K>
bool greater_on(const L0Scalar<K>& xi, const L0Scalar<K>& eta, const Event& a) {
  return subset_as(a, compare(xi, eta, Relation::greater));
}

namespace detail {

template <Field K, class Pick>
L0Scalar<K> lattice_fold(std::span<const L0Scalar<K>> set, const char* op, Pick&& pick_second) {
  if (set.empty()) throw InvalidArgument(std::string(op) + ": empty family");
  for (const auto& x : set) {
    require_same_space(set.front().space(), x.space(), op);
    require_real(x, op);
  }
  std::vector<K> v = set.front().values();
  for (std::size_t i = 1; i < set.size(); ++i)
    for (std::size_t k = 0; k < v.size(); ++k)
      if (pick_second(FieldTraits<K>::real_part(v[k]), FieldTraits<K>::real_part(set[i][k])))
        v[k] = set[i][k];
  return L0Scalar<K>(set.front().space(), std::move(v));
}

}  // namespace detail

/// Per-atom maximum of a finite nonempty real family.
template <Field K>
L0Scalar<K> lattice_sup(std::span<const L0Scalar<K>> set) {
  return detail::lattice_fold<K>(set, "lattice_sup", [](const auto& cur, const auto& cand) { return cand > cur; });
}

/// Per-atom minimum of a finite nonempty real family.
template <Field K>
L0Scalar<K> lattice_inf(std::span<const L0Scalar<K>> set) {
  return detail::lattice_fold<K>(set, "lattice_inf", [](const auto& cur, const auto& cand) { return cand < cur; });
}

/// Wrapper marking an event used as the idempotent I_A.
class Idempotent {
 public:
  explicit Idempotent(Event event) : event_(std::move(event)) {}
  const Event& event() const { return event_; }
  template <Field K>
  L0Scalar<K> as_scalar() const {
    return L0Scalar<K>::indicator(event_);
  }

 private:
  Event event_;
};

/// Converts values between fields, e.g. an exact instance into float mode.
template <Field To, Field From>
L0Scalar<To> convert(const L0Scalar<From>& x, SpacePtr target_space);

template <>
inline L0Scalar<double> convert<double, Rational>(const L0Scalar<Rational>& x, SpacePtr target_space) {
  std::vector<double> v;
  for (const auto& q : x.values()) v.push_back(q.get_d());
  return L0Scalar<double>(std::move(target_space), std::move(v));
}

template <>
inline L0Scalar<GaussRational> convert<GaussRational, Rational>(const L0Scalar<Rational>& x,
                                                                SpacePtr target_space) {
  std::vector<GaussRational> v;
  for (const auto& q : x.values()) v.emplace_back(q);
  return L0Scalar<GaussRational>(std::move(target_space), std::move(v));
}

template <Field K>
std::string format_scalar(const L0Scalar<K>& x) {
  std::string s = "[";
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) s += ", ";
    s += FieldTraits<K>::format(x[k]);
  }
  return s + "]";
}

}  // namespace l0
