// Scalar fields K over which L0(F,K) is modelled.
//
// Three fields are supported:
//   Rational       exact real arithmetic (GMP mpq)
//   GaussRational  exact complex arithmetic, re + im*i with rational parts
//   double         approximate real arithmetic with an explicit zero tolerance
//
// Everything above this header is written against FieldTraits<K>, so the
// algebra, stratification and Helly code is shared by all three.
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

namespace l0 {

using Rational = mpq_class;

/// Gaussian rational re + im*i. Always kept canonical because mpq_class is.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() : re(0), im(0) {}
  GaussRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT(implicit)
  GaussRational(long r) : re(r), im(0) {}                 // NOLINT(implicit)
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    Rational d = o.re * o.re + o.im * o.im;
    Rational r = (re * o.re + im * o.im) / d;
    Rational i = (im * o.re - re * o.im) / d;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

// Literal parsing and canonical rendering (field.cpp).
// Accepted real literals: integers, "p/q", decimals with optional exponent.
// Complex literals: "a+bi", "a-bi", "bi", "i", "-i", "a+i".
Rational parse_rational(std::string_view text);
GaussRational parse_gauss_rational(std::string_view text);
bool literal_is_complex(std::string_view text);
std::string format_rational(const Rational& q);
std::string format_gauss_rational(const GaussRational& z);
std::string format_double(double x);
/// Round-to-nearest parse for float mode; "p/q" literals are divided exactly first.
double parse_double(std::string_view text);
/// Sets root = sqrt(q) and returns true iff q >= 0 is the square of a rational.
bool rational_sqrt(const Rational& q, Rational& root);

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  using Real = Rational;
  static constexpr bool exact = true;
  static constexpr bool complex = false;
  static constexpr const char* name = "rational";

  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x, double /*tol*/) { return sgn(x) == 0; }
  static Rational conj(const Rational& x) { return x; }
  static Real abs2(const Rational& x) { return x * x; }
  static Real real_part(const Rational& x) { return x; }
  static bool is_real(const Rational&) { return true; }
  static Rational from_real(const Real& r) { return r; }
  static Rational from_rational(const Rational& q) { return q; }
  static double to_double(const Rational& x) { return x.get_d(); }
  static std::string format(const Rational& x) { return format_rational(x); }
  static Rational parse(std::string_view s) { return parse_rational(s); }
};

template <>
struct FieldTraits<GaussRational> {
  using Real = Rational;
  static constexpr bool exact = true;
  static constexpr bool complex = true;
  static constexpr const char* name = "gaussian-rational";

  static GaussRational zero() { return {}; }
  static GaussRational one() { return GaussRational(Rational(1)); }
  static bool is_zero(const GaussRational& x, double /*tol*/) {
    return sgn(x.re) == 0 && sgn(x.im) == 0;
  }
  static GaussRational conj(const GaussRational& x) { return {x.re, -x.im}; }
  static Real abs2(const GaussRational& x) { return x.re * x.re + x.im * x.im; }
  static Real real_part(const GaussRational& x) { return x.re; }
  static bool is_real(const GaussRational& x) { return sgn(x.im) == 0; }
  static GaussRational from_real(const Real& r) { return GaussRational(r); }
  static GaussRational from_rational(const Rational& q) { return GaussRational(q); }
  static double to_double(const GaussRational& x) { return x.re.get_d(); }
  static std::string format(const GaussRational& x) { return format_gauss_rational(x); }
  static GaussRational parse(std::string_view s) { return parse_gauss_rational(s); }
};

template <>
struct FieldTraits<double> {
  using Real = double;
  static constexpr bool exact = false;
  static constexpr bool complex = false;
  static constexpr const char* name = "float";

  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double x, double tol) { return std::abs(x) <= tol; }
  static double conj(double x) { return x; }
  static Real abs2(double x) { return x * x; }
  static Real real_part(double x) { return x; }
  static bool is_real(double) { return true; }
  static double from_real(double r) { return r; }
  static double from_rational(const Rational& q) { return q.get_d(); }
  static double to_double(double x) { return x; }
  static std::string format(double x) { return format_double(x); }
  static double parse(std::string_view s) { return parse_double(s); }
};

template <class K>
concept Field = requires { typename FieldTraits<K>::Real; };

template <Field K>
using RealOf = typename FieldTraits<K>::Real;

/// Exact or tolerance-aware comparisons on the real type of a field.
template <class R>
struct RealOrder;

template <>
struct RealOrder<Rational> {
  static bool less(const Rational& a, const Rational& b, double) { return a < b; }
  static bool less_equal(const Rational& a, const Rational& b, double) { return a <= b; }
  static bool equal(const Rational& a, const Rational& b, double) { return a == b; }
  static int sign(const Rational& a, double) { return sgn(a); }
};

template <>
struct RealOrder<double> {
  static bool less(double a, double b, double tol) { return b - a > tol; }
  static bool less_equal(double a, double b, double tol) { return a - b <= tol; }
  static bool equal(double a, double b, double tol) { return std::abs(a - b) <= tol; }
  static int sign(double a, double tol) { return a > tol ? 1 : (a < -tol ? -1 : 0); }
};

}  // namespace l0
