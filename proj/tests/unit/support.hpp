// Small builders for hand-written fixtures.
#pragma once

#include <string>
#include <vector>

#include "l0/conjugate.hpp"
#include "l0/l0_module.hpp"
#include "l0/prob_space.hpp"

namespace l0::test {

using Q = Rational;
using C = GaussRational;

/// Atoms a1..an with the given probabilities ("1/2", "0", ...).
inline SpacePtr space(const std::vector<std::string>& probs, Mode mode = Mode::exact) {
  std::vector<Atom> atoms;
  for (std::size_t k = 0; k < probs.size(); ++k) atoms.push_back({"a" + std::to_string(k + 1), parse_rational(probs[k])});
  return ProbSpace::create(std::move(atoms), mode);
}

inline Q q(long num, long den = 1) {
  Q r(num, den);
  r.canonicalize();
  return r;
}

inline C c(long re, long im) { return C(Q(re), Q(im)); }

template <Field K = Rational>
L0Scalar<K> scal(const SpacePtr& sp, std::vector<K> values) {
  return L0Scalar<K>(sp, std::move(values));
}

/// One fiber per atom.
template <Field K = Rational>
L0Vector<K> vec(const SpacePtr& sp, const std::vector<std::vector<K>>& fibers) {
  return L0Vector<K>::from_fibers(sp, fibers.front().size(), fibers);
}

inline Event ev(const SpacePtr& sp, const std::vector<std::string>& ids) { return Event::of_ids(sp, ids); }

template <Field K = Rational>
RandomFunctional<K> fn(const SpacePtr& sp, const std::vector<std::vector<K>>& fibers) {
  return RandomFunctional<K>(vec<K>(sp, fibers));
}

}  // namespace l0::test
