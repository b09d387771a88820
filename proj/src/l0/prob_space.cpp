#include "l0/prob_space.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "l0/error.hpp"

namespace l0 {

ProbSpace::ProbSpace(std::vector<Atom> atoms, Mode mode, double tolerance)
    : atoms_(std::move(atoms)), null_(atoms_.size()), mode_(mode), tolerance_(tolerance) {
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    null_[k] = mode_ == Mode::exact ? sgn(atoms_[k].prob) == 0
                                    : atoms_[k].prob.get_d() < kFloatProbSlack;
  }
}

SpacePtr ProbSpace::create(std::vector<Atom> atoms, Mode mode, double tolerance) {
  if (atoms.empty()) throw InvalidArgument("probability space needs at least one atom");
  if (!(tolerance > 0)) throw InvalidArgument("tolerance must be positive");
  std::set<std::string> seen;
  Rational total = 0;
  for (const Atom& a : atoms) {
    if (a.id.empty()) throw InvalidArgument("atom id must be nonempty");
    if (!seen.insert(a.id).second) throw InvalidArgument("duplicate atom id '" + a.id + "'");
    if (sgn(a.prob) < 0) throw InvalidArgument("atom '" + a.id + "' has negative probability");
    total += a.prob;
  }
  bool ok = mode == Mode::exact ? total == 1 : std::abs(total.get_d() - 1.0) <= kFloatProbSlack;
  if (!ok) throw InvalidArgument("probabilities must sum to 1 (got " + format_rational(total) + ")");
  return SpacePtr(new ProbSpace(std::move(atoms), mode, tolerance));
}

SpacePtr ProbSpace::uniform(std::size_t n, Mode mode) {
  std::vector<Atom> atoms;
  for (std::size_t k = 0; k < n; ++k)
    atoms.push_back({"a" + std::to_string(k + 1), Rational(1, static_cast<unsigned long>(n))});
  return create(std::move(atoms), mode);
}

SpacePtr ProbSpace::with_mode(Mode mode, double tolerance) const {
  return create(atoms_, mode, tolerance);
}

std::size_t ProbSpace::index_of(const std::string& id) const {
  for (std::size_t k = 0; k < atoms_.size(); ++k)
    if (atoms_[k].id == id) return k;
  throw InvalidArgument("unknown atom id '" + id + "'");
}

bool ProbSpace::same_as(const ProbSpace& other) const {
  if (this == &other) return true;
  if (mode_ != other.mode_ || atoms_.size() != other.atoms_.size()) return false;
  for (std::size_t k = 0; k < atoms_.size(); ++k)
    if (atoms_[k].id != other.atoms_[k].id || atoms_[k].prob != other.atoms_[k].prob) return false;
  return true;
}

void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* op) {
  if (a == b) return;
  if (!a || !b || !a->same_as(*b)) throw SpaceMismatch(op);
}

Event::Event(SpacePtr space, std::vector<bool> members)
    : space_(std::move(space)), members_(std::move(members)) {
  if (!space_) throw InvalidArgument("event without a space");
  if (members_.size() != space_->size())
    throw DimensionMismatch("event membership list does not match the atom count");
}

Event Event::empty(SpacePtr space) {
  auto n = space->size();
  return Event(std::move(space), std::vector<bool>(n, false));
}

Event Event::full(SpacePtr space) {
  auto n = space->size();
  return Event(std::move(space), std::vector<bool>(n, true));
}

Event Event::atom(SpacePtr space, std::size_t k) {
  std::vector<bool> m(space->size(), false);
  m.at(k) = true;
  return Event(std::move(space), std::move(m));
}

Event Event::of_ids(SpacePtr space, std::span<const std::string> ids) {
  std::vector<bool> m(space->size(), false);
  for (const auto& id : ids) m[space->index_of(id)] = true;
  return Event(std::move(space), std::move(m));
}

std::vector<std::size_t> Event::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < members_.size(); ++k)
    if (members_[k]) out.push_back(k);
  return out;
}

std::vector<std::string> Event::ids() const {
  std::vector<std::string> out;
  for (std::size_t k : indices()) out.push_back(space_->atom(k).id);
  return out;
}

Rational Event::prob() const {
  Rational p = 0;
  for (std::size_t k = 0; k < members_.size(); ++k)
    if (members_[k]) p += space_->atom(k).prob;
  return p;
}

bool Event::is_null() const {
  for (std::size_t k = 0; k < members_.size(); ++k)
    if (members_[k] && !space_->is_null(k)) return false;
  return true;
}

bool Event::is_empty() const { return std::none_of(members_.begin(), members_.end(), [](bool b) { return b; }); }

Event Event::complement() const {
  std::vector<bool> m(members_.size());
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = !members_[k];
  return Event(space_, std::move(m));
}

Event Event::operator|(const Event& o) const {
  require_same_space(space_, o.space_, "event union");
  std::vector<bool> m(members_.size());
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = members_[k] || o.members_[k];
  return Event(space_, std::move(m));
}

Event Event::operator&(const Event& o) const {
  require_same_space(space_, o.space_, "event intersection");
  std::vector<bool> m(members_.size());
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = members_[k] && o.members_[k];
  return Event(space_, std::move(m));
}

Event Event::operator-(const Event& o) const {
  require_same_space(space_, o.space_, "event difference");
  std::vector<bool> m(members_.size());
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = members_[k] && !o.members_[k];
  return Event(space_, std::move(m));
}

bool Event::operator==(const Event& o) const {
  require_same_space(space_, o.space_, "event comparison");
  return members_ == o.members_;
}

Event Event::positive_part() const {
  std::vector<bool> m(members_.size());
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = members_[k] && !space_->is_null(k);
  return Event(space_, std::move(m));
}

bool equal_as(const Event& a, const Event& b) { return ((a - b) | (b - a)).is_null(); }

bool subset_as(const Event& a, const Event& b) { return (a - b).is_null(); }

bool partition_validate(std::span<const Event> parts) {
  if (parts.empty()) return false;
  const SpacePtr& space = parts.front().space();
  for (const Event& e : parts) require_same_space(space, e.space(), "partition_validate");
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (!(parts[i] & parts[j]).is_null()) return false;
  return ess_sup_events(parts).complement().is_null();
}

Event ess_sup_events(std::span<const Event> family) {
  if (family.empty()) throw InvalidArgument("ess_sup_events: empty family");
  Event acc = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) acc = acc | family[i];
  return acc;
}

Event ess_inf_events(std::span<const Event> family) {
  if (family.empty()) throw InvalidArgument("ess_inf_events: empty family");
  Event acc = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) acc = acc & family[i];
  return acc;
}

std::string format_event(const Event& e) {
  std::string s = "{";
  bool first = true;
  for (const auto& id : e.ids()) {
    if (!first) s += ",";
    s += id;
    first = false;
  }
  return s + "}";
}

}  // namespace l0
