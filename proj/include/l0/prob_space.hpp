// Finite atomic probability spaces and their event lattice.
//
// F is the full power set of the atoms, so every subset is an event. All
// comparisons between events are almost-sure: atoms of probability zero
// ("null atoms") are carried along but never decide an a.s. question.
#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "l0/field.hpp"

namespace l0 {

enum class Mode { exact, approximate };

struct Atom {
  std::string id;
  Rational prob;
};

class ProbSpace;
using SpacePtr = std::shared_ptr<const ProbSpace>;

class ProbSpace {
 public:
  /// Zero tolerance used by float-mode support and comparison decisions.
  static constexpr double kDefaultTolerance = 1e-9;
  /// Float-mode probability sum slack and null-atom threshold.
  static constexpr double kFloatProbSlack = 1e-12;

  /// Validates the atom list: nonempty, unique ids, prob >= 0, sum = 1
  /// (exactly in exact mode, within 1e-12 otherwise).
  static SpacePtr create(std::vector<Atom> atoms, Mode mode = Mode::exact,
                         double tolerance = kDefaultTolerance);

  /// Uniform space with atoms "a1".."an".
  static SpacePtr uniform(std::size_t n, Mode mode = Mode::exact);

  /// Same atoms under another mode or tolerance.
  SpacePtr with_mode(Mode mode, double tolerance = kDefaultTolerance) const;

  std::size_t size() const { return atoms_.size(); }
  const Atom& atom(std::size_t k) const { return atoms_[k]; }
  std::span<const Atom> atoms() const { return atoms_; }
  Mode mode() const { return mode_; }
  double tolerance() const { return tolerance_; }

  bool is_null(std::size_t k) const { return null_[k]; }
  /// Index of the atom with the given id; throws InvalidArgument when unknown.
  std::size_t index_of(const std::string& id) const;

  /// Same atoms (ids and probabilities, in order) and same mode.
  bool same_as(const ProbSpace& other) const;

 private:
  ProbSpace(std::vector<Atom> atoms, Mode mode, double tolerance);

  std::vector<Atom> atoms_;
  std::vector<bool> null_;
  Mode mode_;
  double tolerance_;
};

/// Throws SpaceMismatch unless the spaces are identical or structurally equal.
void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* op);

/// A subset of the atoms of one space. Equality is set equality; use
/// equal_as for the almost-sure notion.
class Event {
 public:
  Event(SpacePtr space, std::vector<bool> members);

  static Event empty(SpacePtr space);
  static Event full(SpacePtr space);
  static Event atom(SpacePtr space, std::size_t k);
  static Event of_ids(SpacePtr space, std::span<const std::string> ids);

  const SpacePtr& space() const { return space_; }
  std::size_t size() const { return members_.size(); }
  bool contains(std::size_t k) const { return members_[k]; }
  const std::vector<bool>& members() const { return members_; }
  std::vector<std::size_t> indices() const;
  std::vector<std::string> ids() const;

  Rational prob() const;
  /// Probability zero; the decidable notion of "null" in exact mode.
  bool is_null() const;
  bool is_empty() const;

  Event complement() const;
  Event operator|(const Event& o) const;
  Event operator&(const Event& o) const;
  Event operator-(const Event& o) const;
  bool operator==(const Event& o) const;

  /// Atoms of positive probability only.
  Event positive_part() const;

 private:
  SpacePtr space_;
  std::vector<bool> members_;
};

/// Symmetric difference is null.
bool equal_as(const Event& a, const Event& b);
/// a minus b is null.
bool subset_as(const Event& a, const Event& b);

/// Pairwise disjoint up to null sets with union of probability one.
bool partition_validate(std::span<const Event> parts);

/// Least a.s. upper bound of a finite family: the union. Throws on an empty
/// family or mixed spaces.
Event ess_sup_events(std::span<const Event> family);
/// Greatest a.s. lower bound of a finite family: the intersection.
Event ess_inf_events(std::span<const Event> family);

std::string format_event(const Event& e);

}  // namespace l0
