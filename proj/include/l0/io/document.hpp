// Line-based text format shared by inputs and reports.
//
//   # comment
//   atom a1 1/2            probability space entries
//   flag feasible 1        named flag
//   event A: a1 a3         event by atom ids
//   scalar xi              one value per atom, in space order
//   a1: 1/2
//   a2: -3
//   vector y               one K^n fiber per atom, in space order
//   a1: 1 0
//   a2: 0 1+2i
//
// A block ends at the next keyword line. Reports use the same syntax, so a
// report can be read back with parse_document.
#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "l0/error.hpp"
#include "l0/l0_module.hpp"
#include "l0/prob_space.hpp"

namespace l0::io {

struct Entry {
  std::string atom;
  std::size_t line = 0;
  std::vector<std::string> tokens;
};

enum class BlockKind { scalar, vector };

struct Block {
  BlockKind kind;
  std::string name;
  std::size_t line = 0;
  std::vector<Entry> entries;
};

struct EventDecl {
  std::string name;
  std::size_t line = 0;
  std::vector<std::string> ids;
};

struct AtomDecl {
  std::string id;
  std::string prob;
  std::size_t line = 0;
};

struct FlagDecl {
  std::string name;
  std::string value;
  std::size_t line = 0;
};

struct Document {
  std::string file;
  std::vector<AtomDecl> atoms;
  std::vector<FlagDecl> flags;
  std::vector<EventDecl> events;
  std::vector<Block> blocks;

  /// Any block literal written with an imaginary unit.
  bool has_complex_literal() const;
  const Block* find_block(std::string_view name) const;
  const EventDecl* find_event(std::string_view name) const;
  const FlagDecl* find_flag(std::string_view name) const;
  std::vector<const Block*> blocks_of(BlockKind kind) const;
};

Document parse_document(std::string_view text, const std::string& file);
/// Reads and parses a file; a missing file is a ParseError at line 0.
Document read_document(const std::string& path);

SpacePtr space_from(const Document& doc, Mode mode, double tol);
Event event_from(const Document& doc, const EventDecl& decl, const SpacePtr& space);
/// Comma- or space-separated atom ids, as given on the command line.
Event event_from_list(std::string_view list, const SpacePtr& space);

namespace detail {
/// Checks that the block lists every atom once, in space order.
void check_atoms(const Document& doc, const Block& b, const SpacePtr& space);
}  // namespace detail

template <Field K>
K parse_value(const Document& doc, const Entry& e, const std::string& token) {
  try {
    return FieldTraits<K>::parse(token);
  } catch (const Error& err) {
    throw ParseError(doc.file, e.line, err.what(), e.atom);
  }
}

template <Field K>
L0Scalar<K> scalar_from(const Document& doc, const Block& b, const SpacePtr& space) {
  detail::check_atoms(doc, b, space);
  std::vector<K> v;
  for (const auto& e : b.entries) {
    if (e.tokens.size() != 1)
      throw ParseError(doc.file, e.line, "scalar '" + b.name + "' needs exactly one value per atom", e.atom);
    v.push_back(parse_value<K>(doc, e, e.tokens[0]));
  }
  return L0Scalar<K>(space, std::move(v));
}

template <Field K>
L0Vector<K> vector_from(const Document& doc, const Block& b, const SpacePtr& space,
                        std::optional<std::size_t> dim = std::nullopt) {
  detail::check_atoms(doc, b, space);
  const std::size_t d = dim ? *dim : b.entries.front().tokens.size();
  std::vector<l0::detail::Row<K>> fibers;
  for (const auto& e : b.entries) {
    if (e.tokens.size() != d)
      throw ParseError(doc.file, e.line,
                       "vector '" + b.name + "' has " + std::to_string(e.tokens.size()) + " entries, expected " +
                           std::to_string(d),
                       e.atom);
    l0::detail::Row<K> row;
    for (const auto& t : e.tokens) row.push_back(parse_value<K>(doc, e, t));
    fibers.push_back(std::move(row));
  }
  return L0Vector<K>::from_fibers(space, d, fibers);
}

/// All vector blocks of a document, with a common dimension.
template <Field K>
std::vector<L0Vector<K>> vectors_from(const Document& doc, const SpacePtr& space) {
  auto blocks = doc.blocks_of(BlockKind::vector);
  if (blocks.empty()) throw ParseError(doc.file, 0, "no vector blocks");
  std::vector<L0Vector<K>> out;
  std::optional<std::size_t> dim;
  for (const Block* b : blocks) {
    out.push_back(vector_from<K>(doc, *b, space, dim));
    dim = out.back().dim();
  }
  return out;
}

template <Field K>
std::vector<L0Scalar<K>> scalars_from(const Document& doc, const SpacePtr& space) {
  auto blocks = doc.blocks_of(BlockKind::scalar);
  if (blocks.empty()) throw ParseError(doc.file, 0, "no scalar blocks");
  std::vector<L0Scalar<K>> out;
  for (const Block* b : blocks) out.push_back(scalar_from<K>(doc, *b, space));
  return out;
}

/// Emits documents in canonical form.
class Writer {
 public:
  void comment(const std::string& text);
  void blank();
  void atom(const Atom& a);
  void flag(const std::string& name, const std::string& value);
  void event(const std::string& name, const Event& e);

  template <Field K>
  void scalar(const std::string& name, const L0Scalar<K>& x) {
    out_ << "scalar " << name << '\n';
    for (std::size_t k = 0; k < x.size(); ++k)
      out_ << x.space()->atom(k).id << ": " << FieldTraits<K>::format(x[k]) << '\n';
  }

  template <Field K>
  void vector(const std::string& name, const L0Vector<K>& x) {
    out_ << "vector " << name << '\n';
    for (std::size_t k = 0; k < x.space()->size(); ++k) {
      out_ << x.space()->atom(k).id << ':';
      for (const K& v : x.fiber(k)) out_ << ' ' << FieldTraits<K>::format(v);
      out_ << '\n';
    }
  }

  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

}  // namespace l0::io
