#include "l0/io/document.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace l0::io {
namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && (s[k] == ' ' || s[k] == '\t' || s[k] == '\r')) ++k;
    std::size_t start = k;
    while (k < s.size() && s[k] != ' ' && s[k] != '\t' && s[k] != '\r') ++k;
    if (k > start) out.emplace_back(s.substr(start, k - start));
  }
  return out;
}

bool is_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-')) return false;
  return true;
}

}  // namespace

bool Document::has_complex_literal() const {
  for (const auto& b : blocks)
    for (const auto& e : b.entries)
      for (const auto& t : e.tokens)
        if (literal_is_complex(t)) return true;
  return false;
}

const Block* Document::find_block(std::string_view name) const {
  for (const auto& b : blocks)
    if (b.name == name) return &b;
  return nullptr;
}

const EventDecl* Document::find_event(std::string_view name) const {
  for (const auto& e : events)
    if (e.name == name) return &e;
  return nullptr;
}

const FlagDecl* Document::find_flag(std::string_view name) const {
  for (const auto& f : flags)
    if (f.name == name) return &f;
  return nullptr;
}

std::vector<const Block*> Document::blocks_of(BlockKind kind) const {
  std::vector<const Block*> out;
  for (const auto& b : blocks)
    if (b.kind == kind) out.push_back(&b);
  return out;
}

Document parse_document(std::string_view text, const std::string& file) {
  Document doc;
  doc.file = file;
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::size_t open = none;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    const std::string& head = tok[0];
    auto fail = [&](const std::string& msg) { throw ParseError(file, line_no, msg); };
    if (head == "atom") {
      if (tok.size() != 3) fail("expected 'atom <id> <probability>'");
      doc.atoms.push_back({tok[1], tok[2], line_no});
      open = none;
    } else if (head == "flag") {
      if (tok.size() != 3) fail("expected 'flag <name> <value>'");
      doc.flags.push_back({tok[1], tok[2], line_no});
      open = none;
    } else if (head == "event") {
      if (tok.size() < 2 || tok[1].empty() || tok[1].back() != ':') fail("expected 'event <name>: <atom ids>'");
      std::string name = tok[1].substr(0, tok[1].size() - 1);
      if (!is_name(name)) fail("bad event name '" + name + "'");
      doc.events.push_back({name, line_no, std::vector<std::string>(tok.begin() + 2, tok.end())});
      open = none;
    } else if (head == "scalar" || head == "vector") {
      if (tok.size() != 2 || !is_name(tok[1])) fail("expected '" + head + " <name>'");
      for (const auto& b : doc.blocks)
        if (b.name == tok[1]) fail("duplicate block name '" + tok[1] + "'");
      doc.blocks.push_back({head == "scalar" ? BlockKind::scalar : BlockKind::vector, tok[1], line_no, {}});
      open = doc.blocks.size() - 1;
    } else if (head.size() > 1 && head.back() == ':') {
      if (open == none) fail("value line outside a scalar or vector block");
      std::string atom = head.substr(0, head.size() - 1);
      if (tok.size() == 1) throw ParseError(file, line_no, "missing value", atom);
      doc.blocks[open].entries.push_back({atom, line_no, std::vector<std::string>(tok.begin() + 1, tok.end())});
    } else {
      fail("unrecognised line starting with '" + head + "'");
    }
  }
  return doc;
}

Document read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

SpacePtr space_from(const Document& doc, Mode mode, double tol) {
  if (doc.atoms.empty()) throw ParseError(doc.file, 0, "no 'atom' lines");
  std::vector<Atom> atoms;
  for (const auto& a : doc.atoms) {
    Rational p;
    try {
      p = parse_rational(a.prob);
    } catch (const Error& e) {
      throw ParseError(doc.file, a.line, e.what(), a.id);
    }
    atoms.push_back({a.id, p});
  }
  try {
    return ProbSpace::create(std::move(atoms), mode, tol);
  } catch (const Error& e) {
    throw ParseError(doc.file, 0, e.what());
  }
}

Event event_from(const Document& doc, const EventDecl& decl, const SpacePtr& space) {
  std::vector<bool> m(space->size(), false);
  for (const auto& id : decl.ids) {
    try {
      m[space->index_of(id)] = true;
    } catch (const Error&) {
      throw ParseError(doc.file, decl.line, "event '" + decl.name + "' names an unknown atom", id);
    }
  }
  return Event(space, std::move(m));
}

Event event_from_list(std::string_view list, const SpacePtr& space) {
  std::string s(list);
  for (char& c : s)
    if (c == ',') c = ' ';
  std::vector<bool> m(space->size(), false);
  for (const auto& id : split_ws(s)) m[space->index_of(id)] = true;
  return Event(space, std::move(m));
}

namespace detail {

void check_atoms(const Document& doc, const Block& b, const SpacePtr& space) {
  const std::string kind = b.kind == BlockKind::scalar ? "scalar" : "vector";
  if (b.entries.size() != space->size())
    throw ParseError(doc.file, b.line,
                     kind + " '" + b.name + "' has " + std::to_string(b.entries.size()) + " values over a " +
                         std::to_string(space->size()) + "-atom space");
  for (std::size_t k = 0; k < b.entries.size(); ++k) {
    const Entry& e = b.entries[k];
    if (e.atom != space->atom(k).id)
      throw ParseError(doc.file, e.line, kind + " '" + b.name + "': expected atom " + space->atom(k).id, e.atom);
  }
}

}  // namespace detail

void Writer::comment(const std::string& text) { out_ << "# " << text << '\n'; }

void Writer::blank() { out_ << '\n'; }

void Writer::atom(const Atom& a) { out_ << "atom " << a.id << ' ' << format_rational(a.prob) << '\n'; }

void Writer::flag(const std::string& name, const std::string& value) { out_ << "flag " << name << ' ' << value << '\n'; }

void Writer::event(const std::string& name, const Event& e) {
  out_ << "event " << name << ':';
  for (const auto& id : e.ids()) out_ << ' ' << id;
  out_ << '\n';
}

}  // namespace l0::io
