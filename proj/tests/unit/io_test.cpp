#include <gtest/gtest.h>

#include <sstream>

#include "l0/cli/cli.hpp"
#include "l0/io/document.hpp"
#include "support.hpp"

namespace l0::io {
namespace {

using test::C;
using test::c;
using test::q;
using test::Q;

constexpr const char* kSpace =
    "# two atoms\n"
    "atom a1 1/4\n"
    "atom a2 3/4   # trailing comment\n";

TEST(Document, ParsesAllLineKinds) {
  auto doc = parse_document(std::string(kSpace) +
                                "flag full 1\n"
                                "event A: a2\n"
                                "scalar xi\n"
                                "a1: 1/2\n"
                                "a2: -3\n"
                                "vector y\n"
                                "a1: 1 0\n"
                                "a2: 0 1+2i\n",
                            "mem.txt");
  ASSERT_EQ(doc.atoms.size(), 2u);
  EXPECT_EQ(doc.find_flag("full")->value, "1");
  EXPECT_EQ(doc.find_event("A")->ids, std::vector<std::string>{"a2"});
  EXPECT_EQ(doc.blocks.size(), 2u);
  EXPECT_TRUE(doc.has_complex_literal());
  auto sp = space_from(doc, Mode::exact, 1e-9);
  EXPECT_EQ(sp->atom(1).prob, q(3, 4));
  EXPECT_EQ(scalar_from<Q>(doc, *doc.find_block("xi"), sp).values(), (std::vector<Q>{q(1, 2), -3}));
  auto y = vector_from<C>(doc, *doc.find_block("y"), sp);
  EXPECT_EQ(y.fiber(1), (std::vector<C>{c(0, 0), c(1, 2)}));
  EXPECT_EQ(event_from(doc, *doc.find_event("A"), sp).ids(), std::vector<std::string>{"a2"});
}

TEST(Document, WriterRoundTrip) {
  auto sp = test::space({"1/3", "2/3"});
  auto xi = test::scal<C>(sp, {c(1, -1), C(q(5, 7))});
  auto y = test::vec<Q>(sp, {{q(-1, 2), 0}, {3, 4}});
  Writer w;
  for (const auto& a : sp->atoms()) w.atom(a);
  w.flag("feasible", "0");
  w.event("violation", Event::atom(sp, 1));
  w.scalar("xi", xi);
  w.vector("y", y);
  auto doc = parse_document(w.str(), "round");
  auto sp2 = space_from(doc, Mode::exact, 1e-9);
  EXPECT_TRUE(sp2->same_as(*sp));
  EXPECT_EQ(scalar_from<C>(doc, *doc.find_block("xi"), sp2).values(), xi.values());
  EXPECT_EQ(vector_from<Q>(doc, *doc.find_block("y"), sp2).fiber(0), y.fiber(0));
  EXPECT_EQ(event_from(doc, *doc.find_event("violation"), sp2), Event::atom(sp2, 1));
  Writer again;
  for (const auto& a : sp2->atoms()) again.atom(a);
  again.flag("feasible", doc.find_flag("feasible")->value);
  again.event("violation", event_from(doc, *doc.find_event("violation"), sp2));
  again.scalar("xi", scalar_from<C>(doc, *doc.find_block("xi"), sp2));
  again.vector("y", vector_from<Q>(doc, *doc.find_block("y"), sp2));
  EXPECT_EQ(again.str(), w.str());
}

TEST(Document, FloatValuesRoundTrip) {
  auto sp = test::space({"1/2", "1/2"}, Mode::approximate);
  auto x = test::scal<double>(sp, {0.1, -2.5e-7});
  Writer w;
  w.scalar("x", x);
  auto doc = parse_document(w.str(), "f");
  EXPECT_EQ(scalar_from<double>(doc, doc.blocks.front(), sp).values(), x.values());
}

template <class F>
ParseError parse_error(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError";
  return ParseError("", 0, "");
}

TEST(Document, ErrorsNameFileLineAndAtom) {
  auto e = parse_error([] { parse_document("atom a1\n", "s.txt"); });
  EXPECT_EQ(e.file(), "s.txt");
  EXPECT_EQ(e.line(), 1u);

  auto doc = parse_document(std::string(kSpace) + "scalar xi\na1: 1\na2: 1/0\n", "t.txt");
  auto sp = space_from(doc, Mode::exact, 1e-9);
  e = parse_error([&] { scalar_from<Q>(doc, doc.blocks.front(), sp); });
  EXPECT_EQ(e.line(), 6u);
  EXPECT_EQ(e.atom(), "a2");
  EXPECT_NE(std::string(e.what()).find("t.txt:6"), std::string::npos);

  auto short_doc = parse_document(std::string(kSpace) + "vector y\na1: 1 2\n", "v.txt");
  e = parse_error([&] { vector_from<Q>(short_doc, short_doc.blocks.front(), sp); });
  EXPECT_NE(std::string(e.what()).find("has 1 values over a 2-atom space"), std::string::npos);

  auto order = parse_document(std::string(kSpace) + "scalar xi\na2: 1\na1: 1\n", "o.txt");
  e = parse_error([&] { scalar_from<Q>(order, order.blocks.front(), sp); });
  EXPECT_EQ(e.atom(), "a2");

  auto ragged = parse_document(std::string(kSpace) + "vector y\na1: 1 2\na2: 3\n", "r.txt");
  e = parse_error([&] { vector_from<Q>(ragged, ragged.blocks.front(), sp); });
  EXPECT_EQ(e.line(), 6u);

  e = parse_error([] { parse_document("a1: 3\n", "x"); });
  EXPECT_NE(std::string(e.what()).find("outside"), std::string::npos);
  e = parse_error([] { parse_document("scalar x\nscalar x\n", "x"); });
  EXPECT_EQ(e.line(), 2u);
  e = parse_error([] { space_from(parse_document("atom a 1/2\natom b 1/3\n", "p"), Mode::exact, 1e-9); });
  EXPECT_EQ(e.file(), "p");
  e = parse_error([] { read_document("/nonexistent/l0.txt"); });
  EXPECT_EQ(e.line(), 0u);
}

TEST(Cli, ExitCodes) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::run({"stratify", "--space", "/nonexistent"}, out, err), cli::kError);
  EXPECT_EQ(cli::run({"bogus"}, out, err), cli::kError);
  EXPECT_EQ(cli::run({"--help"}, out, err), cli::kOk);
}

}  // namespace
}  // namespace l0::io
