#include <gtest/gtest.h>

#include "support.hpp"

namespace l0 {
namespace {

using test::ev;
using test::space;

TEST(ProbSpace, RejectsBadAtomLists) {
  EXPECT_THROW(space({"1/2", "1/3"}), InvalidArgument);
  EXPECT_THROW(space({}), InvalidArgument);
  EXPECT_THROW(space({"3/2", "-1/2"}), InvalidArgument);
  EXPECT_THROW(ProbSpace::create({{"a", Rational(1, 2)}, {"a", Rational(1, 2)}}), InvalidArgument);
}

TEST(ProbSpace, FloatModeAllowsTinySlack) {
  std::vector<Atom> atoms{{"a", Rational(1, 3)}, {"b", Rational(2, 3) + parse_rational("1/100000000000000")}};
  EXPECT_NO_THROW(ProbSpace::create(atoms, Mode::approximate));
  EXPECT_THROW(ProbSpace::create(atoms, Mode::exact), InvalidArgument);
}

TEST(ProbSpace, NullAtomsAndLookup) {
  auto sp = space({"1/2", "0", "1/2"});
  EXPECT_FALSE(sp->is_null(0));
  EXPECT_TRUE(sp->is_null(1));
  EXPECT_EQ(sp->index_of("a3"), 2u);
  EXPECT_THROW(sp->index_of("zz"), InvalidArgument);
  auto u = ProbSpace::uniform(4);
  EXPECT_EQ(u->atom(3).id, "a4");
  EXPECT_EQ(u->atom(0).prob, Rational(1, 4));
}

TEST(Event, LatticeOperations) {
  auto sp = space({"1/4", "1/4", "1/2"});
  Event a = ev(sp, {"a1", "a2"});
  Event b = ev(sp, {"a2", "a3"});
  EXPECT_EQ((a & b).ids(), std::vector<std::string>{"a2"});
  EXPECT_EQ((a | b), Event::full(sp));
  EXPECT_EQ((a - b).ids(), std::vector<std::string>{"a1"});
  EXPECT_EQ(a.complement().ids(), std::vector<std::string>{"a3"});
  EXPECT_EQ(a.prob(), Rational(1, 2));
  EXPECT_TRUE(Event::empty(sp).is_empty());
}

TEST(Event, AlmostSureEqualityIgnoresNullAtoms) {
  auto sp = space({"1/2", "1/2", "0"});
  Event a = ev(sp, {"a1"});
  Event az = ev(sp, {"a1", "a3"});
  EXPECT_FALSE(a == az);
  EXPECT_TRUE(equal_as(a, az));
  EXPECT_TRUE(subset_as(az, a));
  EXPECT_TRUE(ev(sp, {"a3"}).is_null());
  EXPECT_EQ(az.positive_part(), a);
}

TEST(Event, MixedSpacesAreRejected) {
  auto s1 = space({"1/2", "1/2"});
  auto s2 = space({"1/3", "2/3"});
  EXPECT_THROW(Event::full(s1) | Event::full(s2), SpaceMismatch);
}

TEST(PartitionValidate, Examples) {
  auto sp = space({"1/2", "1/2"});
  std::vector<Event> split{ev(sp, {"a1"}), ev(sp, {"a2"})};
  std::vector<Event> with_empty{Event::full(sp), Event::empty(sp)};
  std::vector<Event> overlap{ev(sp, {"a1"}), Event::full(sp)};
  EXPECT_TRUE(partition_validate(split));
  EXPECT_TRUE(partition_validate(with_empty));
  EXPECT_FALSE(partition_validate(overlap));
}

TEST(EssSupInf, Examples) {
  auto sp = space({"1/3", "1/3", "1/3"});
  std::vector<Event> ab{ev(sp, {"a1"}), ev(sp, {"a2"})};
  std::vector<Event> aa{ev(sp, {"a1"}), ev(sp, {"a1"})};
  EXPECT_EQ(ess_sup_events(ab).ids(), (std::vector<std::string>{"a1", "a2"}));
  EXPECT_EQ(ess_sup_events(aa).ids(), std::vector<std::string>{"a1"});
  EXPECT_TRUE(ess_inf_events(ab).is_empty());
  std::vector<Event> overlapping{ev(sp, {"a1", "a2"}), ev(sp, {"a2", "a3"})};
  EXPECT_EQ(ess_inf_events(overlapping).ids(), std::vector<std::string>{"a2"});
  std::vector<Event> one{ev(sp, {"a3"})};
  EXPECT_EQ(ess_sup_events(one), one.front());
  EXPECT_THROW(ess_sup_events(std::vector<Event>{}), InvalidArgument);
}

TEST(EssSupInf, NullAtomsAreKeptButInvisible) {
  auto sp = space({"1/2", "1/2", "0"});
  std::vector<Event> fam{ev(sp, {"a1"}), ev(sp, {"a3"})};
  Event s = ess_sup_events(fam);
  EXPECT_EQ(s.ids(), (std::vector<std::string>{"a1", "a3"}));
  EXPECT_TRUE(equal_as(s, ev(sp, {"a1"})));
}

}  // namespace
}  // namespace l0
