#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pealab/corpus.hpp"
#include "pealab/error.hpp"
#include "pealab/textio.hpp"

using namespace pealab;
using oracle::q;

namespace {

void expect_parse_error(const std::function<void()>& f, int line, int column) {
  try {
    f();
    ADD_FAILURE() << "no ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

}  // namespace

TEST(Pea, ParseChain) {
  const auto t = parse_pea(
      "# a chain\n"
      "name: chain2\n"
      "elements: 0 h 1\n"
      "zero: 0\n"
      "one: 1\n"
      "h + h = 1\n");
  EXPECT_EQ(t.name(), "chain2");
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(t.sum(1, 1), std::optional<ElementId>(2));
  EXPECT_EQ(t.sum(0, 2), std::optional<ElementId>(2));
  EXPECT_FALSE(t.defined(1, 2));
  EXPECT_TRUE(validate_axioms(t).passed());
}

TEST(Pea, RoundTripCorpus) {
  for (const auto& t : corpus::tables()) {
    const auto back = parse_pea(write_pea(t, {"header"}));
    EXPECT_TRUE(same_partial_table(back, t)) << t.name();
    EXPECT_EQ(back.labels(), t.labels());
    EXPECT_EQ(back.name(), t.name());
  }
}

TEST(Pea, Errors) {
  expect_parse_error([] { parse_pea("garbage\n"); }, 1, 1);
  expect_parse_error([] { parse_pea("elements: 0 1\nzero: 0\none: 1\n0 + x = 1\n"); }, 4, 5);
  expect_parse_error([] { parse_pea("elements: 0 1\nzero: 0\none: 1\n1 + 1 = 1\n1 + 1 = 0\n"); }, 5, 1);
  expect_parse_error([] { parse_pea("elements: 0 0\nzero: 0\none: 0\n"); }, 1, 13);
  EXPECT_THROW(parse_pea("zero: 0\n"), ParseError);
}

TEST(Pmv, RoundTrip) {
  for (const auto& p : corpus::pmv_images()) {
    const auto back = parse_pmv(write_pmv(p));
    EXPECT_TRUE(back == p);
    EXPECT_EQ(back.labels(), p.labels());
  }
}

TEST(Pmv, RowArity) {
  EXPECT_THROW(parse_pmv("elements: 0 1\nzero: 0\none: 1\n0 : 0 1 | 1 1\n1 : 1 | 0 0\n"), ParseError);
}

TEST(Grp, RoundTripCorpus) {
  for (const auto& g : corpus::groups()) {
    const auto text = write_grp(g.group, g.unit);
    const auto back = parse_grp(text);
    EXPECT_EQ(back.unit, g.unit);
    EXPECT_EQ(back.group.rank(), g.group.rank());
    EXPECT_EQ(write_grp(back.group, back.unit), text);
  }
}

TEST(Grp, Polyhedral) {
  const auto s = parse_grp("variant: free-abelian\nrank: 2\ncone: polyhedral\nrows: 1 0 ; 1 1\nunit: 2 1\n");
  EXPECT_TRUE(cone_contains(s.group, {{2, 1}}));
  EXPECT_FALSE(cone_contains(s.group, {{0, 1}}));
}

TEST(Grp, Errors) {
  EXPECT_THROW(parse_grp("variant: tree\n"), ParseError);
  EXPECT_THROW(parse_grp("variant: free-abelian\nrank: 2\ncone: standard\nunit: 1\n"), ParseError);
  EXPECT_THROW(parse_grp("variant: semidirect\naction: 1 1 0 1\nunit: 1 x 0\n"), ParseError);
}

TEST(State, ParseAndWrite) {
  const auto t = corpus::boolean(2);
  const auto s = parse_state("a=1/4 b=3/4\n1=1", t);
  EXPECT_EQ(s[*t.find("a")], q(1, 4));
  EXPECT_EQ(s[t.zero()], q(0));
  EXPECT_EQ(parse_state(write_state(t, s), t), s);
  EXPECT_THROW(parse_state("a=1/4 1=1", t), ParseError);
  EXPECT_THROW(parse_state("a=1/4 b=3/4 1=1 c=0", t), ParseError);
  EXPECT_THROW(parse_state("a=1/0 b=3/4 1=1", t), ParseError);
}

TEST(Wtab, RoundTrip) {
  const auto w = corpus::noncommutative_window(2);
  const auto back = parse_wtab(write_wtab(w));
  EXPECT_TRUE(same_partial_table(back.table, w.table));
  EXPECT_EQ(back.unknown, w.unknown);
  EXPECT_EQ(back.radius, 2);
}

TEST(Files, KindAndIo) {
  EXPECT_EQ(file_kind("x/y.pea"), FileKind::Pea);
  EXPECT_EQ(file_kind("y.pmv"), FileKind::Pmv);
  EXPECT_EQ(file_kind("y.grp"), FileKind::Grp);
  EXPECT_EQ(file_kind("y.state"), FileKind::State);
  EXPECT_EQ(file_kind("y.wtab"), FileKind::Wtab);
  EXPECT_EQ(file_kind("y.txt"), FileKind::Unknown);
  EXPECT_THROW(read_file("/nonexistent/file.pea"), IoError);
}
