#include <gtest/gtest.h>

#include <regex>

#include "homlat/homlat.hpp"

using namespace homlat;

namespace {

std::string data(const std::string& f) { return std::string(HOMLAT_DATA_DIR) + "/" + f; }

}  // namespace

TEST(Parse, SemilatticeFiles) {
  const auto l6 = parse_file(data("l6.sl"));
  ASSERT_TRUE(l6) << l6.errors.front().describe();
  EXPECT_EQ(l6.kind, InputKind::semilattice);
  EXPECT_EQ(l6.monoid->size(), 6u);
  EXPECT_TRUE(isomorphic(l6.monoid, fixtures::l6()));
  EXPECT_EQ(l6.monoid->name(), "l6");

  const auto n5 = parse_file(data("n5.sl"));
  ASSERT_TRUE(n5);
  EXPECT_TRUE(isomorphic(n5.monoid, fixtures::n5()));
}

TEST(Parse, MonoidFiles) {
  const auto v = parse_file(data("v4.monoid"));
  ASSERT_TRUE(v);
  EXPECT_EQ(v.kind, InputKind::monoid);
  EXPECT_TRUE(isomorphic(v.monoid, fixtures::v4()));
  EXPECT_EQ(v.monoid->label(1), "g");
  const auto z = parse_file(data("z4.monoid"));
  ASSERT_TRUE(z);
  EXPECT_TRUE(isomorphic(z.monoid, fixtures::cyclic(4)));
}

TEST(Parse, DiagnosticsCarryLineNumbers) {
  const auto nb = parse_file(data("bad_nobottom.sl"));
  ASSERT_FALSE(nb);
  EXPECT_EQ(nb.errors.front().message, "NoBottom");

  const auto na = parse_file(data("bad_nonassoc.monoid"));
  ASSERT_FALSE(na);
  EXPECT_EQ(na.errors.front().message.rfind("NonAssociative(", 0), 0u);
  EXPECT_EQ(na.errors.front().line, 4u);  // row 1 after a comment and the header

  const auto row = parse_file(data("bad_row.monoid"));
  ASSERT_FALSE(row);
  EXPECT_EQ(row.errors.front().line, 3u);

  EXPECT_FALSE(parse_file(data("missing.sl")));
  EXPECT_FALSE(parse_text(""));
  EXPECT_FALSE(parse_text("group 3\n"));
  EXPECT_FALSE(parse_text("semilattice 0\n"));
  EXPECT_EQ(parse_text("semilattice 3\ncover 0 1\ncover 1 2\ncover 0 2\n").errors.front().line, 4u);
  EXPECT_EQ(parse_text("semilattice 2\ncover 0 1\nlabel 7 x\n").errors.front().line, 3u);
}

TEST(Format, RoundTripIsIdentical) {
  for (const auto& m : fixtures::commutative_fixtures()) {
    const bool sl = is_monoidal_semilattice(*m);
    const auto text = sl ? format_semilattice(*m) : format_monoid(*m);
    const auto back = parse_text(text, m->name());
    ASSERT_TRUE(back) << text;
    EXPECT_EQ(back.monoid->table(), m->table()) << m->display_name();
    EXPECT_EQ(back.monoid->labels(), m->labels());
    const auto again = sl ? format_semilattice(*back.monoid) : format_monoid(*back.monoid);
    EXPECT_EQ(again, text);
  }
}

TEST(Format, LatticeListingOfNsub) {
  const CmonContext c;
  const auto l = enumerate_nsub(c, fixtures::n5());
  const auto text = format_lattice(l.lattice, l.codes);
  EXPECT_EQ(text.rfind("lattice 5\n", 0), 0u);
  EXPECT_NE(text.find("label 0 {0}"), std::string::npos);
  const auto back = parse_text(text);
  ASSERT_TRUE(back);
  EXPECT_TRUE(isomorphic(back.monoid, fixtures::n5()));
}

TEST(Format, ResultLine) {
  const CmonContext c;
  const std::regex re(
      "RESULT\tobject=[^\t]+\tproperty=(hsd|secondiso|dpn|diexact|modular|distributive|stability)\tdepth=[0-3]\t"
      "status=(pass|fail)\tcases=[0-9]+\twitness=(-|\\(.*\\))");
  const auto fail = dpn_check(c, fixtures::n5());
  const auto line = result_line(fail);
  EXPECT_TRUE(std::regex_match(line, re)) << line;
  EXPECT_NE(line.find("status=fail"), std::string::npos);
  const auto pass = result_line(dpn_check(c, fixtures::v4()));
  EXPECT_TRUE(std::regex_match(pass, re)) << pass;
  EXPECT_NE(pass.find("witness=-"), std::string::npos);
  const SesContext<CmonContext> s;
  for (const auto& o : ses_objects<1>(fixtures::n5()))
    EXPECT_TRUE(std::regex_match(result_line(third_iso_check(s, o)), re));
}

TEST(Format, SesObjects) {
  const SesContext<CmonContext> s;
  const auto v = fixtures::v4();
  const auto o = s.make_object(inclusion(v, Subset::of({0, v->at("g")})));
  EXPECT_EQ(format_ses_object(s, o, "v4.monoid"), "ses v4.monoid sub {0,g}");
  const SesPower<CmonContext, 2>::type s2;
  const auto deep = ses_objects<2>(v);
  const auto text = format_ses_object(s2, deep.back(), "v4.monoid");
  EXPECT_EQ(text.rfind("ses\n  ses v4.monoid sub ", 0), 0u) << text;
}
