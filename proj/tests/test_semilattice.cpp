#include <gtest/gtest.h>

#include "homlat/homlat.hpp"
#include "oracles.hpp"

using namespace homlat;

namespace {

SemilatticeError::Kind error_of(const CoverGraph& g) {
  try {
    semilattice_from_covers(g);
  } catch (const InvalidSemilattice& e) {
    return e.error().kind;
  }
  ADD_FAILURE() << "expected InvalidSemilattice";
  return SemilatticeError::Kind::OutOfRange;
}

Subset labelled(const MonoidPtr& m, std::initializer_list<const char*> ls) {
  Subset s;
  for (const char* l : ls) s.insert(m->at(l));
  return s;
}

}  // namespace

TEST(FromCovers, L6JoinTable) {
  const auto l6 = fixtures::l6();
  ASSERT_EQ(l6->size(), 6u);
  EXPECT_TRUE(is_monoidal_semilattice(*l6));
  auto j = [&](const char* a, const char* b) { return l6->label(l6->op(l6->at(a), l6->at(b))); };
  EXPECT_EQ(j("D", "E"), "C");
  EXPECT_EQ(j("B", "C"), "A");
  EXPECT_EQ(j("B", "E"), "A");
  EXPECT_EQ(j("D", "B"), "B");
  EXPECT_EQ(j("0", "E"), "E");
  EXPECT_EQ(l6->at("0"), 0u);
}

TEST(FromCovers, ChainIsMax) {
  const auto c = fixtures::chain(3);
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) EXPECT_EQ(c->op(a, b), std::max(a, b));
}

TEST(FromCovers, Diagnostics) {
  EXPECT_EQ(error_of({3, {{1, 0}, {2, 0}}, {}}), SemilatticeError::Kind::NoBottom);
  EXPECT_EQ(error_of({3, {{0, 1}, {1, 2}, {2, 1}}, {}}), SemilatticeError::Kind::Cycle);
  EXPECT_EQ(error_of({3, {{0, 1}, {1, 2}, {0, 2}}, {}}), SemilatticeError::Kind::NotHasse);
  EXPECT_EQ(error_of({2, {{0, 5}}, {}}), SemilatticeError::Kind::OutOfRange);
  // bowtie: a and b have two minimal upper bounds
  EXPECT_EQ(error_of({5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}, {}}), SemilatticeError::Kind::NoJoin);
}

TEST(FromCovers, PartialOrderFromCovers) {
  for (const auto& m : fixtures::semilattice_fixtures()) {
    for (Elem a = 0; a < m->size(); ++a) {
      EXPECT_TRUE(sl_leq(*m, 0, a));
      for (Elem b = 0; b < m->size(); ++b)
        if (sl_leq(*m, a, b) && sl_leq(*m, b, a)) { EXPECT_EQ(a, b); }
    }
    // no listed cover is implied by transitivity
    for (auto [a, b] : semilattice_covers(*m))
      for (Elem c = 0; c < m->size(); ++c)
        if (c != a && c != b) { EXPECT_FALSE(sl_leq(*m, a, c) && sl_leq(*m, c, b)); }
  }
}

TEST(Downsets, WorkedExamples) {
  const auto n5 = fixtures::n5();
  EXPECT_EQ(principal_downset(*n5, n5->at("D")), labelled(n5, {"0", "D"}));
  EXPECT_EQ(principal_downset(*n5, 0), Subset::of({0}));
  const auto l6 = fixtures::l6();
  EXPECT_EQ(principal_upset(*l6, l6->at("E")), labelled(l6, {"E", "C", "A"}));
}

TEST(QuotientByDownset, L6ByE) {
  const auto l6 = fixtures::l6();
  const auto q = quotient_by_downset(l6, l6->at("E"));
  const auto& p = q.projection;
  EXPECT_EQ(p.cod()->size(), 3u);
  EXPECT_EQ(p(l6->at("A")), p(l6->at("B")));
  EXPECT_EQ(p(l6->at("C")), p(l6->at("D")));
  EXPECT_EQ(p(l6->at("E")), p(0));
  EXPECT_NE(p(l6->at("A")), p(l6->at("C")));
  EXPECT_NE(p(l6->at("C")), p(0));
}

TEST(QuotientByDownset, PentagonByD) {
  const auto n5 = fixtures::n5();
  const auto p = quotient_by_downset(n5, n5->at("D")).projection;
  ASSERT_EQ(p.cod()->size(), 2u);
  auto img = [&](const char* l) { return p.cod()->label(p(n5->at(l))); };
  EXPECT_EQ(img("0"), "D");
  EXPECT_EQ(img("C"), "A");
  EXPECT_EQ(img("B"), "A");
  EXPECT_EQ(img("D"), "D");
  EXPECT_EQ(img("A"), "A");
}

TEST(QuotientByDownset, BottomGivesIdentity) {
  for (const auto& m : fixtures::semilattice_fixtures()) {
    const auto p = quotient_by_downset(m, 0).projection;
    EXPECT_TRUE(p.injective() && p.surjective());
  }
}

TEST(QuotientByDownset, AgreesWithCokernelOnAllLatticesUpTo7) {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& shape : enumerate_lattices(n)) {
      const auto l = shape.monoid();
      for (Elem k = 0; k < l->size(); ++k) {
        const auto a = quotient_by_downset(l, k).projection;
        const auto b = cokernel_by_submonoid(l, principal_downset(*l, k)).projection;
        for (Elem x = 0; x < l->size(); ++x)
          for (Elem y = 0; y < l->size(); ++y) ASSERT_EQ(a(x) == a(y), b(x) == b(y));
      }
    }
}

TEST(NormalSubobjects, OnePerElement) {
  EXPECT_EQ(all_normal_subobjects_semilattice(*fixtures::n5()).size(), 5u);
  EXPECT_EQ(all_normal_subobjects_semilattice(*fixtures::chain(1)), std::vector<Subset>{Subset::of({0})});
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& shape : enumerate_lattices(n)) {
      const auto l = shape.monoid();
      auto fast = all_normal_subobjects_semilattice(*l);
      auto slow = oracle::normal_subsets(*l);
      std::sort(fast.begin(), fast.end(), canonical_less);
      std::sort(slow.begin(), slow.end(), canonical_less);
      EXPECT_EQ(fast, slow);
      EXPECT_EQ(fast.size(), n);
    }
}

TEST(NormalSubobjects, LatticeIsomorphicToL) {
  const CmonContext c;
  for (const auto& m : fixtures::semilattice_fixtures()) {
    const auto l = enumerate_nsub(c, m);
    const auto base = FiniteLattice::from_semilattice(*m);
    // a ↦ ↓a is the isomorphism
    std::vector<Elem> map(m->size());
    for (Elem a = 0; a < m->size(); ++a) {
      const auto idx = l.find(c.encode(inclusion(m, principal_downset(*m, a))));
      ASSERT_TRUE(idx);
      map[a] = *idx;
    }
    EXPECT_TRUE(base.is_isomorphism(l.lattice, map)) << m->display_name();
  }
}

TEST(Fixtures, V4IsAGroupNotASemilattice) {
  const auto v = fixtures::v4();
  EXPECT_TRUE(v->commutative());
  EXPECT_FALSE(is_monoidal_semilattice(*v));
  for (Elem x = 0; x < 4; ++x) EXPECT_EQ(v->op(x, x), 0u);
}
