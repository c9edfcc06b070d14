#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pealab/corpus.hpp"
#include "pealab/error.hpp"
#include "pealab/riesz.hpp"

using namespace pealab;

namespace {

std::array<bool, 5> pattern(const RieszReport& r) {
  return {r.rip.holds, r.rdp0.holds, r.rdp.holds, r.rdp1.holds, r.rdp2.holds};
}

const std::array<bool, 5> kAll{true, true, true, true, true};

}  // namespace

TEST(Riesz, ChainsHaveEverything) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(pattern(ladder_report(corpus::chain(n))), kAll) << n;
}

TEST(Riesz, TwoElementAlgebra) { EXPECT_EQ(pattern(ladder_report(corpus::boolean(1))), kAll); }

TEST(Riesz, BooleanHasRdp2) {
  EXPECT_TRUE(has_rdp2(corpus::boolean(2)).holds);
  EXPECT_TRUE(has_rdp2(corpus::boolean(3)).holds);
  EXPECT_TRUE(has_rip(corpus::boolean(2)).holds);
}

TEST(Riesz, Mo2FailsRefinementButInterpolates) {
  const auto t = corpus::mo(2);
  EXPECT_TRUE(has_rip(t).holds);
  const auto rdp = has_rdp(t);
  ASSERT_FALSE(rdp.holds);
  ASSERT_FALSE(rdp.witnesses.empty());
  // The witness is a decomposition of 1 with no refinement at all.
  const auto& w = rdp.witnesses.front().tuple;
  ASSERT_EQ(w.size(), 4u);
  EXPECT_TRUE(refinements(t, w[0], w[1], w[2], w[3]).empty());
  EXPECT_EQ(t.sum(w[0], w[1]), t.sum(w[2], w[3]));
  // a + a' = b + b' has no refinement.
  const ElementId a = *t.find("a"), ap = *t.find("a'"), b = *t.find("b"), bp = *t.find("b'");
  EXPECT_TRUE(refinements(t, a, ap, b, bp).empty());
}

TEST(Riesz, Mo2PatternMatchesBruteForce) {
  const auto t = corpus::mo(2);
  const auto r = ladder_report(t);
  EXPECT_EQ(r.rip.holds, oracle::rip(t));
  EXPECT_EQ(r.rdp0.holds, oracle::rdp0(t));
  // Settled by the scan: a ≤ 1 = b + b' has no split a = d₁ + d₂ with d₁ ≤ b, d₂ ≤ b'.
  EXPECT_FALSE(r.rdp0.holds);
  EXPECT_EQ(pattern(r), (std::array<bool, 5>{true, false, false, false, false}));
}

TEST(Riesz, AllPropertiesAgreeWithBruteForceOnCorpus) {
  for (const auto& t : corpus::tables()) {
    const auto r = ladder_report(t);
    const auto o = derive_order(t);
    EXPECT_EQ(r.rip.holds, oracle::rip(t)) << t.name();
    EXPECT_EQ(r.rdp0.holds, oracle::rdp0(t)) << t.name();
    EXPECT_EQ(r.rdp.holds, oracle::rdp_like(t, [](ElementId, ElementId) { return true; })) << t.name();
    EXPECT_EQ(r.rdp1.holds, oracle::rdp_like(t, [&](ElementId d2, ElementId d3) {
      for (ElementId x = 0; x < t.size(); ++x)
        for (ElementId y = 0; y < t.size(); ++y)
          if (o.leq(x, d2) && o.leq(y, d3) && !oracle::commute(t, x, y)) return false;
      return true;
    })) << t.name();
    EXPECT_EQ(r.rdp2.holds, oracle::rdp_like(t, [&](ElementId d2, ElementId d3) {
      return oracle::meet(t, d2, d3) == std::optional<ElementId>(t.zero());
    })) << t.name();
  }
}

TEST(Riesz, LadderHoldsOnCorpus) {
  for (const auto& t : corpus::tables()) {
    const auto r = ladder_report(t);
    EXPECT_TRUE(r.ladder_consistent()) << t.name();
    if (!r.rdp2.holds) EXPECT_FALSE(r.rdp2.witnesses.empty()) << t.name();
  }
}

TEST(Riesz, CommutativeCollapse) {
  for (const auto& t : corpus::tables()) {
    if (!is_commutative(t)) continue;
    const auto r = ladder_report(t);
    EXPECT_EQ(r.rdp0.holds, r.rdp1.holds) << t.name();
  }
}

TEST(Riesz, Rdp2ImpliesLattice) {
  for (const auto& t : corpus::tables()) {
    if (!has_rdp2(t).holds) continue;
    EXPECT_TRUE(is_lattice(derive_order(t))) << t.name();
  }
}

TEST(Riesz, WitnessesAreCappedAndDeterministic) {
  const auto t = corpus::mo(3);
  const auto a = has_rdp(t);
  const auto b = has_rdp(t);
  EXPECT_LE(a.witnesses.size(), kMaxWitnesses);
  ASSERT_EQ(a.witnesses.size(), b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) EXPECT_EQ(a.witnesses[i].tuple, b.witnesses[i].tuple);
}

TEST(Riesz, RefinementsSatisfyEquations) {
  const auto t = corpus::chain(4);
  for (const auto& d : refinements(t, 2, 2, 1, 3)) {
    EXPECT_EQ(t.sum(d[0], d[1]), std::optional<ElementId>(2));
    EXPECT_EQ(t.sum(d[2], d[3]), std::optional<ElementId>(2));
    EXPECT_EQ(t.sum(d[0], d[2]), std::optional<ElementId>(1));
    EXPECT_EQ(t.sum(d[1], d[3]), std::optional<ElementId>(3));
  }
  EXPECT_EQ(refinements(t, 2, 2, 1, 3).size(), 2u);  // d₁ ∈ {0, 1}
}

TEST(Riesz, HorizontalSumFailsRdp) {
  const auto r = ladder_report(corpus::horizontal_sum());
  EXPECT_FALSE(r.rdp.holds);
  EXPECT_TRUE(r.rip.holds);
}

TEST(ConeRdp, StandardCone) {
  const auto g = PoGroupPresentation::free_abelian(2, StandardCone{});
  const auto w = cone_window(g, 0, 3);
  EXPECT_EQ(w.size(), 16u);
  for (auto p : kRieszLadder) EXPECT_TRUE(cone_rdp(w, g, p).holds_on_window) << to_string(p);
}

TEST(ConeRdp, LexConeInterpolates) {
  const auto g = PoGroupPresentation::free_abelian(2, LexCone{});
  const auto w = cone_window(g, -3, 3);
  EXPECT_TRUE(cone_rdp(w, g, RieszProperty::Rip).holds_on_window);
}

TEST(ConeRdp, TrivialWindow) {
  const auto g = PoGroupPresentation::free_abelian(2, StandardCone{});
  const std::vector<GroupElement> w{zero_element(g)};
  for (auto p : kRieszLadder) EXPECT_TRUE(cone_rdp(w, g, p).holds_on_window);
}

TEST(ConeRdp, WindowTooSmallNamesElement) {
  const auto g = PoGroupPresentation::free_abelian(2, StandardCone{});
  // (1,1) is present but its lower element (1,0) is not.
  const std::vector<GroupElement> w{zero_element(g), GroupElement{{1, 1}}, GroupElement{{0, 1}}};
  try {
    cone_rdp(w, g, RieszProperty::Rdp);
    FAIL() << "expected WindowTooSmall";
  } catch (const WindowTooSmall& e) {
    EXPECT_NE(std::string(e.what()).find("(1,0)"), std::string::npos) << e.what();
  }
}

TEST(ConeRdp, PolyhedralConeWithoutRdp) {
  // Cone generated by (1,0),(1,1),(1,2): 2·(1,1) = (1,0) + (1,2) cannot be refined.
  const auto g = PoGroupPresentation::free_abelian(2, PolyhedralCone{{{1, 0}, {1, 1}, {1, 2}}});
  std::vector<GroupElement> w;
  for (const auto& x : cone_window(g, 0, 2)) w.push_back(x);
  const auto r = cone_rdp(w, g, RieszProperty::Rdp);
  EXPECT_FALSE(r.holds_on_window);
}
