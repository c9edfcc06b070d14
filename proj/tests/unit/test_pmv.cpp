#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "pealab/corpus.hpp"
#include "pealab/error.hpp"
#include "pealab/pmv.hpp"
#include "pealab/pogroup.hpp"
#include "pealab/riesz.hpp"
#include "pealab/statespace.hpp"

using namespace pealab;
using oracle::q;

namespace {

// Same operations after matching elements by label.
bool equal_by_label(const PmvTable& a, const PmvTable& b) {
  if (a.size() != b.size()) return false;
  std::map<std::string, ElementId> idx;
  for (ElementId i = 0; i < b.size(); ++i) idx[b.label(i)] = i;
  std::vector<ElementId> m(a.size());
  for (ElementId i = 0; i < a.size(); ++i) {
    auto it = idx.find(a.label(i));
    if (it == idx.end()) return false;
    m[i] = it->second;
  }
  if (m[a.zero()] != b.zero() || m[a.one()] != b.one()) return false;
  for (ElementId x = 0; x < a.size(); ++x) {
    if (m[a.minus(x)] != b.minus(m[x]) || m[a.tilde(x)] != b.tilde(m[x])) return false;
    for (ElementId y = 0; y < a.size(); ++y)
      if (m[a.oplus(x, y)] != b.oplus(m[x], m[y])) return false;
  }
  return true;
}

std::vector<RationalVector> vertex_values(const StatePolytope& p) {
  std::vector<RationalVector> out;
  for (const auto& v : p.vertices) out.push_back(v.values);
  return out;
}

}  // namespace

TEST(GammaLgroup, ChainOfThree) {
  const auto t = gamma_lgroup({2});
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t.zero(), 0u);
  EXPECT_EQ(t.one(), 2u);
  EXPECT_EQ(t.oplus(1, 1), 2u);  // 1 ⊕ 1 = min(2, 2)
  EXPECT_EQ(t.oplus(2, 1), 2u);
  EXPECT_EQ(t.minus(1), 1u);
  EXPECT_EQ(t.tilde(0), 2u);
  EXPECT_EQ(t.odot(1, 1), 0u);  // (1 ⊕ 1)˜ = 0
  EXPECT_EQ(t.odot(2, 1), 1u);
  EXPECT_TRUE(validate_pmv(t).passed());
}

TEST(GammaLgroup, BoxLabelsAndTruncation) {
  const auto t = gamma_lgroup({1, 2});
  ASSERT_EQ(t.size(), 6u);
  EXPECT_EQ(t.label(t.zero()), "(0,0)");
  EXPECT_EQ(t.label(t.one()), "(1,2)");
  ElementId a = 0, b = 0;
  for (ElementId i = 0; i < t.size(); ++i) {
    if (t.label(i) == "(1,1)") a = i;
    if (t.label(i) == "(0,2)") b = i;
  }
  EXPECT_EQ(t.oplus(a, b), t.one());
  EXPECT_EQ(t.label(t.minus(a)), "(0,1)");
  EXPECT_TRUE(validate_pmv(t).passed());
}

TEST(GammaLgroup, RejectsNonPositiveUnit) {
  EXPECT_THROW(gamma_lgroup({0}), StructuralError);
  EXPECT_THROW(gamma_lgroup({1, -1}), StructuralError);
  EXPECT_THROW(gamma_lgroup({}), StructuralError);
}

TEST(ValidatePmv, MutationsAreCaught) {
  const auto base = gamma_lgroup({3});
  RationalRng rng(17);
  int caught = 0;
  for (int k = 0; k < 50; ++k) {
    auto t = base;
    const auto x = static_cast<ElementId>(rng.integer(0, 3));
    const auto y = static_cast<ElementId>(rng.integer(0, 3));
    const auto z = static_cast<ElementId>(rng.integer(0, 3));
    if (base.oplus(x, y) == z) continue;
    t.set_oplus(x, y, z);
    const auto r = validate_pmv(t);
    EXPECT_FALSE(r.passed()) << x << " " << y << " " << z;
    caught += r.passed() ? 0 : 1;
  }
  EXPECT_GT(caught, 0);
}

TEST(ValidatePmv, BrokenInvolutionIsA8) {
  auto t = gamma_lgroup({2});
  t.set_tilde(1, 0);
  const auto r = validate_pmv(t);
  ASSERT_FALSE(r.passed());
  bool a8 = false;
  for (const auto& v : r.violations) a8 |= v.axiom == "A8";
  EXPECT_TRUE(a8);
}

TEST(ValidatePmv, BrokenUnitIsA4) {
  auto t = gamma_lgroup({2});
  t.set_minus(2, 1);
  const auto r = validate_pmv(t);
  bool a4 = false;
  for (const auto& v : r.violations) a4 |= v.axiom == "A4";
  EXPECT_TRUE(a4);
}

TEST(PmvOrder, ChainIsTotal) {
  const auto t = gamma_lgroup({3});
  const auto o = pmv_order(t);
  for (ElementId x = 0; x < 4; ++x)
    for (ElementId y = 0; y < 4; ++y) EXPECT_EQ(o[x][y], x <= y);
}

TEST(PmvToPea, ChainOfThreeHasUndefinedTop) {
  const auto pea = pmv_to_pea(gamma_lgroup({2}));
  EXPECT_TRUE(validate_axioms(pea).passed());
  EXPECT_EQ(pea.sum(1, 1), std::optional<ElementId>(2));
  EXPECT_FALSE(pea.defined(1, 2));
  EXPECT_FALSE(pea.defined(2, 2));
  EXPECT_TRUE(has_rdp2(pea).holds);
}

TEST(PmvToPea, MatchesIntervalOfGroup) {
  const auto g = PoGroupPresentation::free_abelian(2, StandardCone{});
  const auto interval = gamma_interval(g, {{1, 2}});
  const auto from_pmv = pmv_to_pea(gamma_lgroup({1, 2}));
  const auto& direct = interval.finite().table;
  ASSERT_EQ(from_pmv.size(), direct.size());
  for (ElementId a = 0; a < direct.size(); ++a)
    for (ElementId b = 0; b < direct.size(); ++b) {
      const auto a2 = *from_pmv.find(direct.label(a));
      const auto b2 = *from_pmv.find(direct.label(b));
      const auto s1 = direct.sum(a, b);
      const auto s2 = from_pmv.sum(a2, b2);
      ASSERT_EQ(s1.has_value(), s2.has_value());
      if (s1) EXPECT_EQ(direct.label(*s1), from_pmv.label(*s2));
    }
}

TEST(PeaToPmv, IntervalMatchesGammaLgroup) {
  const auto g = PoGroupPresentation::free_abelian(2, StandardCone{});
  const auto pmv = pea_to_pmv(gamma_interval(g, {{2, 1}}).finite().table);
  EXPECT_TRUE(validate_pmv(pmv).passed());
  EXPECT_TRUE(equal_by_label(pmv, gamma_lgroup({2, 1})));
}

TEST(PeaToPmv, RoundTripOnRdp2Corpus) {
  for (const auto& t : corpus::tables()) {
    if (!has_rdp2(t).holds) {
      EXPECT_THROW(pea_to_pmv(t), NotApplicable) << t.name();
      continue;
    }
    const auto m = pea_to_pmv(t);
    EXPECT_TRUE(validate_pmv(m).passed()) << t.name();
    EXPECT_TRUE(same_partial_table(pmv_to_pea(m), t)) << t.name();
    EXPECT_TRUE(pea_to_pmv(pmv_to_pea(m)) == m) << t.name();
  }
}

TEST(PeaToPmv, Mo2IsRejected) {
  EXPECT_THROW(pea_to_pmv(corpus::mo(2)), NotApplicable);
}

TEST(PmvStates, CoincideWithPeaStates) {
  for (const auto& m : {gamma_lgroup({2}), gamma_lgroup({1, 2}), gamma_lgroup({1, 1, 1}), gamma_lgroup({4})}) {
    const auto a = enumerate_states(pmv_state_system(m));
    const auto b = state_polytope(pmv_to_pea(m));
    EXPECT_EQ(vertex_values(a), vertex_values(b));
    EXPECT_EQ(a.affine_dim, b.affine_dim);
  }
}

TEST(PmvStates, ChainState) {
  const auto p = enumerate_states(pmv_state_system(gamma_lgroup({2})));
  ASSERT_EQ(p.vertices.size(), 1u);
  EXPECT_EQ(p.vertices[0].values, (RationalVector{q(0), q(1, 2), q(1)}));
}
