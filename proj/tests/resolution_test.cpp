#include <gtest/gtest.h>

#include <random>

#include "cmwild/error.hpp"
#include "cmwild/resolution.hpp"
#include "test_support.hpp"

using namespace cmwild;

namespace {

RingPtr fermat_quartic() { return make_quotient({"x", "y", "z"}, {"x^4+y^4+z^4"}); }

std::vector<Polynomial> polys(const RingPtr& r, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(r->parse(t));
  return out;
}

ModulePresentation cyclic(const RingPtr& r, const std::vector<std::string>& rels) {
  std::vector<ModuleVector> vs;
  for (const auto& p : polys(r, rels)) vs.push_back(mv_from_poly(p));
  return {r, GradedFreeModule::free(1), vs};
}

// v and w span the same line.
bool proportional(const PrimeField& f, const ModuleVector& v, const ModuleVector& w) {
  if (v.is_zero() || w.is_zero()) return v.is_zero() && w.is_zero();
  return mv_monic(f, v) == mv_monic(f, w);
}

// Σ_i (-1)^i Σ_j β_{ij} t^j, as a Hilbert numerator over (1-t)^n.
HilbertSeries euler_series(const Resolution& res, std::size_t nvars) {
  HilbertSeries h{nvars, {}};
  for (const auto& [key, rank] : betti_table(res)) {
    auto j = static_cast<std::size_t>(key.second);
    if (h.numerator.size() <= j) h.numerator.resize(j + 1, 0);
    h.numerator[j] += (key.first % 2 == 0 ? rank : -rank);
  }
  return h;
}

}  // namespace

TEST(Koszul, RanksAndDegrees) {
  auto r = fermat_quartic();
  auto k = koszul_complex(r, polys(r, {"x^2", "y^2"}));
  ASSERT_EQ(k.length(), 2);
  EXPECT_EQ(k.module(0).degrees, (std::vector<int>{0}));
  EXPECT_EQ(k.module(1).degrees, (std::vector<int>{2, 2}));
  EXPECT_EQ(k.module(2).degrees, (std::vector<int>{4}));
  EXPECT_EQ(k.module(1).twists(), (std::vector<int>{-2, -2}));

  auto k1 = koszul_complex(r, polys(r, {"x^2"}));
  ASSERT_EQ(k1.length(), 1);
  EXPECT_EQ(k1.module(1).degrees, (std::vector<int>{2}));
  EXPECT_EQ(k1.map(1).entry(r->ring(), 0, 0).to_string(), "x^2");

  auto s = make_quotient({"x", "y", "z"}, {});
  auto k3 = koszul_complex(s, polys(s, {"x", "y", "z"}));
  std::vector<std::size_t> ranks;
  for (int i = 0; i <= 3; ++i) ranks.push_back(k3.module(i).rank());
  EXPECT_EQ(ranks, (std::vector<std::size_t>{1, 3, 3, 1}));
  EXPECT_EQ(k3.module(3).degrees, (std::vector<int>{3}));
}

TEST(Koszul, SignConvention) {
  auto s = make_quotient({"x", "y", "z"}, {});
  auto k = koszul_complex(s, polys(s, {"x", "y", "z"}));
  // ∂(e_{012}) = y_0 e_{12} - y_1 e_{02} + y_2 e_{01}; K_2 order {01, 02, 12}
  const auto& col = k.map(3).columns[0];
  EXPECT_EQ(mv_component(col, 0, s->ring()).to_string(), "z");
  EXPECT_EQ(mv_component(col, 1, s->ring()).to_string(), "-y");
  EXPECT_EQ(mv_component(col, 2, s->ring()).to_string(), "x");
}

TEST(Koszul, SquaresToZeroWithCopies) {
  auto r = fermat_quartic();
  for (std::size_t n : {1u, 2u, 3u}) {
    auto k = koszul_complex(r, polys(r, {"x^2", "y^2"}), n);
    EXPECT_TRUE(is_complex(k));
    EXPECT_EQ(k.module(1).rank(), 2 * n);
    EXPECT_EQ(k.module(2).degrees, std::vector<int>(n, 4));
  }
  auto s = make_quotient({"a", "b", "c", "d"}, {});
  EXPECT_TRUE(is_complex(koszul_complex(s, polys(s, {"a^2", "b", "c^3", "a*d"}), 2)));
}

TEST(Koszul, RejectsBadInput) {
  auto r = fermat_quartic();
  EXPECT_THROW(koszul_complex(r, {Polynomial::constant(r->ring(), 1)}), InputError);
  EXPECT_THROW(koszul_complex(r, polys(r, {"x^2+y"})), InputError);
}

TEST(Syzygies, Examples) {
  auto s = make_quotient({"x", "y"}, {});
  const auto& f = s->field();
  FreeMap phi{GradedFreeModule{{2, 2}}, GradedFreeModule::free(1),
              {mv_from_poly(s->parse("x^2")), mv_from_poly(s->parse("y^2"))}};
  auto syz = syzygies(s, phi);
  ASSERT_EQ(syz.columns.size(), 1u);
  EXPECT_TRUE(proportional(f, syz.columns[0], mv_from_polys({s->parse("y^2"), s->parse("-x^2")})));
  EXPECT_EQ(syz.source.degrees, (std::vector<int>{4}));

  auto id = identity_map(GradedFreeModule::free(1), 2);
  EXPECT_TRUE(syzygies(s, id).columns.empty());

  FreeMap xx{GradedFreeModule{{1, 1}}, GradedFreeModule::free(1),
             {mv_from_poly(s->parse("x")), mv_from_poly(s->parse("x"))}};
  auto k = syzygies(s, xx);
  ASSERT_EQ(k.columns.size(), 1u);
  EXPECT_TRUE(proportional(f, k.columns[0], mv_from_polys({s->parse("1"), s->parse("-1")})));
}

TEST(Syzygies, OverQuotientRing) {
  // over k[x,y]/(xy), ker(·x) = (y)
  auto r = make_quotient({"x", "y"}, {"x*y"});
  FreeMap phi{GradedFreeModule{{1}}, GradedFreeModule::free(1), {mv_from_poly(r->parse("x"))}};
  auto k = syzygies(r, phi);
  ASSERT_EQ(k.columns.size(), 1u);
  EXPECT_TRUE(proportional(r->field(), k.columns[0], mv_from_poly(r->parse("y"))));
  EXPECT_EQ(k.source.degrees, (std::vector<int>{2}));
}

TEST(MinimalResolution, ArtinianQuotientMatchesKoszul) {
  auto r = fermat_quartic();
  auto res = minimal_resolution(cyclic(r, {"x^2", "y^2"}), 2);
  ASSERT_EQ(res.length(), 2);
  EXPECT_EQ(res.module(0).degrees, (std::vector<int>{0}));
  EXPECT_EQ(res.module(1).degrees, (std::vector<int>{2, 2}));
  EXPECT_EQ(res.module(2).degrees, (std::vector<int>{4}));
  EXPECT_EQ(betti_table(res), betti_table(koszul_complex(r, polys(r, {"x^2", "y^2"}))));
  EXPECT_TRUE(res.minimal);
}

TEST(MinimalResolution, FreeModuleHasLengthZero) {
  auto r = fermat_quartic();
  for (int k : {1, 3}) {
    auto res = minimal_resolution(ModulePresentation(r, GradedFreeModule::free(1), {}), k);
    EXPECT_EQ(res.length(), 0);
    EXPECT_TRUE(res.complete);
    EXPECT_EQ(betti_table(res), (BettiTable{{{0, 0}, 1}}));
  }
}

TEST(MinimalResolution, FamilyMemberFirstStep) {
  auto r = fermat_quartic();
  auto res = minimal_resolution(cyclic(r, {"x^2", "y^2", "x*y*z^2+x*z^3+2*y*z^3"}), 1);
  ASSERT_EQ(res.length(), 1);
  EXPECT_EQ(res.module(1).degrees, (std::vector<int>{2, 2, 4}));
  auto b = betti_table(res);
  EXPECT_EQ((b[{1, 2}]), 2);
  EXPECT_EQ((b[{1, 4}]), 1);
}

TEST(MinimalResolution, RedundantGeneratorsAreDropped) {
  // G = R ⊕ R(-1) with e_1 = x e_0: M ≅ R/(y^2) over k[x,y]
  auto s = make_quotient({"x", "y"}, {});
  ModulePresentation m(s, GradedFreeModule{{0, 1}},
                       {mv_from_polys({s->parse("x"), s->parse("-1")}), mv_from_polys({s->parse("y^2"), Polynomial(s->ring())})});
  auto res = minimal_resolution(m, 3);
  EXPECT_EQ(res.module(0).degrees, (std::vector<int>{0}));
  EXPECT_EQ(res.module(1).degrees, (std::vector<int>{2}));
  EXPECT_EQ(res.length(), 1);
  EXPECT_TRUE(res.complete);
  EXPECT_TRUE(is_complex(res));
  EXPECT_TRUE(is_exact(res));
}

TEST(MinimalResolution, KnownBettiTables) {
  // S/(x^2, xy, y^2): Hilbert–Burch, 1 / 3 in degree 2 / 2 in degree 3
  auto s = make_quotient({"x", "y"}, {});
  auto res = minimal_resolution(cyclic(s, {"x^2", "x*y", "y^2"}), 4);
  EXPECT_EQ(betti_table(res), (BettiTable{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}}));
  EXPECT_TRUE(res.complete);

  // k[x,y]/(xy) acting on R/(x): periodic, β_{i,i} = 1
  auto r = make_quotient({"x", "y"}, {"x*y"});
  auto per = minimal_resolution(cyclic(r, {"x"}), 5);
  ASSERT_EQ(per.length(), 5);
  for (int i = 0; i <= 5; ++i) EXPECT_EQ(per.module(i).degrees, (std::vector<int>{i}));
  EXPECT_TRUE(is_complex(per));
  EXPECT_TRUE(is_exact(per));
}

TEST(MinimalResolution, EulerCharacteristicMatchesHilbertSeries) {
  // over a polynomial ring every resolution is finite, so
  // HS(M) = Σ (-1)^i β_{ij} t^j / (1-t)^n
  std::mt19937_64 rng(21);
  auto s = make_quotient({"x", "y", "z"}, {});
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<ModuleVector> rels;
    int count = 1 + static_cast<int>(rng() % 3);
    for (int g = 0; g < count; ++g)
      rels.push_back(mv_from_poly(testutil::random_homogeneous(rng, s->ring(), 1 + static_cast<int>(rng() % 2), 3)));
    ModulePresentation m(s, GradedFreeModule::free(1), rels);
    auto res = minimal_resolution(m, 4);
    EXPECT_TRUE(res.complete || res.length() == 4);
    if (!res.complete) continue;
    EXPECT_EQ(euler_series(res, 3).normalized(), m.hilbert_series().normalized()) << "trial " << trial;
    EXPECT_TRUE(is_complex(res));
    EXPECT_TRUE(is_exact(res));
    EXPECT_TRUE(has_no_unit_entries(res));
  }
}

TEST(MinimalResolution, ComplexExactAndMinimalOverQuotients) {
  std::mt19937_64 rng(22);
  auto r = fermat_quartic();
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<ModuleVector> rels;
    for (int g = 0; g < 2; ++g)
      rels.push_back(mv_from_polys({testutil::random_homogeneous(rng, r->ring(), 2, 3),
                                    testutil::random_homogeneous(rng, r->ring(), 1, 3)}));
    ModulePresentation m(r, GradedFreeModule{{0, 1}}, rels);
    auto res = minimal_resolution(m, 3);
    EXPECT_TRUE(is_complex(res));
    EXPECT_TRUE(is_exact(res));
    EXPECT_TRUE(res.minimal);
    for (const auto& d : res.maps) EXPECT_TRUE(d.is_homogeneous());
  }
}

TEST(MinimalResolution, KoszulEquivalenceForRegularSequences) {
  struct Case {
    std::vector<std::string> vars, rels, y;
  };
  std::vector<Case> cases{
      {{"x", "y", "z"}, {"x^4+y^4+z^4"}, {"x^2", "y^2"}},
      {{"x", "y", "z"}, {"x^4+y^4+z^4"}, {"x", "y"}},
      {{"x", "y"}, {"x^4+y^4"}, {"x^2"}},
      {{"x", "y", "z"}, {}, {"x", "y^2", "z^3"}},
      {{"a", "b", "c", "d"}, {"a^3+b^3+c^3+d^3", "a*b+c*d"}, {"d^2", "c"}},
  };
  for (const auto& c : cases) {
    auto r = make_quotient(c.vars, c.rels);
    auto y = polys(r, c.y);
    auto res = minimal_resolution(cyclic(r, c.y), static_cast<int>(y.size()));
    EXPECT_EQ(betti_table(res), betti_table(koszul_complex(r, y))) << c.y[0];
  }
}

TEST(ReduceMod, Examples) {
  auto r = fermat_quartic();
  auto y = polys(r, {"x^2", "y^2"});
  // R(-2) mod y is R̄(-2)
  ModulePresentation free2(r, GradedFreeModule{{2}}, {});
  auto red = reduce_mod(free2, y);
  auto rbar = r->with_relations(y);
  for (int t = 0; t <= 9; ++t) EXPECT_EQ(red.hilbert_dim(t), t < 2 ? 0 : hilbert_dim(*rbar, t - 2));

  // Ω^1(R̄) = F_1 / Im δ_2; after reduction y kills every generator
  auto res = minimal_resolution(cyclic(r, {"x^2", "y^2"}), 2);
  auto omega_bar = reduce_mod(syzygy_module(res, 1), y);
  const auto& f = r->field();
  for (const auto& yi : y)
    for (std::uint32_t j = 0; j < omega_bar.ambient().rank(); ++j)
      EXPECT_TRUE(omega_bar.submodule().contains(mv_mul_poly(f, yi.terms(), mv_unit(3, j))));

  ModulePresentation zero(r, GradedFreeModule{}, {});
  auto z = reduce_mod(zero, y);
  EXPECT_EQ(z.ambient().rank(), 0u);
  EXPECT_EQ(z.hilbert_series().pole_order(), -1);
}

TEST(ComparisonMap, IdentityWhenComplexesCoincide) {
  auto r = fermat_quartic();
  auto y = polys(r, {"x^2", "y^2"});
  auto k = koszul_complex(r, y);
  auto res = minimal_resolution(cyclic(r, {"x^2", "y^2"}), 2);
  auto cm = comparison_map(k, res);
  ASSERT_EQ(cm.phi.size(), 3u);
  EXPECT_TRUE(is_chain_map(cm, k, res));
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(cm.phi[i].columns, identity_map(k.module(static_cast<int>(i)), 3).columns);
  // δ_2 may differ from ∂_2 by a sign; φ_2 is then ±1
  ASSERT_EQ(cm.phi[2].columns.size(), 1u);
  EXPECT_TRUE(proportional(r->field(), cm.phi[2].columns[0], mv_unit(3, 0)));
}

TEST(ComparisonMap, EmbedsKoszulIntoFamilyMember) {
  auto r = fermat_quartic();
  auto y = polys(r, {"x^2", "y^2"});
  auto k = koszul_complex(r, y);
  auto res = minimal_resolution(cyclic(r, {"x^2", "y^2", "x*y*z^2+x*z^3+2*y*z^3"}), 2);
  auto cm = comparison_map(k, res);
  EXPECT_TRUE(is_chain_map(cm, k, res));
  ASSERT_EQ(cm.phi[1].columns.size(), 2u);
  EXPECT_EQ(cm.phi[1].columns[0], mv_unit(3, 0));
  EXPECT_EQ(cm.phi[1].columns[1], mv_unit(3, 1));
}

TEST(ComparisonMap, RejectsMismatchedTargets) {
  auto r = fermat_quartic();
  auto k = koszul_complex(r, polys(r, {"x^2", "y^2"}), 2);
  auto res = minimal_resolution(cyclic(r, {"x^2", "y^2"}), 1);
  EXPECT_THROW(comparison_map(k, res), InputError);
}

TEST(BettiJson, Shape) {
  auto s = make_quotient({"x", "y"}, {});
  auto k = koszul_complex(s, polys(s, {"x^2", "y^2"}));
  EXPECT_EQ(betti_json(k),
            R"({"betti":[{"i":0,"j":0,"rank":1},{"i":1,"j":2,"rank":2},{"i":2,"j":4,"rank":1}],"minimal":true})");
}
