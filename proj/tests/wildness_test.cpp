#include <gtest/gtest.h>

#include <random>

#include "cmwild/error.hpp"
#include "cmwild/linalg.hpp"
#include "cmwild/wildness.hpp"
#include "test_support.hpp"

using namespace cmwild;

namespace {

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

int rank_of(Verdict v) {
  switch (v) {
    case Verdict::CMWild:
      return 2;
    case Verdict::StrictlyCMInfinite:
      return 1;
    default:
      return 0;
  }
}

using Scan = std::vector<std::pair<int, std::int64_t>>;

}  // namespace

TEST(RegularElement, Examples) {
  auto fermat = make_quotient({"x", "y", "z"}, {"x^4+y^4+z^4"});
  EXPECT_TRUE(verify_regular_element(fermat->parse("x^2"), *fermat));
  auto xz = make_quotient({"x", "y", "z"}, {"x*z"});
  EXPECT_FALSE(verify_regular_element(xz->parse("z"), *xz));
  auto line = make_quotient({"x"}, {});
  EXPECT_TRUE(verify_regular_element(line->parse("x"), *line));
  // an element of the ideal is zero in R, hence not regular
  EXPECT_FALSE(verify_regular_element(fermat->parse("x^4+y^4+z^4"), *fermat));
}

TEST(RegularElement, OnModules) {
  // R/(x) over k[x,y]: y is regular, x kills it
  auto s = make_quotient({"x", "y"}, {});
  ModulePresentation m(s, GradedFreeModule::free(1), {mv_from_poly(s->parse("x"))});
  EXPECT_TRUE(verify_regular_element(s->parse("y"), m));
  EXPECT_FALSE(verify_regular_element(s->parse("x"), m));
  EXPECT_TRUE(verify_regular_element(s->parse("x+y"), m));
}

TEST(RegularSequence, FindExamples) {
  auto fermat = make_quotient({"x", "y", "z"}, {"x^4+y^4+z^4"});
  auto s1 = find_regular_sequence(*fermat);
  EXPECT_EQ(s1.to_strings(), (std::vector<std::string>{"x^2", "y^2"}));
  EXPECT_EQ(s1.m, 4);
  EXPECT_TRUE(s1.verified);

  auto binary = make_quotient({"x", "y"}, {"x^4+y^4"});
  auto s2 = find_regular_sequence(*binary);
  EXPECT_EQ(s2.to_strings(), (std::vector<std::string>{"x^2"}));
  EXPECT_EQ(s2.m, 2);

  auto plane = make_quotient({"x", "y"}, {});
  auto s3 = find_regular_sequence(*plane);
  EXPECT_EQ(s3.to_strings(), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(s3.degrees, (std::vector<int>{1, 1}));
}

TEST(RegularSequence, SearchFallsBackWhenRecipeFails) {
  // x is nilpotent, so x^2 is not regular
  auto r = make_quotient({"x", "y", "z"}, {"x^4"});
  auto s = find_regular_sequence(*r);
  EXPECT_EQ(s.origin, "search");
  EXPECT_EQ(s.elements.size(), 2u);
  EXPECT_TRUE(verify_regular_sequence(*r, s.elements));
}

TEST(RegularSequence, SearchIsSeeded) {
  // x and y are zero divisors, so after z the search needs random forms
  auto r = make_quotient({"x", "y", "z"}, {"x*y"});
  auto a = find_regular_sequence(*r, {7, 50});
  auto b = find_regular_sequence(*r, {7, 50});
  EXPECT_EQ(a.to_strings(), b.to_strings());
  EXPECT_TRUE(verify_regular_sequence(*r, a.elements));
}

TEST(RegularSequence, NonCohenMacaulayExhaustsBudget) {
  // two planes meeting in a point: dimension 2, depth 1
  auto r = make_quotient({"x", "y", "z", "w"}, {"x*z", "x*w", "y*z", "y*w"});
  EXPECT_THROW(find_regular_sequence(*r, {0, 12}), BudgetExhausted);
}

TEST(ArtinianReduction, Examples) {
  auto fermat = make_quotient({"x", "y", "z"}, {"x^4+y^4+z^4"});
  auto rbar = artinian_reduction(*fermat, {fermat->parse("x^2"), fermat->parse("y^2")});
  EXPECT_EQ(strings(rbar->groebner_basis()), (std::vector<std::string>{"z^4", "x^2", "y^2"}));

  auto plane = make_quotient({"x", "y"}, {});
  auto k = artinian_reduction(*plane, {plane->parse("x"), plane->parse("y")});
  EXPECT_EQ(hilbert_series(*k).as_polynomial(), (std::vector<std::int64_t>{1}));
  EXPECT_EQ(hilbert_dim(*k, 0), 1);
  EXPECT_EQ(hilbert_dim(*k, 1), 0);

  auto binary = make_quotient({"x", "y"}, {"x^4+y^4"});
  auto b = artinian_reduction(*binary, {binary->parse("x^2")});
  EXPECT_EQ(strings(b->groebner_basis()), (std::vector<std::string>{"y^4", "x^2"}));

  EXPECT_THROW(artinian_reduction(*fermat, {fermat->parse("x^2")}), InputError);
}

TEST(Certificate, FermatQuartic) {
  auto r = make_quotient({"x", "y", "z"}, {"x^4+y^4+z^4"});
  auto rep = wildness_certificate(r);
  EXPECT_EQ(rep.verdict, Verdict::CMWild);
  EXPECT_EQ(rep.sequence.to_strings(), (std::vector<std::string>{"x^2", "y^2"}));
  EXPECT_EQ(rep.sequence.m, 4);
  EXPECT_EQ(rep.d, 2);
  EXPECT_EQ(rep.c, 4);
  EXPECT_EQ(rep.dim_c, 3);
  EXPECT_EQ(rep.scanned, (Scan{{4, 3}, {5, 1}}));
  EXPECT_FALSE(rep.cm_assumed);
  EXPECT_EQ(rep.p, 32003u);
  EXPECT_TRUE(check_witness(*r, rep));
}

TEST(Certificate, BinaryQuartic) {
  auto r = make_quotient({"x", "y"}, {"x^4+y^4"});
  auto rep = wildness_certificate(r);
  EXPECT_EQ(rep.verdict, Verdict::StrictlyCMInfinite);
  EXPECT_EQ(rep.c, 3);
  EXPECT_EQ(rep.dim_c, 2);
  EXPECT_EQ(rep.scanned, (Scan{{3, 2}, {4, 1}}));
}

TEST(Certificate, FermatCubicIsInconclusive) {
  auto r = make_quotient({"x", "y", "z"}, {"x^3+y^3+z^3"});
  auto y = RegularSequence::from({r->parse("x^2"), r->parse("y^2")}, "given");
  auto rep = wildness_certificate(r, y);
  EXPECT_EQ(rep.verdict, Verdict::Inconclusive);
  EXPECT_EQ(rep.scanned, (Scan{{4, 1}}));
  EXPECT_FALSE(rep.c.has_value());
  EXPECT_NE(rep.narrative.find("sufficient only"), std::string::npos);
  // R̄ = k[x,y,z]/(x^2, y^2, z^3); only xyz^2 survives in degree 4
  auto rbar = artinian_reduction(*r, y.elements);
  ASSERT_EQ(component_basis(*rbar, 4).size(), 1u);
  EXPECT_EQ(component_basis(*rbar, 4)[0].to_string(), "x*y*z^2");
}

TEST(Certificate, RejectsBadSequences) {
  auto r = make_quotient({"x", "y", "z"}, {"x*z"});
  EXPECT_THROW(wildness_certificate(r, RegularSequence::from({r->parse("z"), r->parse("y")}, "given")), InputError);
  auto f = make_quotient({"x", "y", "z"}, {"x^4+y^4+z^4"});
  EXPECT_THROW(wildness_certificate(f, RegularSequence::from({f->parse("x^2")}, "given")), InputError);
}

TEST(Certificate, NonCompleteIntersectionAssumesCM) {
  // cone over the twisted cubic: Cohen–Macaulay, not a complete intersection
  auto r = make_quotient({"a", "b", "c", "d"}, {"a*c-b^2", "a*d-b*c", "b*d-c^2"});
  auto rep = wildness_certificate(r);
  EXPECT_TRUE(rep.cm_assumed);
  EXPECT_EQ(rep.verdict, Verdict::Inconclusive);
  EXPECT_NE(rep.narrative.find("assumed"), std::string::npos);
}

TEST(Hypersurface, Examples) {
  auto s3 = make_ring({"x", "y", "z"});
  EXPECT_EQ(hypersurface_report(parse_polynomial("x^4+y^4+z^4", s3)).verdict, Verdict::CMWild);
  auto s2 = make_ring({"x", "y"});
  EXPECT_EQ(hypersurface_report(parse_polynomial("x^4+y^4", s2)).verdict, Verdict::StrictlyCMInfinite);
  EXPECT_EQ(hypersurface_report(parse_polynomial("x^3+y^3+z^3", s3)).verdict, Verdict::Inconclusive);
  EXPECT_THROW(hypersurface_report(Polynomial(s3)), InputError);
  EXPECT_THROW(hypersurface_report(parse_polynomial("x^4+y", s3)), InputError);
}

TEST(CompleteIntersection, CubicAndQuadric) {
  auto s = make_ring({"x0", "x1", "x2", "x3"});
  std::vector<Polynomial> fs{parse_polynomial("x0^3+x1^3+x2^3+x3^3", s), parse_polynomial("x0*x1+x2*x3", s)};
  auto rep = complete_intersection_report(fs);
  EXPECT_EQ(rep.verdict, Verdict::CMWild);
  EXPECT_EQ(rep.sequence.to_strings(), (std::vector<std::string>{"x2^2", "x3"}));
  EXPECT_EQ(rep.c, 3);
  EXPECT_FALSE(rep.cm_assumed);
  // independent oracle: rank of the degree-3 part of (fs, y)
  auto gens = fs;
  gens.insert(gens.end(), rep.sequence.elements.begin(), rep.sequence.elements.end());
  EXPECT_EQ(rep.dim_c, testutil::degree_dim_oracle(s, gens, 3));
  EXPECT_EQ(rep.dim_c, 3);
}

TEST(CompleteIntersection, TwoQuadricsAreInconclusive) {
  auto s = make_ring({"x0", "x1", "x2", "x3"});
  auto rep = complete_intersection_report(
      {parse_polynomial("x0*x1+x2*x3", s), parse_polynomial("x0^2+x1^2+x2^2+x3^2", s)});
  EXPECT_EQ(rep.verdict, Verdict::Inconclusive);
  EXPECT_EQ(rep.scanned, (Scan{{3, 1}}));
}

TEST(CompleteIntersection, RejectsZeroDivisorPairs) {
  auto s = make_ring({"x0", "x1", "x2", "x3"});
  EXPECT_THROW(complete_intersection_report({parse_polynomial("x0*x1", s), parse_polynomial("x0*x2", s)}), InputError);
  EXPECT_THROW(complete_intersection_report({parse_polynomial("x0", s)}), InputError);
}

TEST(Certificate, ScanMatchesEnumerationOracle) {
  for (const auto& rels : std::vector<std::vector<std::string>>{{"x^4+y^4+z^4"}, {"x^5+y^5+z^5"}, {"x^4+x*y^3+z^4"}}) {
    auto r = make_quotient({"x", "y", "z"}, rels);
    auto rep = wildness_certificate(r);
    auto gens = r->relations();
    gens.insert(gens.end(), rep.sequence.elements.begin(), rep.sequence.elements.end());
    for (const auto& [c, dim] : rep.scanned) EXPECT_EQ(dim, testutil::degree_dim_oracle(r->ring(), gens, c));
    EXPECT_TRUE(check_witness(*r, rep));
  }
}

TEST(Certificate, WideningTheWindowNeverWeakens) {
  for (const auto& rels : std::vector<std::vector<std::string>>{{"x^4+y^4+z^4"}, {"x^3+y^3+z^3"}, {"x^6+y^6+z^6"}}) {
    auto r = make_quotient({"x", "y", "z"}, rels);
    auto full = wildness_certificate(r);
    const int lo = full.sequence.m - full.d + 2;
    int prev = -1;
    for (int hi = lo; hi <= lo + 6; ++hi) {
      auto rep = wildness_certificate(r, full.sequence, std::pair{lo, hi});
      EXPECT_GE(rank_of(rep.verdict), prev);
      prev = rank_of(rep.verdict);
    }
    EXPECT_EQ(prev, rank_of(full.verdict));
  }
}

TEST(Certificate, WindowBelowBoundIsClipped) {
  auto r = make_quotient({"x", "y", "z"}, {"x^4+y^4+z^4"});
  auto rep = wildness_certificate(r, std::nullopt, std::pair{1, 8});
  EXPECT_EQ(rep.scanned.front().first, 4);
  EXPECT_EQ(rep.scanned.back().first, 8);
  EXPECT_EQ(rep.scanned.back().second, 0);
}

TEST(Hypersurface, RecipeAgreesWithAutomaticScan) {
  std::mt19937_64 rng(31);
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    auto s = make_ring(names);
    for (int e = 4; e <= 6; ++e) {
      auto f = Polynomial(s);
      for (std::size_t i = 0; i < n; ++i) f = f + Polynomial::variable(s, i, e);
      f = f + testutil::random_homogeneous(rng, s, e, 2);
      auto a = hypersurface_report(f);
      auto b = wildness_certificate(make_quotient(s, {f}));
      EXPECT_EQ(a.verdict, b.verdict) << f.to_string();
    }
  }
}

TEST(Certificate, InvariantUnderLinearSubstitution) {
  std::mt19937_64 rng(41);
  auto s = make_ring({"x", "y", "z"});
  const auto& fld = s->field();
  auto f = parse_polynomial("x^4+y^4+z^4", s);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a(3, 3);
    do {
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) a(i, j) = fld.random(rng);
    } while (determinant(fld, a) == 0);
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < 3; ++i) {
      std::vector<Term> terms;
      for (std::size_t j = 0; j < 3; ++j) terms.push_back({Monomial::variable(3, j), a(i, j)});
      images.emplace_back(s, std::move(terms));
    }
    auto g = f.substitute(images);
    auto rep = wildness_certificate(make_quotient(s, {g}));
    EXPECT_EQ(rep.verdict, Verdict::CMWild);
  }
}
