#include <gtest/gtest.h>

#include "polyval/harness.hpp"
#include "polyval/json_io.hpp"

namespace polyval {
namespace {

const NamedValuation kFv{"fv", [](const Polytope& p) { return facet_vector(p, Zeta{1}); }};
const NamedValuation kMv{"mv", [](const Polytope& p) { return moment(p); }};

TEST(RandomPolytope, Deterministic) {
  EXPECT_EQ(random_polytope(2, 42), random_polytope(2, 42));
  EXPECT_EQ(random_polytope(4, 42), random_polytope(4, 42));
}

TEST(RandomPolytope, OptionsRespected) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Polytope p = random_polytope(3, seed, {.contains_origin = true, .max_coord = 2, .max_pts = 8});
    EXPECT_TRUE(p.contains(Vec::zero(3)));
    EXPECT_EQ(p.aff_dim(), 3);
    for (const auto& v : p.vertices())
      for (const auto& c : v.coords()) EXPECT_LE(abs(c), 2);
  }
  EXPECT_THROW(random_polytope(3, 0, {.max_pts = 3}), std::invalid_argument);
}

TEST(CaseSeed, DistinctPerIndex) {
  EXPECT_NE(case_seed(1, 0), case_seed(1, 1));
  EXPECT_NE(case_seed(1, 0), case_seed(2, 0));
  EXPECT_EQ(case_seed(9, 4), case_seed(9, 4));
}

TEST(ValuationCut, FacetVectorAndMomentPass) {
  EXPECT_EQ(check_valuation_cut(kFv, 3, 1, 30).failures, 0);
  EXPECT_EQ(check_valuation_cut(kMv, 2, 1, 30).failures, 0);
  EXPECT_EQ(check_valuation_cut(kFv, 2, 1, 30, Domain::OriginContaining).failures, 0);
}

TEST(ValuationCut, VertexCountFails) {
  const CheckReport r = check_valuation_cut(vertex_count_valuation(), 2, 1, 30);
  EXPECT_GT(r.failures, 0);
  EXPECT_EQ(static_cast<std::size_t>(r.failures), r.witnesses.size());
}

TEST(Contravariance, FacetVectorPassesMomentFails) {
  for (int n = 2; n <= 4; ++n) EXPECT_EQ(check_contravariance(kFv, n, 3, 10).failures, 0) << n;
  const NamedValuation thm13{"thm13", [](const Polytope& p) { return z_contra_nd(p, Zeta{2}, Zeta{Rat(-1, 3)}); }};
  EXPECT_EQ(check_contravariance(thm13, 3, 3, 10).failures, 0);
  EXPECT_GT(check_contravariance(kMv, 2, 3, 10).failures, 0);
  EXPECT_EQ(check_contravariance(kMv, 3, 3, 10, Domain::General, Intertwining::Covariant).failures, 0);
}

TEST(Simplicity, AllKindsVanish) {
  const CheckReport r = check_simplicity(3, 5, 30, Zeta{Rat(-2, 3)});
  EXPECT_EQ(r.failures, 0);
  EXPECT_EQ(r.tallies.at("point"), 10);
  EXPECT_EQ(r.tallies.at("segment"), 10);
  EXPECT_EQ(r.tallies.at("hyperplanar"), 10);
}

TEST(Minkowski, VectorAreasSumToZero) {
  for (int n = 2; n <= 4; ++n) EXPECT_EQ(check_minkowski(n, 8, 10).failures, 0);
}

TEST(Hfv, CoversAllOriginPositions) {
  const CheckReport r = check_hfv(2, 60, Zeta{Rat(5, 3)});
  EXPECT_EQ(r.failures, 0);
  EXPECT_GT(r.tallies.count("interior") ? r.tallies.at("interior") : 0, 0);
  EXPECT_GT(r.tallies.count("vertex") ? r.tallies.at("vertex") : 0, 0);
  EXPECT_GT(r.tallies.count("edge") ? r.tallies.at("edge") : 0, 0);
}

TEST(Cocontra, Passes) { EXPECT_EQ(check_cocontra(4, 30).failures, 0); }

TEST(Extk, IdentityHolds) {
  const NamedValuation thm13{"thm13", [](const Polytope& p) { return z_contra_nd(p, Zeta{1}, Zeta{3}); }};
  const std::vector<Rat> lambdas{Rat(1, 3), Rat(1, 2), Rat(2, 3)};
  for (int n = 3; n <= 4; ++n) {
    const CheckReport r = check_extk(kFv, n, lambdas);
    EXPECT_EQ(r.failures, 0);
    EXPECT_EQ(r.cases_run, 3 * (n - 2));
    EXPECT_EQ(check_extk(thm13, n, lambdas).failures, 0);
  }
}

TEST(Extn, IdentityHoldsWithNonzeroTerms) {
  const std::vector<Rat> lambdas{Rat(1, 3), Rat(1, 2), Rat(2, 3)};
  for (int n = 2; n <= 3; ++n) {
    const CheckReport r = check_extn(kFv, n, lambdas, {Rat(1), Rat(2)});
    EXPECT_EQ(r.failures, 0);
    EXPECT_EQ(r.cases_run, 6);
  }
  const NamedValuation zero{"zero", [](const Polytope& p) { return Vec::zero(p.ambient_dim()); }};
  EXPECT_EQ(check_extn(zero, 3, lambdas, {Rat(1)}).failures, 0);
  EXPECT_FALSE(facet_vector(transform(make_psi2(Rat(1, 3), 2), scaled(standard_simplex(2, 2), 2)), Zeta{1}).is_zero());
}

TEST(Extn, DetectsABrokenValuation) {
  const std::vector<Rat> lambdas{Rat(1, 2)};
  EXPECT_GT(check_extn(vertex_count_valuation(), 2, lambdas, {Rat(1)}).failures, 0);
}

TEST(NegativeControls, AllFailAsExpected) {
  for (const auto& r : negative_controls(1, 20)) {
    EXPECT_TRUE(r.expected_fail);
    EXPECT_GT(r.failures, 0) << r.suite;
    EXPECT_TRUE(r.passed());
  }
}

TEST(SupportConvention, ProbeReportsBoth) {
  const auto reports = probe_support_convention(2, 1, 40);
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0].failures, 0);
  for (const auto& r : reports) EXPECT_TRUE(r.informational);
}

TEST(Reports, ReproducibleJson) {
  const auto a = to_json(check_valuation_cut(vertex_count_valuation(), 2, 77, 10)).dump();
  const auto b = to_json(check_valuation_cut(vertex_count_valuation(), 2, 77, 10)).dump();
  EXPECT_EQ(a, b);
  const Json j = to_json(check_minkowski(2, 77, 5));
  EXPECT_EQ(j["suite"], "minkowski:n2");
  EXPECT_EQ(j["seed"], 77);
  EXPECT_EQ(j["cases"], 5);
  EXPECT_EQ(j["failures"], 0);
  EXPECT_TRUE(j["witnesses"].empty());
}

}  // namespace
}  // namespace polyval
