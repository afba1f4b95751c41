#include "ppj/classify/catalog.hpp"
#include "ppj/classify/hopf.hpp"
#include "ppj/classify/report.hpp"
#include "ppj/classify/verdict.hpp"
#include "ppj/exact/algebra.hpp"
#include "ppj/exact/parse.hpp"

#include "random_data.hpp"

#include <cmath>
#include <gtest/gtest.h>

using namespace ppj;
using ppj::testing::rf;

namespace {

using RF = RationalFunction;

RF P(std::string_view s) { return parse_expression(s); }

// A non-Hopf point with l = 0: gamma, delta, mu solve l U = l phiU = 0.
ExactPoint jacobi_zero_point()
{
    return ExactPoint::nonhopf(4, 1, 2, 3, 0, -1);
}

ExactPoint scaled(const ExactPoint& p, const RF& k)
{
    if (p.is_hopf()) {
        const auto& h = p.hopf_shape();
        return ExactPoint::hopf(k * k * p.c(), k * h.alpha, k * h.lambda, k * h.nu);
    }
    const auto& n = p.nonhopf_shape();
    return ExactPoint::nonhopf(k * k * p.c(), k * n.alpha, k * n.beta, k * n.gamma, k * n.delta, k * n.mu);
}

}  // namespace

TEST(HopfCheck, Examples)
{
    EXPECT_TRUE(hopf_check<RF>(2, 1, 1, -4).is_zero());
    EXPECT_TRUE(hopf_check(rf("alpha"), P("4*alpha/7"), P("-4*alpha"), P("-16*alpha^2/7")).is_zero());
    EXPECT_EQ(hopf_check<RF>(0, 0, 0, 4), RF(-1));
    EXPECT_NEAR(hopf_check(0.0, 2.0, 0.5, 4.0), 0.0, 1e-15);
}

TEST(Admissible, HorosphereIsSingleOne)
{
    const auto set = admissible_L(defect_affine(ExactPoint::hopf(-4, 2, 1, 1)));
    ASSERT_EQ(set.kind, AdmissibleKind::Single);
    EXPECT_EQ(set.value, RF(1));
    EXPECT_TRUE(set.conditions.empty());
}

TEST(Admissible, SymbolicHopfIsEmpty)
{
    const auto set = admissible_L(defect_affine(ExactPoint::hopf(rf("c"), rf("alpha"), rf("lambda"), rf("nu"))));
    EXPECT_EQ(set.kind, AdmissibleKind::Empty);
    EXPECT_FALSE(set.obstruction.empty());
}

TEST(Admissible, SymbolicSphereNeedsCondition)
{
    const auto p = catalog(Space::CP2, Model::GeodesicSphere);
    const auto set = admissible_L(defect_affine(p));
    ASSERT_EQ(set.kind, AdmissibleKind::Single);
    EXPECT_EQ(set.value, P("t^2"));
    EXPECT_FALSE(set.conditions.empty());
}

TEST(Admissible, VanishingJacobiIsAll)
{
    const auto p = jacobi_zero_point();
    ASSERT_TRUE(jacobi_l(p).is_zero());
    EXPECT_EQ(admissible_L(defect_affine(p)).kind, AdmissibleKind::All);
}

TEST(Admissible, FloatResidual)
{
    const auto set = admissible_L(defect_affine(catalog_float(Space::CH2, Model::Horosphere)));
    ASSERT_EQ(set.kind, AdmissibleKind::Single);
    EXPECT_NEAR(set.value, 1.0, 1e-12);
    EXPECT_LE(set.residual, 1e-12);
    const auto bad = admissible_L(defect_affine(PointData<double>::hopf(4.0, 1.0, 2.0, 3.0)));
    EXPECT_EQ(bad.kind, AdmissibleKind::Empty);
}

TEST(Admissible, EntryLabels)
{
    EXPECT_EQ(defect_entry_label(AffineDefect<RF>::index(0, 1, 2, 1)), "(U,phiU,xi)[phiU]");
    EXPECT_EQ(defect_entry_label(AffineDefect<RF>::index(2, 0, 0, 0)), "(xi,U,U)[U]");
}

TEST(Catalog, ParseNames)
{
    EXPECT_EQ(parse_space("Cp2"), Space::CP2);
    EXPECT_EQ(parse_space("ch2"), Space::CH2);
    EXPECT_THROW(parse_space("cp3"), CatalogError);
    EXPECT_EQ(parse_model("alpha_zero"), Model::TubeCurve);
    EXPECT_THROW(parse_model("cylinder"), CatalogError);
    EXPECT_THROW(catalog_family(Space::CP2, Model::Horosphere), CatalogError);
    EXPECT_THROW(catalog_family(Space::CP2, Model::TubeHyperplane), CatalogError);
}

TEST(Catalog, FamiliesSatisfyHopfRelationAndExpectedL)
{
    const auto families = catalog_families();
    EXPECT_EQ(families.size(), 6u);
    for (const auto& f : families) {
        const auto p = catalog(f.space, f.model);
        const auto& h = p.hopf_shape();
        EXPECT_TRUE(hopf_check(h.alpha, h.lambda, h.nu, p.c()).is_zero()) << f.range;
        const auto v = verdict(p);
        ASSERT_EQ(v.kind, VerdictKind::ProperPseudoParallel) << to_string(f.model);
        EXPECT_EQ(*v.L, f.expected_L);
        EXPECT_EQ(p.c(), RF(f.space == Space::CP2 ? 4 : -4));
    }
}

TEST(Catalog, Examples)
{
    const auto tube = catalog(Space::CH2, Model::TubeHyperplane, RF(make_rational(1, 2)));
    EXPECT_EQ(tube.hopf_shape().alpha, RF(make_rational(5, 2)));
    EXPECT_EQ(*verdict(tube).L, RF(make_rational(1, 4)));
    const auto curve = catalog(Space::CP2, Model::TubeCurve, RF(2));
    EXPECT_EQ(curve.hopf_shape().nu, RF(make_rational(1, 2)));
    EXPECT_EQ(*verdict(curve).L, RF(1));
    EXPECT_EQ(*verdict(catalog(Space::CH2, Model::TubeCurve, RF(3))).L, RF(-1));
}

TEST(Catalog, RangesAreEnforced)
{
    EXPECT_THROW(catalog(Space::CP2, Model::GeodesicSphere, RF(0)), CatalogError);
    EXPECT_THROW(catalog(Space::CP2, Model::GeodesicSphere, RF(-1)), CatalogError);
    EXPECT_THROW(catalog(Space::CH2, Model::GeodesicSphere, RF(1)), CatalogError);
    EXPECT_THROW(catalog(Space::CH2, Model::TubeHyperplane, RF(1)), CatalogError);
    EXPECT_THROW(catalog(Space::CH2, Model::TubeCurve, RF(0)), CatalogError);
    EXPECT_NO_THROW(catalog(Space::CH2, Model::GeodesicSphere, RF(2)));
}

TEST(Catalog, RadiusParameters)
{
    EXPECT_NEAR(parameter_from_radius(Space::CP2, Model::GeodesicSphere, 0.7), 1.0 / std::tan(0.7), 1e-15);
    EXPECT_NEAR(parameter_from_radius(Space::CH2, Model::GeodesicSphere, 0.7), 1.0 / std::tanh(0.7), 1e-15);
    EXPECT_NEAR(parameter_from_radius(Space::CH2, Model::TubeHyperplane, 0.7), std::tanh(0.7), 1e-15);
    EXPECT_THROW(parameter_from_radius(Space::CH2, Model::Horosphere, 0.7), CatalogError);
}

TEST(Verdict, Examples)
{
    const auto horo = verdict(ExactPoint::hopf(-4, 2, 1, 1));
    EXPECT_EQ(horo.kind, VerdictKind::ProperPseudoParallel);
    EXPECT_TRUE(horo.hopf);
    EXPECT_TRUE(horo.commutes);

    const auto zero = verdict(jacobi_zero_point());
    EXPECT_EQ(zero.kind, VerdictKind::Degenerate);
    EXPECT_TRUE(zero.jacobi_zero);

    const auto exceptional = verdict(ExactPoint::hopf(P("-16*alpha^2/7"), rf("alpha"), P("4*alpha/7"), P("-4*alpha")));
    ASSERT_EQ(exceptional.kind, VerdictKind::ProperPseudoParallel);
    EXPECT_EQ(*exceptional.L, P("-32*alpha^2/7"));

    EXPECT_EQ(verdict(ExactPoint::nonhopf(4, 1, 2, 3, 4, 5)).kind, VerdictKind::NotPseudoParallel);
    EXPECT_EQ(to_string(VerdictKind::SemiParallelOnly), "SemiParallelOnly");
}

TEST(Verdict, FloatFamilies)
{
    for (const auto& f : catalog_families()) {
        std::optional<double> param;
        if (f.model == Model::TubeCurve) {
            param = 2.0;
        } else if (f.model != Model::Horosphere) {
            param = parameter_from_radius(f.space, f.model, 0.7);
        }
        const auto p = catalog_float(f.space, f.model, param);
        const auto v = verdict(p);
        ASSERT_EQ(v.kind, VerdictKind::ProperPseudoParallel);
        const auto& h = p.hopf_shape();
        const double expected = f.model == Model::TubeCurve ? (f.space == Space::CP2 ? 1.0 : -1.0) : h.lambda * h.lambda;
        EXPECT_NEAR(*v.L, expected, 1e-9 * std::max(1.0, std::abs(expected)));
    }
}

// L = 0 is never admissible while l != 0.
TEST(Property, SemiParallelNeverOccurs)
{
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 400; ++i) {
        const auto p = i % 2 ? ppj::testing::random_hopf(rng) : ppj::testing::random_nonhopf(rng);
        const auto v = verdict(p);
        EXPECT_NE(v.kind, VerdictKind::SemiParallelOnly);
        if (v.L) EXPECT_FALSE(v.L->is_zero());
    }
    for (const auto& f : catalog_families()) EXPECT_FALSE(verdict(catalog(f.space, f.model)).L->is_zero());
}

TEST(Property, PrincipalSwapInvariance)
{
    std::mt19937_64 rng(77);
    std::vector<ExactPoint> points;
    for (const auto& f : catalog_families()) points.push_back(catalog(f.space, f.model));
    for (int i = 0; i < 60; ++i) points.push_back(ppj::testing::random_hopf(rng));
    for (const auto& p : points) {
        const auto& h = p.hopf_shape();
        const auto a = verdict(p);
        const auto b = verdict(ExactPoint::hopf(p.c(), h.alpha, h.nu, h.lambda));
        EXPECT_EQ(a.kind, b.kind);
        EXPECT_EQ(a.L.has_value(), b.L.has_value());
        if (a.L && b.L) EXPECT_EQ(*a.L, *b.L);
    }
}

// (c, A) -> (k^2 c, k A) multiplies the admissible L by k^2.
TEST(Property, ScalingInvariance)
{
    std::mt19937_64 rng(78);
    std::vector<ExactPoint> points{ExactPoint::hopf(-4, 2, 1, 1), jacobi_zero_point(),
                                   catalog(Space::CP2, Model::GeodesicSphere, RF(3))};
    for (int i = 0; i < 40; ++i) points.push_back(ppj::testing::random_nonhopf(rng));
    for (const auto& p : points) {
        for (const RF k : {RF(2), RF(make_rational(-1, 3)), rf("x")}) {
            const auto a = verdict(p);
            const auto b = verdict(scaled(p, k));
            EXPECT_EQ(a.kind, b.kind);
            if (a.L && b.L) EXPECT_EQ(k * k * *a.L, *b.L);
        }
    }
}

TEST(Report, MatchesTheorem)
{
    const auto r = main_theorem_report();
    EXPECT_TRUE(r.matches());
    EXPECT_EQ(r.rows.size(), 6u + 2u + 10u);
    for (const auto& row : r.rows) EXPECT_TRUE(row.expected) << row.family;
    EXPECT_TRUE(main_theorem_report_float().matches());
}

TEST(Report, Deterministic)
{
    EXPECT_EQ(main_theorem_report(5, 4).to_json(), main_theorem_report(5, 4).to_json());
    EXPECT_EQ(main_theorem_report_float(5, 4).to_table(), main_theorem_report_float(5, 4).to_table());
    EXPECT_NE(main_theorem_report(5, 4).to_json(), main_theorem_report(6, 4).to_json());
    std::uint64_t s1 = 9;
    std::uint64_t s2 = 9;
    const auto p1 = random_nonhopf_point(s1);
    const auto p2 = random_nonhopf_point(s2);
    EXPECT_EQ(p1.c(), p2.c());
    EXPECT_EQ(p1.nonhopf_shape().mu, p2.nonhopf_shape().mu);
    EXPECT_EQ(s1, s2);
}
