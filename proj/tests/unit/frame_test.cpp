#include "ppj/frame/frame.hpp"
#include "ppj/io/point_json.hpp"

#include "random_data.hpp"

#include <gtest/gtest.h>

using namespace ppj;
using ppj::testing::rf;

namespace {

using V = ExactVector;

V vec(long a, long b, long c) { return V{{RationalFunction(a), RationalFunction(b), RationalFunction(c)}}; }

ExactPoint symbolic_hopf() { return ExactPoint::hopf(rf("c"), rf("alpha"), rf("lambda"), rf("nu")); }

ExactPoint symbolic_nonhopf()
{
    return ExactPoint::nonhopf(rf("c"), rf("alpha"), rf("beta"), rf("gamma"), rf("delta"), rf("mu"));
}

}  // namespace

TEST(Frame, PhiOnBasis)
{
    EXPECT_EQ(phi_apply(vec(1, 0, 0)).c, vec(0, 1, 0).c);
    EXPECT_EQ(phi_apply(vec(0, 1, 0)).c, vec(-1, 0, 0).c);
    EXPECT_TRUE(phi_apply(xi<RationalFunction>()).is_zero());
    EXPECT_EQ(phi_operator<RationalFunction>().apply(vec(2, 3, 5)).c, phi_apply(vec(2, 3, 5)).c);
}

TEST(Frame, MetricAndEta)
{
    EXPECT_EQ(g_inner(vec(1, 2, 3), vec(4, -5, 6)), RationalFunction(12));
    EXPECT_EQ(eta_of(vec(1, 2, 3)), RationalFunction(3));
    EXPECT_EQ(eta_of(xi<RationalFunction>()), RationalFunction(1));
}

TEST(Frame, IdentitySuiteHolds)
{
    for (const auto& p : {symbolic_hopf(), symbolic_nonhopf()}) {
        const auto checks = contact_identity_suite(p);
        EXPECT_EQ(checks.size(), 7u);
        for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name;
    }
    const auto f = PointData<double>::nonhopf(4.0, 1.0, 2.0, 0.5, -1.0, 3.0);
    for (const auto& c : contact_identity_suite(f)) EXPECT_TRUE(c.passed) << c.name;
}

TEST(Frame, ShapeFromHopfData)
{
    const auto a = shape_from_spec(symbolic_hopf());
    EXPECT_EQ(a.apply(vec(1, 0, 0)).c, (rf("lambda") * vec(1, 0, 0)).c);
    EXPECT_EQ(a.apply(vec(0, 1, 0)).c, (rf("nu") * vec(0, 1, 0)).c);
    EXPECT_EQ(a.apply(xi<RationalFunction>()).c, (rf("alpha") * xi<RationalFunction>()).c);
    EXPECT_TRUE(a.symmetric());
}

TEST(Frame, ShapeFromNonHopfData)
{
    const auto a = shape_from_spec(symbolic_nonhopf());
    const auto axi = a.apply(xi<RationalFunction>());
    EXPECT_EQ(axi.c, (rf("alpha") * xi<RationalFunction>() + rf("beta") * vec(1, 0, 0)).c);
    const auto au = a.apply(vec(1, 0, 0));
    EXPECT_EQ(au.c, V({rf("gamma"), rf("delta"), rf("beta")}).c);
    const auto apu = a.apply(vec(0, 1, 0));
    EXPECT_EQ(apu.c, V({rf("delta"), rf("mu"), RationalFunction(0)}).c);
    EXPECT_TRUE(a.is_self_adjoint());
}

TEST(Frame, CommutesWithPhi)
{
    EXPECT_TRUE(commutes_with_phi(shape_from_spec(ExactPoint::hopf(4, 2, rf("t"), rf("t")))));
    EXPECT_FALSE(commutes_with_phi(shape_from_spec(symbolic_hopf())));
    EXPECT_FALSE(commutes_with_phi(shape_from_spec(symbolic_nonhopf())));
}

TEST(Frame, InvalidPoints)
{
    EXPECT_THROW(ExactPoint::hopf(0, 1, 1, 1), InvalidPointData);
    EXPECT_THROW(ExactPoint::nonhopf(4, 1, 0, 1, 1, 1), InvalidPointData);
    EXPECT_THROW(PointData<double>::hopf(1e-12, 1, 1, 1), InvalidPointData);
    EXPECT_THROW(ExactOperator({{{1, 2, 0}, {0, 1, 0}, {0, 0, 1}}}, true), std::logic_error);
}

// Relabelling (e, phie, xi) -> (phie, -e, xi) keeps phi and swaps lambda and nu.
TEST(Frame, BasisSwapConjugatesShape)
{
    const auto a = shape_from_spec(symbolic_hopf());
    const ExactOperator p({{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}});
    const auto swapped = p.transpose() * a * p;
    const auto b = shape_from_spec(ExactPoint::hopf(rf("c"), rf("alpha"), rf("nu"), rf("lambda")));
    EXPECT_TRUE((swapped - b).is_zero());
    const auto phi = phi_operator<RationalFunction>();
    EXPECT_TRUE((p.transpose() * phi * p - phi).is_zero());
}

TEST(PointJson, ExactRoundTrip)
{
    std::mt19937_64 rng(41);
    for (int i = 0; i < 50; ++i) {
        const auto p = i % 2 ? ppj::testing::random_hopf(rng) : ppj::testing::random_nonhopf(rng);
        const auto back = exact_point_from_json(nlohmann::json::parse(point_to_json(p).dump()));
        EXPECT_EQ(point_to_json(back).dump(), point_to_json(p).dump());
    }
    const auto sym = symbolic_nonhopf();
    EXPECT_EQ(point_to_json(exact_point_from_json(point_to_json(sym))).dump(), point_to_json(sym).dump());
}

TEST(PointJson, FloatRoundTrip)
{
    const auto p = PointData<double>::hopf(-4.0, 2.5, 1.0 / 3.0, 0.125);
    const auto back = float_point_from_json(nlohmann::json::parse(point_to_json(p).dump()));
    EXPECT_EQ(back.hopf_shape().lambda, 1.0 / 3.0);
    EXPECT_EQ(back.c(), -4.0);
}

TEST(PointJson, Errors)
{
    using nlohmann::json;
    EXPECT_THROW(exact_point_from_json(json::parse(R"({"c":"4"})")), PointFormatError);
    EXPECT_THROW(exact_point_from_json(json::parse(R"({"c":"4","shape":{"kind":"odd"}})")), PointFormatError);
    EXPECT_THROW(exact_point_from_json(json::parse(R"({"c":"4","shape":{"kind":"hopf","alpha":"1","lambda":"1"}})")),
                 PointFormatError);
    EXPECT_THROW(exact_point_from_json(json::parse(R"({"c":"0","shape":{"kind":"hopf","alpha":1,"lambda":1,"nu":1}})")),
                 InvalidPointData);
    EXPECT_THROW(float_point_from_json(json::parse(R"({"c":"c","shape":{"kind":"hopf","alpha":1,"lambda":1,"nu":1}})")),
                 PointFormatError);
}
