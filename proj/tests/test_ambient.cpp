#include <gtest/gtest.h>

#include "support.hpp"

using namespace metallic;
using testing_support::load_pq;

namespace {

Mat diag33(const MetallicParams &mp)
{
    const FieldElement s = mp.sigma, c = mp.conjugate();
    return Mat::diagonal({s, c, c, s, c});
}

AmbientSpace plane(long p, long q, const Vec &eta)
{
    const auto mp = MetallicParams::make(p, q);
    const auto emb = identity_embedding(2);
    return AmbientSpace::make(Signature::parse("+,+"), mp, Mat::diagonal({mp.sigma, mp.conjugate()}),
                              AmbField::constant(emb.params, eta));
}

const std::vector<std::pair<long, long>> pqs = {{1, 1}, {2, 1}, {1, 3}, {3, 2}};

} // namespace

TEST(MetallicStructure, DiagonalExampleStructuresPass)
{
    for (auto [p, q] : pqs) {
        const auto mp = MetallicParams::make(p, q);
        EXPECT_TRUE(validate_metallic(diag33(mp), Signature::parse("-,+,+,+,-"), mp).ok());
        EXPECT_TRUE(validate_metallic(diag33(mp), Signature::parse("+,+,+,+,+"), mp).ok());
        std::vector<FieldElement> all(4, mp.sigma);
        EXPECT_TRUE(validate_metallic(Mat::diagonal(all), Signature::parse("-,+,-,+"), mp).ok());
    }
}

TEST(MetallicStructure, IdentityIsNotMetallic)
{
    const auto mp = MetallicParams::make(1, 1);
    const auto rep = validate_metallic(Mat::identity(3), Signature::parse("+,+,+"), mp);
    EXPECT_FALSE(rep.a);
    EXPECT_THROW(AmbientSpace::make(Signature::parse("+,+,+"), mp, Mat::identity(3)), validation_error);
}

TEST(MetallicStructure, NonSymmetricStructureFailsB)
{
    // J = [[sigma, 1], [0, p - sigma]] satisfies J^2 = pJ + q but is not g-symmetric
    const auto mp = MetallicParams::make(1, 1);
    const Mat j = Mat::from_rows({{mp.sigma, FieldElement(1)}, {FieldElement(), mp.conjugate()}});
    const auto rep = validate_metallic(j, Signature::parse("+,+"), mp);
    EXPECT_TRUE(rep.a);
    EXPECT_FALSE(rep.b);
}

TEST(MetallicStructure, RandomPairsOnFixtureSpaces)
{
    Rng rng(2);
    for (const char *name : {"example_3_3.spec", "example_4_6.spec"}) {
        for (auto [p, q] : pqs) {
            const auto ms = load_pq(name, p, q);
            const auto &sp = ms.space;
            const FieldElement P(p), Q(q);
            for (int k = 0; k < 40; ++k) {
                const Vec u = rng.vec(sp.n, {p * p + 4 * q}), v = rng.vec(sp.n, {2});
                EXPECT_EQ(sp.J * (sp.J * u), P * (sp.J * u) + Q * u);
                EXPECT_EQ(inner(sp.J * u, v, sp.sig), inner(u, sp.J * v, sp.sig));
                EXPECT_EQ(inner(sp.J * u, sp.J * v, sp.sig), P * inner(u, sp.J * v, sp.sig) + Q * inner(u, v, sp.sig));
            }
        }
    }
}

TEST(Pi, Values)
{
    const auto ms = load_pq("example_4_6_eta.spec", 1, 1);
    const auto &sp = ms.space;
    const auto &emb = ms.sub.embedding;
    // D5 = sigma/sqrt(q) dz2 + dz5, eta = dz5
    const AmbField d5 = pushforward(ms.sub.screen[2].field, emb);
    EXPECT_EQ(pi(sp, d5), Poly::constant(emb.params, FieldElement(1)));
    const auto flat = load_pq("example_4_6.spec", 1, 1);
    EXPECT_TRUE(pi(flat.space, d5).is_zero());
    // timelike unit eta
    const auto e = identity_embedding(2);
    const auto mp = MetallicParams::make(1, 1);
    const AmbField eta = AmbField::constant(e.params, Vec::unit(2, 0));
    const auto sp2 = AmbientSpace::make(Signature::parse("-,+"), mp, Mat::diagonal({mp.sigma, mp.sigma}), eta);
    EXPECT_EQ(pi(sp2, eta), Poly::constant(e.params, FieldElement(-1)));
}

TEST(QuarterSymmetric, ConstantFieldsInThePlane)
{
    const auto mp = MetallicParams::make(1, 1);
    const auto sp = plane(1, 1, Vec::unit(2, 0));
    const auto e = identity_embedding(2);
    const ParamField dy1 = ParamField::constant(e.params, Vec::unit(2, 0));
    const ParamField dy2 = ParamField::constant(e.params, Vec::unit(2, 1));
    const AmbField e1 = AmbField::constant(e.params, Vec::unit(2, 0));
    const Point origin(2, FieldElement());
    // D_{dy2} dy1 = pi(dy1) J dy2 = (p - sigma) dy2
    EXPECT_EQ(qs_conn(sp, e, dy2, e1).eval(origin), mp.conjugate() * Vec::unit(2, 1));
    EXPECT_EQ(qs_conn(sp, e, dy1, e1).eval(origin), mp.sigma * Vec::unit(2, 0));
    // torsion T(dy2, dy1) = pi(dy1) J dy2 - pi(dy2) J dy1 = (p - sigma) dy2
    const AmbientPoint ap(sp, e, origin);
    const auto [lhs, rhs] = ap.torsion(dy2, dy1);
    EXPECT_EQ(lhs, mp.conjugate() * Vec::unit(2, 1));
    EXPECT_EQ(ap.torsion(dy1, dy2).first, -(mp.conjugate() * Vec::unit(2, 1)));
    EXPECT_TRUE(ap.torsion(dy1, dy1).first.is_zero());
}

TEST(QuarterSymmetric, ZeroEtaRecoversLeviCivita)
{
    const auto sp = plane(2, 1, Vec(2));
    const auto e = identity_embedding(2);
    const ParamField u(PolyVector({parse_poly("y2", e.params), parse_poly("1", e.params)}));
    const AmbField v(PolyVector({parse_poly("y1*y2", e.params), parse_poly("y1^2", e.params)}));
    EXPECT_EQ(qs_conn(sp, e, u, v), directional_derivative(u, v));
}

TEST(QuarterSymmetric, NonmetricityAtUnitEta)
{
    // U = V = Z = dy1, eta = dy1: both sides equal -2 sigma
    const auto mp = MetallicParams::make(1, 1);
    const auto sp = plane(1, 1, Vec::unit(2, 0));
    const auto e = identity_embedding(2);
    const ParamField dy1 = ParamField::constant(e.params, Vec::unit(2, 0));
    const AmbField e1 = AmbField::constant(e.params, Vec::unit(2, 0));
    const AmbientPoint ap(sp, e, Point(2, FieldElement()));
    const auto [lhs, rhs] = ap.nonmetricity(dy1, e1, e1);
    EXPECT_EQ(lhs, FieldElement(-2) * mp.sigma);
    EXPECT_EQ(rhs, lhs);
    // metallic identity: D_U JV and J D_U V plus the pi terms agree
    const auto [a, b] = ap.metallic_identity(dy1, e1);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, mp.sigma * mp.sigma * Vec::unit(2, 0));
}

TEST(QuarterSymmetric, StructuralIdentitiesOnCurvedFixtureWithRandomEta)
{
    // torsion, non-metricity and the derivative of J on the curved invariant
    // fixture with five random polynomial eta fields of degree <= 2
    Rng rng(17);
    const auto base = testing_support::load("cone_invariant.spec");
    const auto &sub = base.sub;
    const auto vars = sub.embedding.params;
    const auto tangent = sub.tangent_frame();
    for (int k = 0; k < 5; ++k) {
        const AmbField eta = random_ambient_field(rng, vars, base.space.n, 2);
        const AmbientSpace sp = AmbientSpace::make(base.space.sig, base.space.params, base.space.J, eta);
        for (int i = 0; i < 5; ++i) {
            Point pt = rng.point(3);
            if (pt[0].is_zero()) {
                pt[0] = FieldElement(1);
            }
            const AmbientPoint ap(sp, sub.embedding, pt);
            const ParamField u = random_combination(rng, tangent, vars, 3, 1);
            const ParamField v = random_combination(rng, tangent, vars, 3, 1);
            const AmbField x = random_ambient_field(rng, vars, sp.n, 1), z = random_ambient_field(rng, vars, sp.n, 1);
            EXPECT_NO_THROW(ap.torsion(u, v));
            EXPECT_NO_THROW(ap.nonmetricity(u, x, z));
            EXPECT_NO_THROW(ap.metallic_identity(u, x));
        }
    }
}
