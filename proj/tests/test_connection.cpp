#include <gtest/gtest.h>

#include "support.hpp"

using namespace metallic;
using testing_support::load;
using testing_support::load_pq;
using testing_support::vec;

namespace {

ManifoldSpec with_eta(const std::string &name, const std::string &eta)
{
    ParseOptions opts;
    opts.eta = eta;
    return load(name, opts);
}

IdentityReport suite_over_points(const ManifoldSpec &ms, ConnectionOptions opts = {})
{
    SuiteFields fields{ms.sub.tangent_frame(), ms.sub.screen};
    IdentityReport rep;
    for (const auto &pt : ms.sub.points) {
        PointGeometry geo(ms.space, ms.sub, pt, opts);
        rep.merge(identity_suite(geo, fields));
    }
    return rep;
}

void expect_all_pass(const IdentityReport &rep, const std::string &what)
{
    for (const auto &r : rep.results()) {
        EXPECT_TRUE(r.skipped || r.failures == 0) << what << ": " << r.tag << " " << r.witness;
    }
}

} // namespace

TEST(Gauss, ParaboloidSecondDerivative)
{
    // phi = (t1, t2, t1^2) in definite R^3; d/dt1 of d phi/dt1 at the origin is (0, 0, 2), all normal
    const auto vars = Poly::make_vars({"t1", "t2"});
    Embedding emb;
    emb.params = vars;
    emb.components = {parse_poly("t1", vars), parse_poly("t2", vars), parse_poly("t1^2", vars)};
    const auto mp = MetallicParams::make(1, 1);
    const auto sp = AmbientSpace::make(Signature::parse("+,+,+"), mp, Mat::diagonal({mp.sigma, mp.sigma, mp.sigma}));
    ASSERT_TRUE(validate_metallic(sp.J, sp.sig, mp).ok());
    const AmbientPoint ap(sp, emb, {FieldElement(), FieldElement()});
    const ParamField d1 = ParamField::constant(vars, Vec::unit(2, 0));
    const Vec d = ap.lc(Vec::unit(2, 0), ap.jet_of_tangent(d1));
    EXPECT_EQ(d, vec({"0", "0", "2"}));
    EXPECT_TRUE(inner(d, ap.tangent(d1), sp.sig).is_zero());
}

TEST(Gauss, FlatExampleIsTotallyGeodesic)
{
    const auto ms = load("example_4_6.spec");
    for (const auto &pt : ms.sub.points) {
        PointGeometry geo(ms.space, ms.sub, pt);
        for (const auto &u : ms.sub.tangent_frame()) {
            for (const auto &v : ms.sub.tangent_frame()) {
                const auto lv = geo.tangent_field(v.name, v.field);
                const GaussData lc = geo.gauss_lc(u.field.eval(pt), lv);
                EXPECT_TRUE(lc.raw.is_zero());
                EXPECT_TRUE(lc.hl.is_zero());
                EXPECT_TRUE(lc.hs.is_zero());
                // eta = 0: the two connections agree
                const GaussData qs = geo.gauss_qs(u.field.eval(pt), lv);
                EXPECT_EQ(qs.raw, lc.raw);
            }
        }
    }
}

TEST(Gauss, QsMatchesLcWhenPiVanishes)
{
    // eta = dz5 is orthogonal to every field except D5
    const auto ms = load("example_4_6_eta.spec");
    PointGeometry geo(ms.space, ms.sub, ms.sub.points[1]);
    const Vec u = ms.sub.screen[0].field.eval(geo.point());
    for (const auto &v : ms.sub.tangent_frame()) {
        const auto lv = geo.tangent_field(v.name, v.field);
        const GaussData lc = geo.gauss_lc(u, lv), qs = geo.gauss_qs(u, lv);
        if (geo.pi(lv.val()).is_zero()) {
            EXPECT_EQ(qs.tangent, lc.tangent) << v.name;
            EXPECT_EQ(qs.hl, lc.hl) << v.name;
            EXPECT_EQ(qs.hs, lc.hs) << v.name;
        } else {
            EXPECT_NE(qs.raw, lc.raw) << v.name;
        }
    }
}

TEST(Weingarten, ConstantTransversalOnLinearExample)
{
    // eta = dy2 pairs nontrivially with N; D_U N = pi(N) J U, so A_N U = -pi(N) f U
    const auto ms = with_eta("example_3_3.spec", "0, 1, 0, 0, 0");
    for (const auto &pt : ms.sub.points) {
        PointGeometry geo(ms.space, ms.sub, pt);
        const auto n = geo.ambient_field("N", ms.sub.ltr[0].field);
        ASSERT_FALSE(geo.pi(n.val()).is_zero());
        for (const auto &u : ms.sub.tangent_frame()) {
            const Vec pu = u.field.eval(pt);
            const Vec fu = geo.fw(geo.ambient_of(pu)).f;
            const WeingartenData lc = geo.weingarten_ltr(Conn::levi_civita, pu, n);
            EXPECT_TRUE(lc.shape.is_zero());
            EXPECT_TRUE(lc.conn.is_zero());
            EXPECT_TRUE(lc.d_term.is_zero());
            const WeingartenData qs = geo.weingarten_ltr(Conn::quarter_symmetric, pu, n);
            EXPECT_EQ(qs.shape, -(geo.pi(n.val()) * fu));
        }
    }
}

TEST(Screen, StarredConnectionOnLinearExample)
{
    // constant frames: D*_U X = pi(X) times the screen part of f U
    const auto ms = with_eta("example_3_3.spec", "0, 1, 1, 1, 0");
    for (const auto &pt : ms.sub.points) {
        PointGeometry geo(ms.space, ms.sub, pt);
        for (const auto &u : ms.sub.tangent_frame()) {
            const Vec pu = u.field.eval(pt);
            const Vec fu = geo.fw(geo.ambient_of(pu)).f;
            for (const auto &x : ms.sub.screen) {
                const auto lx = geo.tangent_field(x.name, x.field);
                const ScreenData sd = geo.screen(Conn::quarter_symmetric, pu, lx);
                EXPECT_EQ(sd.screen_part, geo.pi(lx.val()) * geo.screen_proj(fu));
                EXPECT_TRUE(geo.screen(Conn::levi_civita, pu, lx).screen_part.is_zero());
            }
        }
    }
}

TEST(IdentitySuite, ZeroEtaOnAllFixtures)
{
    for (const char *name : {"example_3_3.spec", "example_4_6.spec", "cone_invariant.spec", "curved_ssi.spec"}) {
        expect_all_pass(suite_over_points(with_eta(name, "0")), name);
    }
}

TEST(IdentitySuite, NonzeroEtaOnAllFixtures)
{
    for (auto [p, q] : {std::pair{1L, 1L}, {2L, 1L}, {1L, 3L}}) {
        for (const char *name : {"example_3_3_eta.spec", "example_4_6_eta.spec", "cone_invariant.spec", "curved_ssi.spec"}) {
            expect_all_pass(suite_over_points(load_pq(name, p, q)), name);
        }
    }
}

TEST(IdentitySuite, InducedTorsion)
{
    // torsion of the induced connection is pi(V) f U - pi(U) f V
    const auto ms = load("curved_ssi.spec");
    const auto rep = suite_over_points(ms);
    for (const char *tag : {"q4", "q5", "q6", "q14", "q19", "q20", "q21", "q22", "reconstruction"}) {
        const auto *r = rep.find(tag);
        ASSERT_NE(r, nullptr) << tag;
        EXPECT_GT(r->checks, 0u) << tag;
        EXPECT_EQ(r->failures, 0u) << tag;
    }
}

TEST(IdentitySuite, CorruptedScreenTransversalFormIsCaught)
{
    const auto ms = load("example_4_6_eta.spec");
    const auto rep = suite_over_points(ms, ConnectionOptions{true});
    const auto *q15 = rep.find("q15");
    ASSERT_NE(q15, nullptr);
    EXPECT_GT(q15->failures, 0u);
    EXPECT_FALSE(rep.all_pass());
}

TEST(IdentitySuite, ScaledTransversalFailsDuality)
{
    const auto ms = load("neg_corrupted_ltr.spec");
    const auto rep = suite_over_points(ms);
    const auto *d = rep.find("ltr_duality");
    ASSERT_NE(d, nullptr);
    EXPECT_GT(d->failures, 0u);
}

TEST(IdentitySuite, SkipsTransversalDerivativesWithoutDeclaredFrame)
{
    auto ms = load("cone_invariant.spec");
    ms.sub.ltr.clear();
    const auto rep = suite_over_points(ms);
    for (const char *tag : {"q7", "q8", "q9", "lc5", "q16", "lc9", "q24"}) {
        const auto *r = rep.find(tag);
        ASSERT_NE(r, nullptr) << tag;
        EXPECT_TRUE(r->skipped) << tag;
        EXPECT_FALSE(r->pass()) << tag;
    }
    EXPECT_TRUE(rep.all_pass());
}
