#include <gtest/gtest.h>

#include "support.hpp"

using namespace metallic;
using testing_support::load;
using testing_support::load_pq;
using testing_support::vec;

namespace {

const char *const good_fixtures[] = {"example_3_3.spec", "example_3_3_eta.spec", "example_4_6.spec",
                                     "example_4_6_eta.spec", "cone_invariant.spec", "curved_ssi.spec"};

const TheoremReport &find(const std::vector<TheoremReport> &reps, const std::string &id)
{
    for (const auto &r : reps) {
        if (r.id == id) {
            return r;
        }
    }
    throw std::runtime_error("no theorem " + id);
}

std::vector<TheoremReport> suite(const ManifoldSpec &ms)
{
    const auto cls = classify(ms.space, ms.sub);
    return theorem_suite(TheoremContext{ms.space, ms.sub, cls, {}});
}

} // namespace

TEST(Classify, LightlikeKinds)
{
    EXPECT_EQ(lightlike_kind(1, 3, 5), LightlikeKind::r_lightlike);
    EXPECT_EQ(lightlike_kind(2, 2, 5), LightlikeKind::isotropic);
    EXPECT_EQ(lightlike_kind(2, 3, 5), LightlikeKind::coisotropic);
    EXPECT_EQ(lightlike_kind(3, 3, 6), LightlikeKind::totally_lightlike);
}

TEST(Classify, OneLightlikeExampleIsInvariant)
{
    const auto ms = load("example_3_3.spec");
    const auto c = classify(ms.space, ms.sub);
    EXPECT_EQ(c.r, 1u);
    EXPECT_EQ(c.m, 3u);
    EXPECT_EQ(c.n, 5u);
    EXPECT_EQ(c.kind, LightlikeKind::r_lightlike);
    EXPECT_TRUE(c.invariant);
    EXPECT_TRUE(c.ssi);
    EXPECT_TRUE(c.invariant_criterion);
    EXPECT_TRUE(c.notes.empty());
}

TEST(Classify, TwoLightlikeExampleIsScreenSemiInvariant)
{
    const auto ms = load("example_4_6.spec");
    const auto c = classify(ms.space, ms.sub);
    EXPECT_EQ(c.r, 2u);
    EXPECT_FALSE(c.invariant);
    EXPECT_TRUE(c.ssi);
    EXPECT_EQ(c.b_dim, 2u);
    EXPECT_EQ(c.bperp_dim, 1u);
    EXPECT_EQ(c.bprime_dim, 4u);
    EXPECT_EQ(c.b0_dim, 1u);
    EXPECT_TRUE(c.invariant_criterion);
    ASSERT_FALSE(c.notes.empty());
    EXPECT_NE(c.notes.front().find("S(TM)"), std::string::npos);
}

TEST(Classify, TwoLightlikeExampleSubbundles)
{
    // independent check: J D5 = W, and dz9 spans B0
    const auto ms = load("example_4_6.spec");
    const Point pt = ms.sub.points[1];
    const PointFrame pf = build_point_frame(ms.space, ms.sub, pt);
    const Vec d5 = pf.jac * Vec::unit(5, 3);
    const Vec w = ms.sub.str[0].field.eval(pt);
    EXPECT_EQ(ms.space.J * d5, w);
    const auto b0 = b0_basis(pf, ms.space.sig, {ms.space.J * d5});
    ASSERT_EQ(b0.size(), 1u);
    EXPECT_TRUE(same_span(b0, {Vec::unit(9, 8)}, 9));
    // B is J-invariant and B-perp is carried into S(TM-perp)
    for (std::size_t k : {0u, 4u}) {
        const Vec x = pf.jac * Vec::unit(5, k);
        EXPECT_TRUE(in_span({pf.jac * Vec::unit(5, 0), pf.jac * Vec::unit(5, 4)}, ms.space.J * x));
    }
}

TEST(Classify, DeclaredSplitMustCoverScreen)
{
    auto ms = load("example_4_6.spec");
    ms.sub.bperp.clear();
    EXPECT_THROW(classify(ms.space, ms.sub), declared_frame_mismatch);
}

TEST(Classify, CurvedFixtures)
{
    const auto cone = load("cone_invariant.spec");
    const auto c1 = classify(cone.space, cone.sub);
    EXPECT_TRUE(c1.invariant);
    EXPECT_EQ(c1.bperp_dim, 0u);
    EXPECT_TRUE(c1.invariant_criterion);
    const auto cs = load("curved_ssi.spec");
    const auto c2 = classify(cs.space, cs.sub);
    EXPECT_FALSE(c2.invariant);
    EXPECT_TRUE(c2.ssi);
    EXPECT_EQ(c2.b0_dim, 1u);
    EXPECT_TRUE(c2.invariant_criterion);
}

TEST(Classify, InvariantIffSsiWithoutBperp)
{
    for (auto [p, q] : {std::pair{1L, 1L}, {2L, 1L}, {1L, 3L}, {3L, 2L}}) {
        for (const char *name : good_fixtures) {
            const auto ms = load_pq(name, p, q);
            const auto c = classify(ms.space, ms.sub);
            EXPECT_TRUE(c.invariant_criterion) << name << " p=" << p << " q=" << q;
            EXPECT_EQ(c.invariant, c.ssi && c.bperp_dim == 0) << name;
        }
    }
}

TEST(Predicates, Integrability)
{
    const auto bad = load("neg_nonintegrable.spec");
    const auto s = integrable(bad.space, bad.sub, Distribution::screen);
    EXPECT_FALSE(s.vacuous);
    EXPECT_FALSE(s.holds);
    ASSERT_FALSE(s.witnesses.empty());
    EXPECT_NE(s.witnesses.front().fields.find("E1"), std::string::npos);
    const auto r = integrable(bad.space, bad.sub, Distribution::rad);
    EXPECT_FALSE(r.vacuous);
    EXPECT_TRUE(r.holds);

    const auto ex = load("example_4_6.spec");
    for (auto d : {Distribution::rad, Distribution::screen, Distribution::b, Distribution::bperp, Distribution::bprime}) {
        EXPECT_TRUE(integrable(ex.space, ex.sub, d).holds) << to_string(d);
    }
    const auto cone = load("cone_invariant.spec");
    EXPECT_TRUE(integrable(cone.space, cone.sub, Distribution::bperp).vacuous);
}

TEST(Predicates, DistributionNames)
{
    for (auto d : {Distribution::rad, Distribution::screen, Distribution::b, Distribution::bperp, Distribution::bprime}) {
        EXPECT_EQ(distribution_from(to_string(d)), d);
    }
    EXPECT_FALSE(distribution_from("tangent").has_value());
}

TEST(Predicates, Parallelism)
{
    // flat linear submanifold with eta = 0: every constant distribution is parallel
    const auto flat = load("example_4_6.spec");
    EXPECT_TRUE(parallel_check(flat.space, flat.sub, Distribution::screen, ParallelMode::strict).holds);
    // the cone screen is curved: E2 along E2 has a nonzero ambient derivative
    const auto cone = load("cone_invariant.spec");
    const auto strict = parallel_check(cone.space, cone.sub, Distribution::screen, ParallelMode::strict);
    EXPECT_FALSE(strict.vacuous);
    EXPECT_FALSE(strict.holds);
    const auto lc = parallel_check(cone.space, cone.sub, Distribution::rad, ParallelMode::strict, Conn::levi_civita);
    EXPECT_TRUE(lc.holds);
}

TEST(StructureIdentities, HoldsOnFixtures)
{
    for (auto [p, q] : {std::pair{1L, 1L}, {2L, 1L}, {1L, 3L}}) {
        for (const char *name : good_fixtures) {
            const auto ms = load_pq(name, p, q);
            Rng rng(7);
            for (const auto &pt : ms.sub.points) {
                PointGeometry geo(ms.space, ms.sub, pt);
                const auto rep = lemma44_check(geo, rng);
                for (const auto &r : rep.results()) {
                    if (r.tag == "radical_pairing") {
                        continue;
                    }
                    EXPECT_EQ(r.failures, 0u) << name << " " << r.tag << " " << r.witness;
                    EXPECT_GT(r.checks, 0u) << name << " " << r.tag;
                }
            }
        }
    }
}

TEST(StructureIdentities, RadicalPairingOnRankOne)
{
    for (const char *name : {"example_3_3_eta.spec", "cone_invariant.spec", "curved_ssi.spec"}) {
        const auto ms = load(name);
        Rng rng(3);
        for (const auto &pt : ms.sub.points) {
            PointGeometry geo(ms.space, ms.sub, pt);
            const auto rep = lemma44_check(geo, rng);
            const auto *r = rep.find("radical_pairing");
            ASSERT_NE(r, nullptr);
            EXPECT_EQ(r->failures, 0u) << name << " " << r->witness;
        }
    }
}

TEST(StructureIdentities, WDecompositionOnTwoLightlikeExample)
{
    // w D5 = sqrt(q) W and w vanishes on B'
    const auto ms = load("example_4_6.spec");
    PointGeometry geo(ms.space, ms.sub, ms.sub.points[0]);
    const Vec d5 = geo.ambient_of(Vec::unit(5, 3));
    const FW fw = geo.fw(d5);
    EXPECT_TRUE(fw.f.is_zero());
    EXPECT_TRUE(fw.wl.is_zero());
    EXPECT_EQ(fw.ws, ms.space.params.sqrt_q() * ms.sub.str[0].field.eval(geo.point()));
    for (std::size_t k : {0u, 1u, 2u, 4u}) {
        EXPECT_TRUE(geo.fw(geo.ambient_of(Vec::unit(5, k))).w().is_zero()) << k;
    }
}

TEST(Theorems, ConsistentOnAllFixtures)
{
    for (auto [p, q] : {std::pair{1L, 1L}, {2L, 1L}, {1L, 3L}}) {
        for (const char *name : good_fixtures) {
            for (const auto &t : suite(load_pq(name, p, q))) {
                EXPECT_TRUE(t.consistent) << name << " " << t.id << " p=" << p << " q=" << q;
            }
        }
    }
}

TEST(Theorems, SkipSemantics)
{
    const auto ex33 = suite(load("example_3_3.spec"));
    // invariant and ssi with B-perp = 0: the B-perp theorem has nothing to quantify over
    const auto &bp = find(ex33, "ssi.bperp_geodesic");
    EXPECT_TRUE(bp.skipped);
    EXPECT_FALSE(bp.skip_reason.empty());
    EXPECT_FALSE(bp.condition_holds);
    EXPECT_FALSE(bp.property_holds);
    EXPECT_TRUE(bp.witnesses.empty());

    const auto ex46 = suite(load("example_4_6.spec"));
    for (const char *id : {"invariant.rad_integrable", "invariant.screen_integrable", "invariant.rad_geodesic",
                           "invariant.screen_geodesic"}) {
        const auto &t = find(ex46, id);
        EXPECT_TRUE(t.skipped) << id;
        EXPECT_EQ(t.skip_reason, "submanifold is not invariant");
    }
    EXPECT_FALSE(find(ex46, "ssi.f_metallic_on_bprime").skipped);
}

TEST(Theorems, MetallicOnBprime)
{
    for (auto [p, q] : {std::pair{1L, 1L}, {2L, 1L}, {1L, 3L}}) {
        for (const char *name : {"example_4_6.spec", "example_4_6_eta.spec", "curved_ssi.spec"}) {
            const auto &t = find(suite(load_pq(name, p, q)), "ssi.f_metallic_on_bprime");
            EXPECT_FALSE(t.skipped) << name;
            EXPECT_TRUE(t.condition_holds) << name;
            EXPECT_TRUE(t.property_holds) << name;
            EXPECT_TRUE(t.consistent) << name;
        }
    }
}

TEST(Theorems, NegativeOutcomesStayConsistent)
{
    const auto reps = suite(load("neg_nonintegrable.spec"));
    const auto &t = find(reps, "invariant.screen_integrable");
    EXPECT_FALSE(t.skipped);
    EXPECT_FALSE(t.condition_holds);
    EXPECT_FALSE(t.property_holds);
    EXPECT_TRUE(t.consistent);
    EXPECT_FALSE(t.witnesses.empty());
}

TEST(Theorems, ScreenParallelReportsStrictForm)
{
    const auto &t = find(suite(load("curved_ssi.spec")), "ssi.screen_parallel");
    ASSERT_FALSE(t.skipped);
    EXPECT_TRUE(t.consistent);
    ASSERT_TRUE(t.strict_property_holds.has_value());
    EXPECT_FALSE(*t.strict_property_holds);
}

TEST(Theorems, CorruptedFormBreaksNoTheoremSilently)
{
    // the hook only perturbs h^s; theorem evaluation must still run to completion
    const auto ms = load("example_4_6_eta.spec");
    const auto cls = classify(ms.space, ms.sub);
    EXPECT_NO_THROW(theorem_suite(TheoremContext{ms.space, ms.sub, cls, ConnectionOptions{true}}));
}
