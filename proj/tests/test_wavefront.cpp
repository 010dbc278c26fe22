#include "frechet/discrete.hpp"
#include "frechet/oracles.hpp"
#include "frechet/wavefront.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace frechet;
using namespace testsupport;

namespace {

// intervals agree up to tol; an empty side may only face a sliver
::testing::AssertionResult same_interval(const Interval& a, const Interval& b, double tol)
{
    if (a.empty && b.empty)
        return ::testing::AssertionSuccess();
    if (a.empty != b.empty) {
        const Interval& f = a.empty ? b : a;
        if (f.hi - f.lo <= tol)
            return ::testing::AssertionSuccess();
        return ::testing::AssertionFailure() << "one side empty, other [" << f.lo << "," << f.hi << "]";
    }
    if (std::abs(a.lo - b.lo) <= tol && std::abs(a.hi - b.hi) <= tol)
        return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "[" << a.lo << "," << a.hi << "] vs [" << b.lo << "," << b.hi << "]";
}

}  // namespace

TEST(WaveFront, NoSourcesNoOutput)
{
    Rng g(1);
    Curve t = random_walk(g, 6), s = random_walk(g, 5);
    WaveFrontOutput w = wavefront(t, s, 100.0, empty_array(t.edges()), empty_array(s.edges()));
    for (const auto& a : w.per_tau_vertex)
        EXPECT_TRUE(all_empty(a));
    for (const auto& a : w.per_sigma_vertex)
        EXPECT_TRUE(all_empty(a));
}

TEST(WaveFront, HugeRadiusReachesEverything)
{
    Rng g(2);
    Curve t = random_walk(g, 6), s = random_walk(g, 7);
    double r = 10 * bbox_diameter(t, s);
    WaveFrontOutput w = wavefront(t, s, r, first_vertex_source(t.edges()), first_vertex_source(s.edges()));
    for (int i = 0; i < t.size(); ++i)
        for (int j = 0; j < s.edges(); ++j) {
            EXPECT_EQ(w.per_tau_vertex[i][j].lo, 0.0);
            EXPECT_EQ(w.per_tau_vertex[i][j].hi, 1.0);
        }
}

TEST(WaveFront, ParallelSegmentsDegenerateEnd)
{
    Curve t = segment(0, 0, 2, 0), s = segment(0, 1, 2, 1);
    WaveFrontOutput w = wavefront(t, s, 1.0, first_vertex_source(1), first_vertex_source(1));
    const Interval& iv = w.per_tau_vertex[1][0];
    ASSERT_FALSE(iv.empty);
    EXPECT_NEAR(iv.lo, 1.0, 1e-9);
    EXPECT_NEAR(iv.hi, 1.0, 1e-9);

    oracle::Wave o = oracle::brute_wave(t, s, 1.0, first_vertex_source(1), first_vertex_source(1));
    EXPECT_TRUE(same_interval(iv, o.cols[1][0], 1e-9));
}

TEST(WaveFront, MatchesCellOracleWithRandomSources)
{
    Rng g(3);
    for (int it = 0; it < 300; ++it) {
        Curve t = random_walk(g, uniform_int(g, 2, 9)), s = random_walk(g, uniform_int(g, 2, 9));
        IntervalArray S = random_sources(g, t.edges()), S2 = random_sources(g, s.edges());
        double r = uniform(g, 0.2, 2.0);
        WaveFrontOutput w = wavefront(t, s, r, S, S2);
        oracle::Wave o = oracle::brute_wave(t, s, r, S, S2);
        double tol = 1e-7;
        for (int i = 0; i < t.size(); ++i)
            for (int j = 0; j < s.edges(); ++j)
                EXPECT_TRUE(same_interval(w.per_tau_vertex[i][j], o.cols[i][j], tol)) << "it " << it;
        for (int j = 0; j < s.size(); ++j)
            for (int i = 0; i < t.edges(); ++i)
                EXPECT_TRUE(same_interval(w.per_sigma_vertex[j][i], o.rows[j][i], tol)) << "it " << it;
    }
}

TEST(WaveFront, OutputsStayInsideVertexBalls)
{
    Rng g(4);
    for (int it = 0; it < 100; ++it) {
        Curve t = random_walk(g, 8), s = random_walk(g, 8);
        double r = uniform(g, 0.3, 2.0);
        WaveFrontOutput w = wavefront(t, s, r, random_sources(g, t.edges()), random_sources(g, s.edges()));
        double eta = tolerance_eta(t, s) + 1e-9;
        for (int i = 0; i < t.size(); ++i)
            for (int j = 0; j < s.edges(); ++j) {
                const Interval& iv = w.per_tau_vertex[i][j];
                if (iv.empty)
                    continue;
                for (double u : {iv.lo, 0.5 * (iv.lo + iv.hi), iv.hi})
                    EXPECT_LE(dist(t.point(i), s.at(j + u)), r + eta);
            }
    }
}

TEST(DecideExact, IdenticalCurvesAtZero)
{
    Rng g(5);
    Curve c = random_walk(g, 10);
    EXPECT_TRUE(decide_exact(c, c, 0.0));
}

TEST(DecideExact, UnitOffsetSegments)
{
    Curve t = segment(0, 0, 2, 0), s = segment(0, 1, 2, 1);
    EXPECT_FALSE(decide_exact(t, s, 0.999));
    EXPECT_TRUE(decide_exact(t, s, 1.0));
}

TEST(DecideExact, AgreesWithOracle)
{
    Rng g(6);
    int disagreements = 0;
    for (int it = 0; it < 500; ++it) {
        Curve t = random_walk(g, uniform_int(g, 2, 20)), s = random_walk(g, uniform_int(g, 2, 20));
        double d = oracle::brute_distance(t, s, 1e-9);
        for (double f : {0.5, 0.9, 1.0, 1.1, 2.0})
            disagreements += decide_exact(t, s, f * d) != oracle::brute_decide(t, s, f * d);
    }
    EXPECT_EQ(disagreements, 0);
}

TEST(DecideExact, MonotoneInDelta)
{
    Rng g(7);
    for (int it = 0; it < 100; ++it) {
        Curve t = random_walk(g, 10), s = random_walk(g, 12);
        bool prev = false;
        for (int k = 0; k <= 40; ++k) {
            bool now = decide_exact(t, s, 0.1 * k);
            EXPECT_FALSE(prev && !now);
            prev = now;
        }
    }
}

TEST(ComputeExact, IdenticalIsZero)
{
    Rng g(8);
    Curve c = random_walk(g, 12);
    EXPECT_EQ(compute_exact(c, c), 0.0);
}

TEST(ComputeExact, UnitOffsetSegments)
{
    EXPECT_NEAR(compute_exact(segment(0, 0, 2, 0), segment(0, 1, 2, 1), 1e-9), 1.0, 1e-8);
}

TEST(ComputeExact, BetweenEndpointBoundAndDiscreteValue)
{
    Rng g(9);
    for (int it = 0; it < 50; ++it) {
        Curve t = random_walk(g, 16), s = random_walk(g, 16);
        double v = compute_exact(t, s, 1e-9);
        double ends = std::max(dist(t.point(0), s.point(0)), dist(t.point(t.size() - 1), s.point(s.size() - 1)));
        EXPECT_GE(v, ends * (1 - 1e-9));
        EXPECT_LE(v, oracle::brute_discrete_distance(t, s) * (1 + 1e-9));
    }
}

TEST(ComputeExact, BracketsTheDecision)
{
    Rng g(10);
    for (int it = 0; it < 50; ++it) {
        Curve t = random_walk(g, 9), s = random_walk(g, 11);
        double v = compute_exact(t, s, 1e-6);
        EXPECT_TRUE(decide_exact(t, s, v * (1 + 1e-6)));
        EXPECT_FALSE(decide_exact(t, s, v * (1 - 1e-6)));
    }
}

// d_F(t[x1,y2], s[p,q]) never exceeds the larger of d_F(t[x1,y1], s[p,q]) and d_F(t[x2,y2], s[p,q])
// when x1 <= x2 <= y2 <= y1
TEST(Planarity, NestedSubcurvesStayReachable)
{
    Rng g(12);
    for (int it = 0; it < 200; ++it) {
        Curve t = random_walk(g, 7), s = random_walk(g, 5);
        double u[4];
        for (double& x : u)
            x = uniform(g, 0, t.edges());
        std::sort(u, u + 4);
        double p = uniform(g, 0, s.edges()), q = uniform(g, 0, s.edges());
        if (p > q)
            std::swap(p, q);
        Curve sq = subcurve_param(s, p, q);
        double r1 = oracle::brute_distance(subcurve_param(t, u[0], u[3]), sq, 1e-9);
        double r2 = oracle::brute_distance(subcurve_param(t, u[1], u[2]), sq, 1e-9);
        double r = std::max(r1, r2) * (1 + 1e-8) + 1e-12;
        EXPECT_TRUE(oracle::brute_decide(subcurve_param(t, u[0], u[2]), sq, r)) << "it " << it;
    }
}
