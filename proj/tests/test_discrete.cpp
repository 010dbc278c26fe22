#include "frechet/discrete.hpp"
#include "frechet/oracles.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace frechet;
using namespace testsupport;

TEST(DisWave, NoSourcesNoOutput)
{
    Rng g(1);
    Curve t = random_walk(g, 6), s = random_walk(g, 5);
    DisWaveOutput w = dis_wave(t, s, 100.0, VertexSet(6, 0), VertexSet(5, 0));
    for (const auto& v : w.per_tau_vertex)
        EXPECT_TRUE(set_empty(v));
}

TEST(DisWave, HugeRadiusReachesEverything)
{
    Rng g(2);
    Curve t = random_walk(g, 6), s = random_walk(g, 7);
    DisWaveOutput w = dis_wave(t, s, 1e6, single_vertex(6, 0), single_vertex(7, 0));
    for (char f : w.per_tau_vertex.back())
        EXPECT_TRUE(f);
}

TEST(DisWave, EqualsPathOracle)
{
    Rng g(3);
    for (int it = 0; it < 300; ++it) {
        Curve t = random_walk(g, uniform_int(g, 2, 14)), s = random_walk(g, uniform_int(g, 2, 14));
        VertexSet S = random_vertex_set(g, t.size()), S2 = random_vertex_set(g, s.size());
        double r = uniform(g, 0.3, 2.5);
        DisWaveOutput w = dis_wave(t, s, r, S, S2);
        auto o = oracle::brute_dis_reach(t, s, r, S, S2);
        for (int i = 0; i < t.size(); ++i)
            for (int j = 0; j < s.size(); ++j) {
                EXPECT_EQ(w.per_tau_vertex[i][j], o[i][j]) << "it " << it << " (" << i << "," << j << ")";
                EXPECT_EQ(w.per_sigma_vertex[j][i], o[i][j]);
            }
    }
}

TEST(DisWave, EndsMatchFullRun)
{
    Rng g(4);
    for (int it = 0; it < 50; ++it) {
        Curve t = random_walk(g, 10), s = random_walk(g, 8);
        VertexSet S = random_vertex_set(g, t.size()), S2 = random_vertex_set(g, s.size());
        DisWaveOutput w = dis_wave(t, s, 1.0, S, S2);
        DisWaveEnds e = dis_wave_ends(t, s, 1.0, S, S2);
        EXPECT_EQ(e.last_tau, w.per_tau_vertex.back());
        EXPECT_EQ(e.last_sigma, w.per_sigma_vertex.back());
    }
}

TEST(DiscreteExact, EqualSequencesAreZero)
{
    Rng g(5);
    Curve c = random_walk(g, 12);
    EXPECT_EQ(discrete_compute_exact(c, c), 0.0);
}

TEST(DiscreteExact, PerIndexPairing)
{
    EXPECT_DOUBLE_EQ(discrete_compute_exact(segment(0, 0, 1, 0), segment(0, 1, 1, 1)), 1.0);
}

TEST(DiscreteExact, EqualsTextbookRecurrence)
{
    Rng g(6);
    for (int it = 0; it < 200; ++it) {
        Curve t = random_walk(g, uniform_int(g, 2, 40)), s = random_walk(g, uniform_int(g, 2, 40));
        EXPECT_EQ(discrete_compute_exact(t, s), oracle::brute_discrete_distance(t, s)) << "it " << it;
    }
}

TEST(DiscreteExact, DecisionThresholdIsSharp)
{
    Rng g(7);
    for (int it = 0; it < 100; ++it) {
        Curve t = random_walk(g, 15), s = random_walk(g, 12);
        double d = oracle::brute_discrete_distance(t, s);
        EXPECT_TRUE(discrete_decide_exact(t, s, d));
        EXPECT_FALSE(discrete_decide_exact(t, s, std::nextafter(d, 0.0)));
    }
}
