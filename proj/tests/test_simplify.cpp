#include "frechet/discrete.hpp"
#include "frechet/oracles.hpp"
#include "frechet/simplify.hpp"
#include "frechet/wavefront.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace frechet;
using namespace testsupport;

TEST(SimplifyContinuous, CollinearCollapsesToTwo)
{
    std::vector<double> xs;
    for (int i = 0; i < 10; ++i) {
        xs.push_back(i);
        xs.push_back(2 * i);
    }
    Curve c(2, xs);
    auto s = simplify_continuous(c, 0.01, 2);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(s->simplified.size(), 2);
    EXPECT_TRUE(decide_exact(c, s->simplified, 0.0));
}

TEST(SimplifyContinuous, LargeDeltaKeepsEndpointsOnly)
{
    Rng g(1);
    Curve c = random_walk(g, 15);
    auto s = simplify_continuous(c, 10 * bbox_diameter(c, c), 2);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(s->kept, (std::vector<int>{0, c.size() - 1}));
}

TEST(SimplifyContinuous, CertifiedAndMinimal)
{
    Rng g(2);
    for (int it = 0; it < 150; ++it) {
        Curve c = random_walk(g, 12);
        double delta = uniform(g, 0.1, 1.5);
        auto s = simplify_continuous(c, delta, 100);
        ASSERT_TRUE(s.has_value());
        EXPECT_DOUBLE_EQ(s->error_bound, 2 * delta);
        EXPECT_TRUE(decide_exact(c, s->simplified, s->error_bound)) << "it " << it;
        EXPECT_EQ(s->simplified.size(), oracle::min_vertex_restricted(c, 2 * delta)) << "it " << it;
        EXPECT_EQ(s->kept.front(), 0);
        EXPECT_EQ(s->kept.back(), c.size() - 1);
    }
}

TEST(SimplifyContinuous, OverBudgetGivesNull)
{
    Curve z = generate_synthetic(SyntheticKind::Zigzag, 12, 0, {3.0});
    EXPECT_EQ(oracle::min_vertex_restricted(z, 0.2), 12);
    EXPECT_FALSE(simplify_continuous(z, 0.1, 11).has_value());
    EXPECT_TRUE(simplify_continuous(z, 0.1, 12).has_value());
}

TEST(SimplifyContinuous, SubrangeCountsMatchWholeCurveRuns)
{
    Rng g(3);
    for (int it = 0; it < 30; ++it) {
        Curve c = random_walk(g, 14);
        double r = uniform(g, 0.2, 2.0);
        ContinuousSimplifier simp(c, 0, c.size() - 1, r);
        int a = uniform_int(g, 0, c.size() - 2);
        int b = uniform_int(g, a + 1, c.size() - 1);
        EXPECT_EQ(simp.count(a, b), oracle::min_vertex_restricted(c.slice(a, b), r));
        std::vector<int> kept = simp.kept(a, b);
        EXPECT_EQ(static_cast<int>(kept.size()), simp.count(a, b));
        EXPECT_TRUE(decide_exact(c.slice(a, b), curve_from_indices(c, kept), r));
    }
}

// whenever some k-vertex curve on a fine grid lies within delta, the vertex-restricted
// search at twice the error and budget 2k+2 succeeds
TEST(SimplifyContinuous, CompleteAtDoubledError)
{
    Rng g(4);
    int checked = 0;
    for (int it = 0; it < 40; ++it) {
        Curve c = random_walk(g, uniform_int(g, 4, 7), 0.8);
        double delta = uniform(g, 0.3, 0.8);
        auto k = oracle::brute_min_simplification(c, delta, delta / 2, 3);
        if (!k)
            continue;
        ++checked;
        EXPECT_TRUE(simplify_continuous(c, delta, 2 * *k + 2).has_value()) << "it " << it;
        EXPECT_LE(simplify_continuous(c, delta, 100)->simplified.size(), 2 * *k + 2);
    }
    EXPECT_GT(checked, 10);
}

TEST(SimplifyDiscrete, NearDuplicatesCollapse)
{
    Curve c = polyline({0, 0, 0.01, 0, 0, 0.01, 5, 0, 5.01, 0, 5, 0.01});
    auto s = simplify_discrete(c, 0.05, 10);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(s->simplified.size(), 2);
    EXPECT_EQ(oracle::min_discrete_subsequence(c, 0.1), 2);
}

TEST(SimplifyDiscrete, ZeroDeltaKeepsEverything)
{
    Rng g(5);
    Curve c = random_walk(g, 9);
    auto s = simplify_discrete(c, 0.0, 100);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(s->simplified, c);
}

TEST(SimplifyDiscrete, MatchesExhaustiveMinimum)
{
    Rng g(6);
    for (int it = 0; it < 100; ++it) {
        Curve c = random_walk(g, 10);
        double delta = uniform(g, 0.1, 1.5);
        auto s = simplify_discrete(c, delta, 100);
        ASSERT_TRUE(s.has_value());
        EXPECT_EQ(s->simplified.size(), oracle::min_discrete_subsequence(c, 2 * delta)) << "it " << it;
        EXPECT_TRUE(discrete_decide_exact(c, s->simplified, 2 * delta));
    }
}

TEST(SimplifyDiscrete, OverBudgetGivesNull)
{
    Curve z = generate_synthetic(SyntheticKind::Zigzag, 8, 0, {3.0});
    EXPECT_FALSE(simplify_discrete(z, 0.1, 7).has_value());
    EXPECT_TRUE(simplify_discrete(z, 0.1, 8).has_value());
}
