#include "oracles.hh"

#include <logan/graph.hh>
#include <logan/rng.hh>
#include <logan/samplers.hh>
#include <logan/wl.hh>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace logan;

TEST(Refine, VertexTransitiveCycleHasOneClass)
{
    auto c = wl::refine(cycle_graph(6), 3);
    EXPECT_EQ(c.class_count(), 1u);
    EXPECT_EQ(c.rounds, 0u);
}

TEST(Refine, StarSplitsCentreFromLeaves)
{
    auto c = wl::refine(star_graph(4), 2);
    EXPECT_EQ(c.class_count(), 2u);
    for (Vertex v = 2; v < 5; ++v)
        EXPECT_EQ(c.colors[v], c.colors[1]);
    EXPECT_NE(c.colors[0], c.colors[1]);
}

TEST(Refine, PathP4MatchesAutomorphismOrbits)
{
    auto g = path_graph(4);
    auto c = wl::refine(g, 3);
    EXPECT_EQ(c.class_count(), 2u);
    for (const auto & perm : oracle::automorphisms(g))
        for (Vertex v = 0; v < 4; ++v)
            EXPECT_EQ(c.colors[v], c.colors[perm[v]]);
    EXPECT_EQ(c.colors[0], c.colors[3]);
    EXPECT_EQ(c.colors[1], c.colors[2]);
    EXPECT_NE(c.colors[0], c.colors[1]);
}

TEST(Refine, ZeroRoundsIsUniform)
{
    auto c = wl::refine(star_graph(4), 0);
    EXPECT_EQ(c.class_count(), 1u);
}

TEST(Refine, ColourIdsAreDense)
{
    auto c = wl::refine(path_graph(7), 10);
    auto k = c.class_count();
    for (auto colour : c.colors)
        EXPECT_LT(colour, k);
}

TEST(Refine, ReachesFixedPointWithinNRounds)
{
    for (std::uint64_t s = 0; s < 200; ++s) {
        auto g = random_graph(3 + s % 12, 0.3, Seed{s});
        auto c = wl::refine(g, 1000);
        EXPECT_LE(c.rounds, g.vertex_count());
        auto again = wl::refine(g, c.rounds + 5);
        EXPECT_EQ(again.class_count(), c.class_count());
    }
}

TEST(Refine, MonotoneRefinement)
{
    for (std::uint64_t s = 0; s < 100; ++s) {
        auto g = random_graph(10, 0.3, Seed{s});
        for (std::size_t r = 0; r < 4; ++r) {
            auto coarse = wl::refine(g, r);
            auto fine = wl::refine(g, r + 1);
            for (Vertex u = 0; u < 10; ++u)
                for (Vertex v = 0; v < 10; ++v)
                    if (fine.colors[u] == fine.colors[v])
                        EXPECT_EQ(coarse.colors[u], coarse.colors[v]);
        }
    }
}

TEST(Signature, StarCentreDiffersFromLeaf)
{
    auto g = star_graph(4);
    EXPECT_NE(wl::signature(g, 0, 1), wl::signature(g, 1, 1));
    EXPECT_EQ(wl::signature(g, 1, 1), wl::signature(g, 4, 1));
}

TEST(Signature, P4EndpointsAgreeAtEveryDepth)
{
    auto g = path_graph(4);
    for (std::size_t d = 0; d <= 5; ++d) {
        EXPECT_EQ(wl::signature(g, 0, d), wl::signature(g, 3, d));
        EXPECT_EQ(wl::signature(g, 1, d), wl::signature(g, 2, d));
    }
}

TEST(Signature, AutomorphicVerticesAgree)
{
    for (std::uint64_t s = 0; s < 40; ++s) {
        auto g = random_graph(6, 0.4, Seed{s});
        auto table = wl::signature_table(g, 3);
        for (const auto & perm : oracle::automorphisms(g))
            for (Vertex v = 0; v < 6; ++v)
                EXPECT_EQ(table[3][v], table[3][perm[v]]);
    }
}

TEST(Signature, PermutationInvariantMultisets)
{
    for (std::uint64_t s = 0; s < 1000; ++s) {
        auto n = 2 + s % 11;
        auto g = random_graph(n, 0.35, Seed{s});
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        Rng rng(Seed{s + 7});
        rng.shuffle(perm);
        auto h = g.permuted(perm);
        auto a = wl::signature_table(g, 4);
        auto b = wl::signature_table(h, 4);
        for (std::size_t d = 0; d <= 4; ++d) {
            auto x = a[d], y = b[d];
            std::sort(x.begin(), x.end());
            std::sort(y.begin(), y.end());
            ASSERT_EQ(x, y) << "seed " << s << " depth " << d;
        }
    }
}

TEST(Signature, DirectedOrientationMatters)
{
    auto d = Graph::from_edges(2, {{0, 1}}, true);
    EXPECT_NE(wl::signature(d, 0, 1), wl::signature(d, 1, 1));
}

TEST(Signature, StableAcrossRuns)
{
    auto g = cycle_graph(5);
    EXPECT_EQ(wl::signature(g, 0, 2), wl::signature(cycle_graph(5), 0, 2));
    std::vector<std::uint64_t> words{1, 2, 3};
    EXPECT_EQ(wl::fnv1a64(words), wl::fnv1a64(words));
    EXPECT_NE(wl::fnv1a64(words), wl::fnv1a64(std::vector<std::uint64_t>{3, 2, 1}));
}
