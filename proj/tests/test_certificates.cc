#include "oracles.hh"

#include <logan/certificates.hh>
#include <logan/graph.hh>
#include <logan/planarity.hh>
#include <logan/samplers.hh>

#include <gtest/gtest.h>

#include <fstream>

using namespace logan;

namespace {
    struct Fixture {
        Graph graph;
        bool planar;
    };

    auto planarity_fixture() -> std::vector<Fixture>
    {
        std::ifstream in(LOGAN_TEST_DATA "/planarity.txt");
        std::vector<Fixture> result;
        std::size_t n, m;
        int planar;
        while (in >> n >> m >> planar) {
            Graph g(n);
            for (std::size_t i = 0; i < m; ++i) {
                Vertex u, v;
                in >> u >> v;
                g.add_edge(u, v);
            }
            result.push_back({std::move(g), planar == 1});
        }
        return result;
    }

    auto petersen() -> Graph
    {
        return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                         {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    }
}

TEST(Bipartite, EvenAndOddCycles)
{
    EXPECT_TRUE(check(Theory::bipartite, cycle_graph(6)).holds);
    auto r = check(Theory::bipartite, cycle_graph(5));
    EXPECT_FALSE(r.holds);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->kind, WitnessKind::odd_cycle);
    EXPECT_EQ(r.witness->vertices.size(), 5u);
    EXPECT_TRUE(verify_witness(cycle_graph(5), *r.witness));
}

TEST(Bipartite, LossOnFiveCycleMatchesExhaustiveColouring)
{
    auto c5 = cycle_graph(5);
    EXPECT_EQ(oracle::min_two_colouring_violations(c5), 1u);
    auto loss = certificate_loss(Theory::bipartite, c5);
    EXPECT_GT(loss, 0.0);
    EXPECT_LE(loss, 1.0 / 5.0);
}

TEST(Bipartite, GreedyNeverBeatsExhaustive)
{
    for (std::uint64_t s = 0; s < 300; ++s) {
        auto g = random_graph(4 + s % 9, 0.4, Seed{s});
        auto best = oracle::min_two_colouring_violations(g);
        auto greedy = greedy_two_colouring_violations(g);
        EXPECT_GE(greedy, best);
        EXPECT_EQ(greedy == 0, best == 0);
    }
}

TEST(Tree, PathAndCycle)
{
    EXPECT_TRUE(check(Theory::tree, path_graph(7)).holds);
    auto cyc = check(Theory::tree, cycle_graph(4));
    ASSERT_TRUE(cyc.witness);
    EXPECT_EQ(cyc.witness->kind, WitnessKind::extra_cycle_edge);
    auto forest = check(Theory::tree, Graph::from_edges(4, {{0, 1}, {2, 3}}));
    ASSERT_TRUE(forest.witness);
    EXPECT_EQ(forest.witness->kind, WitnessKind::disconnecting_split);
    EXPECT_TRUE(check(Theory::tree, Graph(1)).holds);
}

TEST(Connected, SplitWitnessAndLoss)
{
    auto g = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {7, 8}, {8, 9}});
    auto r = check(Theory::connected, g);
    EXPECT_FALSE(r.holds);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(verify_witness(g, *r.witness));
    EXPECT_EQ(component_count(g), 3u);
    EXPECT_NEAR(certificate_loss(Theory::connected, g), 2.0 / 9.0, 1e-12);
}

TEST(Components, LabelsAreSmallestVertex)
{
    auto g = Graph::from_edges(5, {{3, 1}, {4, 2}});
    EXPECT_EQ(component_labels(g), (std::vector<Vertex>{0, 1, 2, 1, 2}));
}

TEST(Planar, K5AndK4)
{
    auto k5 = check(Theory::planar, complete_graph(5));
    EXPECT_FALSE(k5.holds);
    ASSERT_TRUE(k5.witness);
    EXPECT_EQ(k5.witness->kind, WitnessKind::kuratowski_subgraph);
    EXPECT_FALSE(k5.witness->partial);
    EXPECT_EQ(k5.witness->edges.size(), 10u);
    EXPECT_TRUE(verify_witness(complete_graph(5), *k5.witness));
    EXPECT_TRUE(check(Theory::planar, complete_graph(4)).holds);
}

TEST(Planar, K33AndPetersen)
{
    EXPECT_FALSE(is_planar(complete_bipartite(3, 3)));
    auto p = petersen();
    auto r = check(Theory::planar, p);
    EXPECT_FALSE(r.holds);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(verify_witness(p, *r.witness));
}

TEST(Planar, AgreesWithFrozenReference)
{
    auto fixture = planarity_fixture();
    ASSERT_GT(fixture.size(), 400u);
    for (const auto & [g, planar] : fixture) {
        ASSERT_EQ(is_planar(g), planar) << to_text(g);
        if (! planar) {
            auto edges = kuratowski_subgraph(g);
            EXPECT_TRUE(is_kuratowski_subdivision(g.vertex_count(), edges));
        }
    }
}

TEST(Planar, EulerBoundRespected)
{
    for (std::uint64_t s = 0; s < 200; ++s) {
        auto n = 5 + s % 8;
        auto g = random_graph(n, 0.7, Seed{s});
        if (g.edge_count() > 3 * n - 6)
            EXPECT_FALSE(is_planar(g));
    }
}

TEST(Planar, SubdivisionRecogniser)
{
    auto k33 = complete_bipartite(3, 3).edge_list();
    EXPECT_TRUE(is_kuratowski_subdivision(6, k33));
    // subdivide one edge of K3,3 through a fresh vertex
    Graph sub(7);
    for (auto [u, v] : k33)
        if (! (u == 0 && v == 3))
            sub.add_edge(u, v);
    sub.add_edge(0, 6);
    sub.add_edge(6, 3);
    EXPECT_TRUE(is_kuratowski_subdivision(7, sub.edge_list()));
    EXPECT_FALSE(is_kuratowski_subdivision(4, complete_graph(4).edge_list()));
    EXPECT_FALSE(is_kuratowski_subdivision(5, cycle_graph(5).edge_list()));
}

TEST(Triangle, BothPolarities)
{
    auto has = check(Theory::has_triangle, complete_graph(3));
    EXPECT_TRUE(has.holds);
    ASSERT_TRUE(has.witness);
    EXPECT_EQ(has.witness->kind, WitnessKind::triangle);
    EXPECT_FALSE(check(Theory::has_triangle, cycle_graph(4)).holds);
    EXPECT_TRUE(check(Theory::triangle_free, cycle_graph(4)).holds);
    auto forbidden = check(Theory::triangle_free, complete_graph(4));
    EXPECT_FALSE(forbidden.holds);
    ASSERT_TRUE(forbidden.witness);
    EXPECT_TRUE(verify_witness(complete_graph(4), *forbidden.witness));
    EXPECT_NEAR(certificate_loss(Theory::triangle_free, complete_graph(4)), 1.0, 1e-12);
    EXPECT_EQ(triangle_count(complete_graph(5)), 10u);
}

TEST(Directedness, MismatchThrows)
{
    EXPECT_THROW(check(Theory::bipartite, directed_cycle(4)), DirectednessMismatch);
    EXPECT_THROW(check(Theory::two_edge_strong, cycle_graph(4)), DirectednessMismatch);
    EXPECT_THROW(directed_proxies(cycle_graph(4)), DirectednessMismatch);
    EXPECT_THROW(two_edge_disjoint(cycle_graph(4), 0, 1), DirectednessMismatch);
    EXPECT_THROW(two_edge_disjoint(directed_cycle(4), 1, 1), std::invalid_argument);
}

TEST(DirectedProxies, BidirectedCycle)
{
    auto report = directed_proxies(bidirected_cycle(6));
    EXPECT_EQ(report.min_in_degree, 2u);
    EXPECT_EQ(report.min_out_degree, 2u);
    EXPECT_TRUE(report.directed_bridges.empty());
    EXPECT_TRUE(report.edges_not_on_any_directed_cycle.empty());
}

TEST(DirectedProxies, OneWayCycle)
{
    auto report = directed_proxies(directed_cycle(6));
    EXPECT_EQ(report.min_in_degree, 1u);
    EXPECT_EQ(report.min_out_degree, 1u);
    EXPECT_TRUE(report.edges_not_on_any_directed_cycle.empty());
    EXPECT_EQ(report.directed_bridges.size(), 6u);
}

TEST(DirectedProxies, SingleArc)
{
    auto report = directed_proxies(Graph::from_edges(2, {{0, 1}}, true));
    EXPECT_EQ(report.edges_not_on_any_directed_cycle, (std::vector<Edge>{{0, 1}}));
    EXPECT_EQ(report.directed_bridges, (std::vector<Edge>{{0, 1}}));
}

TEST(TwoEdgeDisjoint, Examples)
{
    auto bi = bidirected_cycle(6);
    auto one = directed_cycle(6);
    for (Vertex s = 0; s < 6; ++s)
        for (Vertex t = 0; t < 6; ++t) {
            if (s == t)
                continue;
            EXPECT_TRUE(two_edge_disjoint(bi, s, t).ok);
            auto r = two_edge_disjoint(one, s, t);
            EXPECT_FALSE(r.ok);
            ASSERT_TRUE(r.cut_edge);
            EXPECT_TRUE(one.has_edge(r.cut_edge->u, r.cut_edge->v));
        }
    auto diamond = Graph::from_edges(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}}, true);
    auto r = two_edge_disjoint(diamond, 0, 3);
    EXPECT_TRUE(r.ok);
    EXPECT_FALSE(r.cut_edge);
    auto unreachable = two_edge_disjoint(diamond, 3, 0);
    EXPECT_FALSE(unreachable.ok);
    EXPECT_EQ(unreachable.flow, 0);
    EXPECT_FALSE(unreachable.cut_edge);
}

TEST(TwoEdgeDisjoint, AgreesWithPathEnumerationOnFiveVertices)
{
    for (std::uint64_t s = 0; s < 300; ++s) {
        auto d = random_digraph(5, 0.25 + 0.1 * static_cast<double>(s % 5), Seed{s});
        for (Vertex a = 0; a < 5; ++a)
            for (Vertex b = 0; b < 5; ++b) {
                if (a == b)
                    continue;
                auto r = two_edge_disjoint(d, a, b);
                auto expected = oracle::disjoint_path_count(d, a, b);
                ASSERT_EQ(r.flow, expected);
                if (expected == 1) {
                    ASSERT_TRUE(r.cut_edge);
                    EXPECT_TRUE(oracle::on_every_path(d, a, b, {r.cut_edge->u, r.cut_edge->v}));
                }
            }
    }
}

TEST(TwoEdgeStrong, Examples)
{
    EXPECT_TRUE(check(Theory::two_edge_strong, bidirected_cycle(6)).holds);
    auto r = check(Theory::two_edge_strong, directed_cycle(6));
    EXPECT_FALSE(r.holds);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->kind, WitnessKind::degree_deficit);
    EXPECT_TRUE(verify_witness(directed_cycle(6), *r.witness));
    EXPECT_NEAR(certificate_loss(Theory::two_edge_strong, directed_cycle(6)), 1.0, 1e-12);
    EXPECT_EQ(certificate_loss(Theory::two_edge_strong, bidirected_cycle(6)), 0.0);
}

TEST(TwoEdgeStrong, BridgeAndUnitCutWitnesses)
{
    // two bidirected triangles joined by a single arc each way: degrees are fine
    auto d = Graph::from_edges(6, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}, {3, 4}, {4, 3}, {4, 5}, {5, 4}, {3, 5}, {5, 3},
                                      {2, 3}, {4, 0}}, true);
    auto r = check(Theory::two_edge_strong, d);
    EXPECT_FALSE(r.holds);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->kind, WitnessKind::directed_bridge);
    EXPECT_TRUE(verify_witness(d, *r.witness));
}

TEST(Witnesses, RejectTampering)
{
    auto c5 = cycle_graph(5);
    auto w = *check(Theory::bipartite, c5).witness;
    auto tampered = w;
    tampered.vertices.pop_back();
    EXPECT_FALSE(verify_witness(c5, tampered));
    EXPECT_FALSE(verify_witness(path_graph(5), w));
}

TEST(Loss, ZeroIffHolds)
{
    for (std::uint64_t s = 0; s < 1000; ++s) {
        auto n = 3 + s % 9;
        for (auto t : all_theories) {
            auto g = theory_is_directed(t) ? random_digraph(n, 0.45, Seed{s}) : random_graph(n, 0.3, Seed{s});
            auto holds = check(t, g).holds;
            auto loss = certificate_loss(t, g);
            ASSERT_EQ(loss == 0.0, holds) << theory_name(t) << ' ' << to_text(g);
            EXPECT_GE(loss, 0.0);
            EXPECT_LE(loss, 1.0);
        }
    }
}

TEST(Loss, CheckAgreesWithOracles)
{
    for (std::uint64_t s = 0; s < 500; ++s) {
        auto g = random_graph(3 + s % 9, 0.3, Seed{s});
        EXPECT_EQ(check(Theory::bipartite, g).holds, oracle::is_bipartite(g));
        EXPECT_EQ(check(Theory::tree, g).holds, oracle::is_tree(g));
        EXPECT_EQ(check(Theory::connected, g).holds, oracle::components(g) == 1);
        EXPECT_EQ(check(Theory::triangle_free, g).holds, oracle::triangles(g) == 0);
        EXPECT_EQ(triangle_count(g), oracle::triangles(g));
    }
}
