#pragma once

#include <logan/graph.hh>
#include <logan/theory.hh>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace logan {

enum class WitnessKind {
    odd_cycle,
    kuratowski_subgraph,
    extra_cycle_edge,
    disconnecting_split,
    triangle,
    unit_cut,
    directed_bridge,
    degree_deficit,
};

auto witness_kind_name(WitnessKind kind) -> std::string_view;

enum class Direction {
    none,
    in,
    out
};

/// A small substructure showing why a theory fails (or, for has_triangle,
/// why it holds).
///
///   odd_cycle            vertices: the cycle in order; edges: its edges
///   kuratowski_subgraph  edges: a K5 / K3,3 subdivision (empty if `partial`)
///   extra_cycle_edge     edges: {e}; vertices: a cycle through e
///   disconnecting_split  vertices: one side, with no edge leaving it
///   triangle             vertices: the three corners
///   unit_cut             endpoints: (s, t); edges: {e}, on every s->t path
///   directed_bridge      edges: {e}; endpoints: a pair only e connects
///   degree_deficit       vertices: {v}; direction: which degree is below 2;
///                        edges: all arcs of v on that side
struct Witness {
    WitnessKind kind = WitnessKind::odd_cycle;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::optional<Edge> endpoints;
    Direction direction = Direction::none;
    bool partial = false;

    auto to_string() const -> std::string;
};

struct CheckResult {
    bool holds = false;
    std::optional<Witness> witness;
};

class DirectednessMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Runs the certificate for `theory`.
///   bipartite: BFS 2-colouring, odd cycle on failure.
///   tree: DFS; a cycle edge, else a disconnecting split.
///   connected: union-find; the component split on failure.
///   planar: Euler bound, then the left-right test; Kuratowski subgraph on failure.
///   has_triangle / triangle_free: a triangle when one exists.
///   two_edge_strong: degree guard, directed bridges, then unit s->t cuts.
auto check(Theory theory, const Graph & g) -> CheckResult;

/// Graded violation in [0, 1]; zero exactly when check() holds.
auto certificate_loss(Theory theory, const Graph & g) -> double;

/// The degree_deficit witness for v on the given side.
auto deficit_witness(const Graph & d, Vertex v, Direction direction) -> Witness;

/// Independent re-verification of a witness against g.
auto verify_witness(const Graph & g, const Witness & witness) -> bool;

/// Union-find components; labels are the smallest vertex in each component.
auto component_labels(const Graph & g) -> std::vector<Vertex>;
auto component_count(const Graph & g) -> std::size_t;

/// Edges of G violated by the best 2-colouring found by BFS parity plus
/// greedy single-vertex flips.
auto greedy_two_colouring_violations(const Graph & g) -> std::size_t;

auto triangle_count(const Graph & g) -> std::size_t;

struct DirectedReport {
    std::size_t min_in_degree = 0;
    std::size_t min_out_degree = 0;
    std::vector<Edge> edges_not_on_any_directed_cycle;
    std::vector<Edge> directed_bridges;
};

/// Cheap guards for two edge-disjoint directed routes between every pair.
auto directed_proxies(const Graph & d) -> DirectedReport;

struct DisjointPaths {
    bool ok = false;
    /// Max flow from s to t, saturating at 2.
    int flow = 0;
    /// The edge shared by every s->t path when flow == 1.
    std::optional<Edge> cut_edge;
};

/// Unit-capacity max flow from s to t.
auto two_edge_disjoint(const Graph & d, Vertex s, Vertex t) -> DisjointPaths;

/// Vertices reachable from s in d, optionally ignoring one edge.
auto reachable_from(const Graph & d, Vertex s, std::optional<Edge> skip = std::nullopt) -> std::vector<bool>;

} // namespace logan
