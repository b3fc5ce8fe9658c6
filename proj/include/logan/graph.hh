#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace logan {

using Vertex = std::uint32_t;

/// An edge (u, v). For undirected graphs it is stored with u < v.
struct Edge {
    Vertex u = 0, v = 0;

    auto operator<=>(const Edge &) const = default;
};

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Finite simple (di)graph on vertices 0..n-1. No self-loops, no parallel
/// edges; the edge set iterates in sorted order.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n, bool directed = false);

    static auto from_edges(std::size_t n, const std::vector<Edge> & edges, bool directed = false) -> Graph;

    auto vertex_count() const -> std::size_t { return n_; }
    auto edge_count() const -> std::size_t { return edges_.size(); }
    auto directed() const -> bool { return directed_; }

    auto has_edge(Vertex u, Vertex v) const -> bool;
    /// Adjacent in either direction.
    auto adjacent(Vertex u, Vertex v) const -> bool { return has_edge(u, v) || has_edge(v, u); }

    /// Returns false if the edge was already present.
    auto add_edge(Vertex u, Vertex v) -> bool;
    /// Returns false if the edge was absent.
    auto remove_edge(Vertex u, Vertex v) -> bool;
    /// Adds the edge if absent, removes it otherwise.
    auto toggle_edge(Vertex u, Vertex v) -> void;

    auto edges() const -> const std::set<Edge> & { return edges_; }
    auto edge_list() const -> std::vector<Edge> { return {edges_.begin(), edges_.end()}; }

    /// Undirected: all neighbours. Directed: out-neighbours. Sorted.
    auto neighbours(Vertex v) const -> const std::vector<Vertex> & { return out_[v]; }
    auto out_neighbours(Vertex v) const -> const std::vector<Vertex> & { return out_[v]; }
    /// Undirected: same as neighbours.
    auto in_neighbours(Vertex v) const -> const std::vector<Vertex> & { return directed_ ? in_[v] : out_[v]; }

    auto degree(Vertex v) const -> std::size_t { return out_[v].size(); }
    auto out_degree(Vertex v) const -> std::size_t { return out_[v].size(); }
    auto in_degree(Vertex v) const -> std::size_t { return in_neighbours(v).size(); }

    /// Normalised key for the pair: (min, max) when undirected.
    auto key(Vertex u, Vertex v) const -> Edge;

    /// Subgraph on the kept edges only (same vertex set).
    auto with_edges(const std::vector<Edge> & edges) const -> Graph;

    /// Relabels vertex v as perm[v].
    auto permuted(const std::vector<Vertex> & perm) const -> Graph;

    auto operator==(const Graph & other) const -> bool
    {
        return n_ == other.n_ && directed_ == other.directed_ && edges_ == other.edges_;
    }

private:
    auto check_pair(Vertex u, Vertex v) const -> void;

    std::size_t n_ = 0;
    bool directed_ = false;
    std::vector<std::uint8_t> matrix_;
    std::set<Edge> edges_;
    std::vector<std::vector<Vertex>> out_, in_;
};

/// Text format: "n m d" on the first line, then m lines "u v".
auto write_graph(std::ostream & out, const Graph & g) -> void;
auto read_graph(std::istream & in) -> Graph;
auto to_text(const Graph & g) -> std::string;
auto from_text(const std::string & text) -> Graph;

// Small named families, handy for tests and exemplars.
auto cycle_graph(std::size_t n) -> Graph;
auto path_graph(std::size_t n) -> Graph;
auto complete_graph(std::size_t n) -> Graph;
auto complete_bipartite(std::size_t a, std::size_t b) -> Graph;
auto star_graph(std::size_t leaves) -> Graph;
auto empty_graph(std::size_t n) -> Graph;
/// One-way directed cycle 0 -> 1 -> ... -> n-1 -> 0.
auto directed_cycle(std::size_t n) -> Graph;
/// Directed cycle with both orientations of every edge.
auto bidirected_cycle(std::size_t n) -> Graph;

} // namespace logan
