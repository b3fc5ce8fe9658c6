#pragma once

// Brute-force reference implementations. They share no code with the library
// beyond the Graph container and are only fit for tiny inputs.

#include <logan/graph.hh>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using logan::Graph;
using logan::Vertex;

inline auto consistent(const Graph & g, const Graph & h, const std::vector<std::pair<Vertex, Vertex>> & map) -> bool
{
    for (std::size_t i = 0; i < map.size(); ++i)
        for (std::size_t j = 0; j < map.size(); ++j) {
            auto [a, b] = map[i];
            auto [c, d] = map[j];
            if ((a == c) != (b == d))
                return false;
            if (a != c && g.has_edge(a, c) != h.has_edge(b, d))
                return false;
        }
    return true;
}

/// Does Duplicator survive `rounds` more rounds from `map`? Plain recursion.
inline auto duplicator_survives(const Graph & g, const Graph & h, std::vector<std::pair<Vertex, Vertex>> & map, int rounds) -> bool
{
    if (rounds == 0)
        return true;
    for (int side = 0; side < 2; ++side) {
        const auto & own = side == 0 ? g : h;
        const auto & other = side == 0 ? h : g;
        for (Vertex v = 0; v < own.vertex_count(); ++v) {
            bool answered = false;
            for (Vertex w = 0; w < other.vertex_count() && ! answered; ++w) {
                map.emplace_back(side == 0 ? v : w, side == 0 ? w : v);
                if (consistent(g, h, map) && duplicator_survives(g, h, map, rounds - 1))
                    answered = true;
                map.pop_back();
            }
            if (! answered)
                return false;
        }
    }
    return true;
}

inline auto round_resilience(const Graph & g, const Graph & h, int k_max) -> int
{
    std::vector<std::pair<Vertex, Vertex>> map;
    int r = 0;
    while (r < k_max && duplicator_survives(g, h, map, r + 1))
        ++r;
    return r;
}

/// Fewest edges left monochromatic over all 2^n colourings.
inline auto min_two_colouring_violations(const Graph & g) -> std::size_t
{
    const auto n = g.vertex_count();
    std::size_t best = g.edge_count();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::size_t bad = 0;
        for (auto [u, v] : g.edges())
            bad += ((mask >> u) & 1u) == ((mask >> v) & 1u);
        best = std::min(best, bad);
    }
    return best;
}

/// Every simple directed s->t path, as a set of arcs.
inline auto simple_paths(const Graph & d, Vertex s, Vertex t) -> std::vector<std::set<std::pair<Vertex, Vertex>>>
{
    std::vector<std::set<std::pair<Vertex, Vertex>>> paths;
    std::vector<bool> on_path(d.vertex_count(), false);
    std::set<std::pair<Vertex, Vertex>> arcs;
    std::function<void(Vertex)> walk = [&](Vertex v) {
        if (v == t) {
            paths.push_back(arcs);
            return;
        }
        on_path[v] = true;
        for (Vertex w = 0; w < d.vertex_count(); ++w)
            if (d.has_edge(v, w) && ! on_path[w]) {
                arcs.emplace(v, w);
                walk(w);
                arcs.erase({v, w});
            }
        on_path[v] = false;
    };
    walk(s);
    return paths;
}

/// 0, 1 or 2: how many pairwise arc-disjoint s->t paths exist, saturating at 2.
inline auto disjoint_path_count(const Graph & d, Vertex s, Vertex t) -> int
{
    auto paths = simple_paths(d, s, t);
    if (paths.empty())
        return 0;
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
            bool disjoint = std::none_of(paths[i].begin(), paths[i].end(), [&](const auto & arc) { return paths[j].count(arc) > 0; });
            if (disjoint)
                return 2;
        }
    return 1;
}

/// True iff the arc lies on every simple s->t path.
inline auto on_every_path(const Graph & d, Vertex s, Vertex t, std::pair<Vertex, Vertex> arc) -> bool
{
    auto paths = simple_paths(d, s, t);
    return ! paths.empty() && std::all_of(paths.begin(), paths.end(), [&](const auto & p) { return p.count(arc) > 0; });
}

/// All automorphisms, by trying every permutation.
inline auto automorphisms(const Graph & g) -> std::vector<std::vector<Vertex>>
{
    std::vector<Vertex> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<Vertex>> result;
    do {
        bool ok = true;
        for (Vertex u = 0; u < g.vertex_count() && ok; ++u)
            for (Vertex v = 0; v < g.vertex_count() && ok; ++v)
                ok = g.has_edge(u, v) == g.has_edge(perm[u], perm[v]);
        if (ok)
            result.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

/// Odd closed walk check by DFS 2-colouring with an explicit stack.
inline auto is_bipartite(const Graph & g) -> bool
{
    std::vector<int> colour(g.vertex_count(), -1);
    for (Vertex start = 0; start < g.vertex_count(); ++start) {
        if (colour[start] != -1)
            continue;
        colour[start] = 0;
        std::vector<Vertex> stack{start};
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (Vertex w = 0; w < g.vertex_count(); ++w) {
                if (! g.adjacent(v, w))
                    continue;
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    stack.push_back(w);
                }
                else if (colour[w] == colour[v])
                    return false;
            }
        }
    }
    return true;
}

inline auto components(const Graph & g) -> std::size_t
{
    std::vector<bool> seen(g.vertex_count(), false);
    std::size_t count = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[s])
            continue;
        ++count;
        std::vector<Vertex> stack{s};
        seen[s] = true;
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (Vertex w = 0; w < g.vertex_count(); ++w)
                if (g.adjacent(v, w) && ! seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
    }
    return count;
}

inline auto is_tree(const Graph & g) -> bool
{
    return g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() && components(g) == 1;
}

inline auto triangles(const Graph & g) -> std::size_t
{
    std::size_t count = 0;
    const auto n = g.vertex_count();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                count += g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c);
    return count;
}

} // namespace oracle
