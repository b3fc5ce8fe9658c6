#include <logan/samplers.hh>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>

namespace logan {

namespace {
    auto unsupported(std::string_view what, Theory theory, std::size_t n) -> UnsupportedSample
    {
        return UnsupportedSample(std::string(what) + ": unsupported (" + std::string(theory_name(theory)) + ", n=" + std::to_string(n) + ")");
    }

    auto random_permutation(std::size_t n, Rng & rng) -> std::vector<Vertex>
    {
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        rng.shuffle(perm);
        return perm;
    }

    auto component_labels(const Graph & g) -> std::vector<std::size_t>
    {
        std::vector<std::size_t> label(g.vertex_count(), g.vertex_count());
        std::size_t next = 0;
        for (Vertex s = 0; s < g.vertex_count(); ++s) {
            if (label[s] != g.vertex_count())
                continue;
            std::queue<Vertex> queue;
            queue.push(s);
            label[s] = next;
            while (! queue.empty()) {
                auto v = queue.front();
                queue.pop();
                for (auto w : g.neighbours(v))
                    if (label[w] == g.vertex_count()) {
                        label[w] = next;
                        queue.push(w);
                    }
            }
            ++next;
        }
        return label;
    }

    /// Bipartite graph plus the side of each vertex.
    struct Bipartition {
        Graph graph;
        std::vector<int> side;
    };

    auto random_bipartite(std::size_t n, double p, Rng & rng) -> Bipartition
    {
        auto perm = random_permutation(n, rng);
        std::vector<int> side(n, 1);
        for (std::size_t i = 0; i < n / 2; ++i)
            side[perm[i]] = 0;
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (side[u] != side[v] && rng.bernoulli(p))
                    g.add_edge(u, v);
        return {std::move(g), std::move(side)};
    }

    /// Spanning tree on `vertices` plus extra edges with probability p, added to g.
    auto add_connected_block(Graph & g, const std::vector<Vertex> & vertices, double p, Seed seed) -> void
    {
        auto tree = random_tree(vertices.size(), derive_seed(seed, 1));
        for (auto [u, v] : tree.edges())
            g.add_edge(vertices[u], vertices[v]);
        Rng rng(derive_seed(seed, 2));
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                if (rng.bernoulli(p))
                    g.add_edge(vertices[i], vertices[j]);
    }

    auto non_edges(const Graph & g) -> std::vector<Edge>
    {
        std::vector<Edge> result;
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            for (Vertex v = g.directed() ? 0 : u + 1; v < g.vertex_count(); ++v)
                if (u != v && ! g.has_edge(u, v))
                    result.push_back({u, v});
        return result;
    }

    auto plant_triangle(Graph & g, Rng & rng) -> void
    {
        auto perm = random_permutation(g.vertex_count(), rng);
        g.add_edge(perm[0], perm[1]);
        g.add_edge(perm[1], perm[2]);
        g.add_edge(perm[0], perm[2]);
    }

    /// Stacked triangulation (always planar), then each edge kept with probability keep.
    auto random_planar(std::size_t n, double keep, Seed seed) -> Graph
    {
        Rng rng(seed);
        Graph full(n);
        if (n <= 3) {
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    full.add_edge(u, v);
        }
        else {
            std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}};
            full.add_edge(0, 1);
            full.add_edge(1, 2);
            full.add_edge(0, 2);
            // both sides of the initial triangle are faces
            faces.push_back({0, 1, 2});
            for (Vertex v = 3; v < n; ++v) {
                auto index = rng.below(faces.size());
                auto [a, b, c] = faces[index];
                full.add_edge(v, a);
                full.add_edge(v, b);
                full.add_edge(v, c);
                faces[index] = {a, b, v};
                faces.push_back({b, c, v});
                faces.push_back({a, c, v});
            }
        }
        std::vector<Edge> kept;
        for (auto e : full.edges())
            if (rng.bernoulli(keep))
                kept.push_back(e);
        auto perm = random_permutation(n, rng);
        return full.with_edges(kept).permuted(perm);
    }

    auto require(bool ok, std::string_view what, Theory theory, std::size_t n) -> void
    {
        if (! ok)
            throw unsupported(what, theory, n);
    }
}

auto random_graph(std::size_t n, double p, Seed seed) -> Graph
{
    if (n < 1 || ! (p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("random_graph: need n >= 1 and p in [0, 1]");
    Rng rng(seed);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.bernoulli(p))
                g.add_edge(u, v);
    return g;
}

auto random_digraph(std::size_t n, double p, Seed seed) -> Graph
{
    if (n < 1 || ! (p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("random_digraph: need n >= 1 and p in [0, 1]");
    Rng rng(seed);
    Graph g(n, true);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && rng.bernoulli(p))
                g.add_edge(u, v);
    return g;
}

auto random_tree(std::size_t n, Seed seed) -> Graph
{
    Graph g(n);
    if (n <= 1)
        return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }

    Rng rng(seed);
    std::vector<Vertex> code(n - 2);
    for (auto & c : code)
        c = static_cast<Vertex>(rng.below(n));

    std::vector<std::size_t> degree(n, 1);
    for (auto c : code)
        ++degree[c];

    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves.push(v);

    for (auto c : code) {
        auto leaf = leaves.top();
        leaves.pop();
        g.add_edge(leaf, c);
        if (--degree[c] == 1)
            leaves.push(c);
    }
    auto a = leaves.top();
    leaves.pop();
    g.add_edge(a, leaves.top());
    return g;
}

auto sample_theory(Theory theory, std::size_t n, Seed seed) -> Graph
{
    Rng rng(seed);
    switch (theory) {
    case Theory::tree:
        require(n >= 1, "sample_theory", theory, n);
        return random_tree(n, seed);

    case Theory::bipartite:
        require(n >= 2, "sample_theory", theory, n);
        return random_bipartite(n, 0.4, rng).graph;

    case Theory::connected: {
        require(n >= 1, "sample_theory", theory, n);
        std::vector<Vertex> all(n);
        std::iota(all.begin(), all.end(), Vertex{0});
        Graph g(n);
        add_connected_block(g, all, 0.15, seed);
        return g;
    }

    case Theory::planar:
        require(n >= 1, "sample_theory", theory, n);
        return random_planar(n, 0.7, seed);

    case Theory::has_triangle: {
        require(n >= 3, "sample_theory", theory, n);
        auto g = random_graph(n, 0.25, derive_seed(seed, 1));
        plant_triangle(g, rng);
        return g;
    }

    case Theory::triangle_free:
        require(n >= 2, "sample_theory", theory, n);
        return random_bipartite(n, 0.4, rng).graph;

    case Theory::two_edge_strong: {
        require(n >= 3, "sample_theory", theory, n);
        auto perm = random_permutation(n, rng);
        Graph g(n, true);
        for (std::size_t i = 0; i < n; ++i) {
            g.add_edge(perm[i], perm[(i + 1) % n]);
            g.add_edge(perm[(i + 1) % n], perm[i]);
        }
        // extra arcs never destroy two edge-disjoint routes
        for (auto [u, v] : non_edges(g))
            if (rng.bernoulli(0.1))
                g.add_edge(u, v);
        return g;
    }
    }
    throw unsupported("sample_theory", theory, n);
}

auto sample_negative(Theory theory, std::size_t n, Seed seed) -> Graph
{
    Rng rng(seed);
    switch (theory) {
    case Theory::tree: {
        require(n >= 3, "sample_negative", theory, n);
        auto g = random_tree(n, derive_seed(seed, 1));
        auto [u, v] = rng.pick(non_edges(g));
        g.add_edge(u, v);
        return g;
    }

    case Theory::bipartite: {
        require(n >= 3, "sample_negative", theory, n);
        auto [g, side] = random_bipartite(n, 0.4, rng);
        auto label = component_labels(g);
        // an intra-part edge inside one component closes an odd cycle
        std::vector<Edge> closing, same_side;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (side[u] == side[v]) {
                    same_side.push_back({u, v});
                    if (label[u] == label[v])
                        closing.push_back({u, v});
                }
        if (! closing.empty()) {
            auto [u, v] = rng.pick(closing);
            g.add_edge(u, v);
            return g;
        }
        // no same-side pair shares a component: route both through a vertex of the other side
        auto [a, b] = rng.pick(same_side);
        std::vector<Vertex> other;
        for (Vertex v = 0; v < n; ++v)
            if (side[v] != side[a])
                other.push_back(v);
        auto c = rng.pick(other);
        g.add_edge(a, c);
        g.add_edge(c, b);
        g.add_edge(a, b);
        return g;
    }

    case Theory::planar: {
        require(n >= 5, "sample_negative", theory, n);
        // odd n: K5, even n: K3,3; both embedded on a random vertex subset
        auto core = (n % 2 == 1) ? complete_graph(5) : complete_bipartite(3, 3);
        auto perm = random_permutation(n, rng);
        Graph g(n);
        for (auto [u, v] : core.edges())
            g.add_edge(perm[u], perm[v]);
        return g;
    }

    case Theory::connected: {
        require(n >= 2, "sample_negative", theory, n);
        auto perm = random_permutation(n, rng);
        auto split = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(n) - 1));
        std::vector<Vertex> left(perm.begin(), perm.begin() + split), right(perm.begin() + split, perm.end());
        Graph g(n);
        add_connected_block(g, left, 0.15, derive_seed(seed, 10));
        add_connected_block(g, right, 0.15, derive_seed(seed, 20));
        return g;
    }

    case Theory::has_triangle:
        require(n >= 3, "sample_negative", theory, n);
        return random_bipartite(n, 0.4, rng).graph;

    case Theory::triangle_free: {
        require(n >= 3, "sample_negative", theory, n);
        auto g = random_bipartite(n, 0.4, rng).graph;
        plant_triangle(g, rng);
        return g;
    }

    case Theory::two_edge_strong: {
        require(n >= 3, "sample_negative", theory, n);
        auto perm = random_permutation(n, rng);
        Graph g(n, true);
        for (std::size_t i = 0; i < n; ++i)
            g.add_edge(perm[i], perm[(i + 1) % n]);
        return g;
    }
    }
    throw unsupported("sample_negative", theory, n);
}

auto perturbation_pairs(const Graph & g, double fraction, Seed seed) -> std::vector<Edge>
{
    if (! (fraction >= 0.0 && fraction <= 1.0))
        throw std::invalid_argument("perturb: fraction must lie in [0, 1]");

    std::vector<Edge> pairs;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = g.directed() ? 0 : u + 1; v < g.vertex_count(); ++v)
            if (u != v)
                pairs.push_back({u, v});

    auto flips = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(g.edge_count())));
    flips = std::min(flips, pairs.size());

    // partial Fisher-Yates: the first `flips` entries are a uniform sample
    Rng rng(seed);
    for (std::size_t i = 0; i < flips; ++i)
        std::swap(pairs[i], pairs[i + rng.below(pairs.size() - i)]);
    pairs.resize(flips);
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

auto apply_flips(const Graph & g, const std::vector<Edge> & pairs) -> Graph
{
    Graph result = g;
    for (auto [u, v] : pairs)
        result.toggle_edge(u, v);
    return result;
}

auto perturb(const Graph & g, double fraction, Seed seed) -> Graph
{
    return apply_flips(g, perturbation_pairs(g, fraction, seed));
}

} // namespace logan
