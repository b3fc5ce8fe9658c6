#include <logan/certificates.hh>
#include <logan/planarity.hh>

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace logan {

auto witness_kind_name(WitnessKind kind) -> std::string_view
{
    switch (kind) {
    case WitnessKind::odd_cycle: return "odd_cycle";
    case WitnessKind::kuratowski_subgraph: return "kuratowski_subgraph";
    case WitnessKind::extra_cycle_edge: return "extra_cycle_edge";
    case WitnessKind::disconnecting_split: return "disconnecting_split";
    case WitnessKind::triangle: return "triangle";
    case WitnessKind::unit_cut: return "unit_cut";
    case WitnessKind::directed_bridge: return "directed_bridge";
    case WitnessKind::degree_deficit: return "degree_deficit";
    }
    return "unknown";
}

auto deficit_witness(const Graph & d, Vertex v, Direction direction) -> Witness
{
    Witness w{WitnessKind::degree_deficit, {v}, {}, std::nullopt, direction, false};
    if (direction == Direction::out)
        for (auto x : d.out_neighbours(v))
            w.edges.push_back(Edge{v, x});
    else
        for (auto x : d.in_neighbours(v))
            w.edges.push_back(Edge{x, v});
    std::sort(w.edges.begin(), w.edges.end());
    return w;
}

auto Witness::to_string() const -> std::string
{
    std::ostringstream out;
    out << witness_kind_name(kind);
    if (endpoints)
        out << " s=" << endpoints->u << " t=" << endpoints->v;
    if (direction != Direction::none)
        out << (direction == Direction::in ? " in" : " out");
    if (! vertices.empty()) {
        out << " vertices=";
        for (std::size_t i = 0; i < vertices.size(); ++i)
            out << (i ? "," : "") << vertices[i];
    }
    if (! edges.empty()) {
        out << " edges=";
        for (std::size_t i = 0; i < edges.size(); ++i)
            out << (i ? "," : "") << edges[i].u << '-' << edges[i].v;
    }
    if (partial)
        out << " (partial)";
    return std::move(out).str();
}

namespace {
    class UnionFind {
    public:
        explicit UnionFind(std::size_t n) : parent_(n)
        {
            std::iota(parent_.begin(), parent_.end(), Vertex{0});
        }

        auto find(Vertex v) -> Vertex
        {
            while (parent_[v] != v) {
                parent_[v] = parent_[parent_[v]];
                v = parent_[v];
            }
            return v;
        }

        /// False if already joined.
        auto unite(Vertex a, Vertex b) -> bool
        {
            a = find(a);
            b = find(b);
            if (a == b)
                return false;
            // smaller root wins so labels are the minimum vertex
            if (b < a)
                std::swap(a, b);
            parent_[b] = a;
            return true;
        }

    private:
        std::vector<Vertex> parent_;
    };

    auto require_directedness(Theory theory, const Graph & g) -> void
    {
        if (theory_is_directed(theory) != g.directed())
            throw DirectednessMismatch(std::string(theory_name(theory)) + (g.directed() ? " expects an undirected graph" : " expects a directed graph"));
    }

    /// Vertices on the path from a to b inside the forest given by `adj`.
    auto forest_path(const std::vector<std::vector<Vertex>> & adj, Vertex a, Vertex b) -> std::vector<Vertex>
    {
        std::vector<int> parent(adj.size(), -1);
        std::queue<Vertex> queue;
        queue.push(a);
        parent[a] = static_cast<int>(a);
        while (! queue.empty()) {
            auto v = queue.front();
            queue.pop();
            if (v == b)
                break;
            for (auto w : adj[v])
                if (parent[w] == -1) {
                    parent[w] = static_cast<int>(v);
                    queue.push(w);
                }
        }
        std::vector<Vertex> path{b};
        while (path.back() != a)
            path.push_back(static_cast<Vertex>(parent[path.back()]));
        std::reverse(path.begin(), path.end());
        return path;
    }

    auto cycle_edges(const std::vector<Vertex> & cycle) -> std::vector<Edge>
    {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            auto a = cycle[i], b = cycle[(i + 1) % cycle.size()];
            edges.push_back({std::min(a, b), std::max(a, b)});
        }
        return edges;
    }

    auto split_witness(const Graph & g, const std::vector<Vertex> & labels) -> Witness
    {
        Witness w{WitnessKind::disconnecting_split, {}, {}, std::nullopt, Direction::none, false};
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (labels[v] == labels[0])
                w.vertices.push_back(v);
        return w;
    }

    auto check_bipartite(const Graph & g) -> CheckResult
    {
        const auto n = g.vertex_count();
        std::vector<int> colour(n, -1), depth(n, 0);
        std::vector<Vertex> parent(n);
        for (Vertex s = 0; s < n; ++s) {
            if (colour[s] != -1)
                continue;
            colour[s] = 0;
            parent[s] = s;
            std::queue<Vertex> queue;
            queue.push(s);
            while (! queue.empty()) {
                auto v = queue.front();
                queue.pop();
                for (auto w : g.neighbours(v)) {
                    if (colour[w] == -1) {
                        colour[w] = 1 - colour[v];
                        depth[w] = depth[v] + 1;
                        parent[w] = v;
                        queue.push(w);
                    }
                    else if (colour[w] == colour[v]) {
                        // climb both BFS branches to their meeting point
                        std::vector<Vertex> left{v}, right{w};
                        while (left.back() != right.back()) {
                            if (depth[left.back()] >= depth[right.back()])
                                left.push_back(parent[left.back()]);
                            else
                                right.push_back(parent[right.back()]);
                        }
                        right.pop_back();
                        std::vector<Vertex> cycle(left.begin(), left.end());
                        cycle.insert(cycle.end(), right.rbegin(), right.rend());
                        Witness wit{WitnessKind::odd_cycle, cycle, cycle_edges(cycle), std::nullopt, Direction::none, false};
                        return {false, std::move(wit)};
                    }
                }
            }
        }
        return {true, std::nullopt};
    }

    auto find_triangle(const Graph & g) -> std::optional<std::array<Vertex, 3>>
    {
        for (auto [u, v] : g.edges())
            for (auto w : g.neighbours(u))
                if (w > v && g.has_edge(v, w))
                    return std::array<Vertex, 3>{u, v, w};
        return std::nullopt;
    }

    auto check_tree(const Graph & g) -> CheckResult
    {
        const auto n = g.vertex_count();
        UnionFind uf(n);
        std::vector<std::vector<Vertex>> forest(n);
        for (auto [u, v] : g.edges()) {
            if (! uf.unite(u, v)) {
                auto cycle = forest_path(forest, u, v);
                Witness w{WitnessKind::extra_cycle_edge, cycle, {{u, v}}, std::nullopt, Direction::none, false};
                return {false, std::move(w)};
            }
            forest[u].push_back(v);
            forest[v].push_back(u);
        }
        auto labels = component_labels(g);
        if (n > 0 && std::any_of(labels.begin(), labels.end(), [](Vertex l) { return l != 0; }))
            return {false, split_witness(g, labels)};
        return {true, std::nullopt};
    }

    auto check_connected(const Graph & g) -> CheckResult
    {
        auto labels = component_labels(g);
        if (g.vertex_count() > 0 && std::any_of(labels.begin(), labels.end(), [](Vertex l) { return l != 0; }))
            return {false, split_witness(g, labels)};
        return {true, std::nullopt};
    }

    auto check_planar(const Graph & g) -> CheckResult
    {
        if (is_planar(g))
            return {true, std::nullopt};
        Witness w{WitnessKind::kuratowski_subgraph, {}, {}, std::nullopt, Direction::none, false};
        // edge deletion costs one planarity test per edge; skip it on big inputs
        constexpr std::size_t extraction_limit = 2000;
        if (g.edge_count() <= extraction_limit)
            w.edges = kuratowski_subgraph(g);
        w.partial = w.edges.empty();
        std::set<Vertex> corners;
        for (auto [u, v] : w.edges) {
            corners.insert(u);
            corners.insert(v);
        }
        w.vertices.assign(corners.begin(), corners.end());
        return {false, std::move(w)};
    }

    auto triangle_witness(const std::array<Vertex, 3> & t) -> Witness
    {
        return {WitnessKind::triangle, {t[0], t[1], t[2]}, {{t[0], t[1]}, {t[1], t[2]}, {t[0], t[2]}}, std::nullopt, Direction::none, false};
    }

    auto check_two_edge_strong(const Graph & d) -> CheckResult
    {
        const auto n = d.vertex_count();
        if (n <= 1)
            return {true, std::nullopt};

        for (Vertex v = 0; v < n; ++v) {
            if (d.out_degree(v) < 2)
                return {false, deficit_witness(d, v, Direction::out)};
            if (d.in_degree(v) < 2)
                return {false, deficit_witness(d, v, Direction::in)};
        }

        auto report = directed_proxies(d);
        if (! report.directed_bridges.empty()) {
            auto e = report.directed_bridges.front();
            return {false, Witness{WitnessKind::directed_bridge, {}, {e}, Edge{e.u, e.v}, Direction::none, false}};
        }

        for (Vertex s = 0; s < n; ++s)
            for (Vertex t = 0; t < n; ++t) {
                if (s == t)
                    continue;
                auto paths = two_edge_disjoint(d, s, t);
                if (paths.ok)
                    continue;
                if (paths.cut_edge)
                    return {false, Witness{WitnessKind::unit_cut, {}, {*paths.cut_edge}, Edge{s, t}, Direction::none, false}};
                auto reach = reachable_from(d, s);
                Witness w{WitnessKind::disconnecting_split, {}, {}, Edge{s, t}, Direction::none, false};
                for (Vertex v = 0; v < n; ++v)
                    if (reach[v])
                        w.vertices.push_back(v);
                return {false, std::move(w)};
            }
        return {true, std::nullopt};
    }

    auto failing_pair_fraction(const Graph & d) -> double
    {
        const auto n = d.vertex_count();
        if (n <= 1)
            return 0.0;
        std::size_t failing = 0;
        for (Vertex s = 0; s < n; ++s)
            for (Vertex t = 0; t < n; ++t)
                if (s != t && ! two_edge_disjoint(d, s, t).ok)
                    ++failing;
        return static_cast<double>(failing) / static_cast<double>(n * (n - 1));
    }
}

auto component_labels(const Graph & g) -> std::vector<Vertex>
{
    UnionFind uf(g.vertex_count());
    for (auto [u, v] : g.edges())
        uf.unite(u, v);
    std::vector<Vertex> labels(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        labels[v] = uf.find(v);
    return labels;
}

auto component_count(const Graph & g) -> std::size_t
{
    auto labels = component_labels(g);
    std::size_t count = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (labels[v] == v)
            ++count;
    return count;
}

auto greedy_two_colouring_violations(const Graph & g) -> std::size_t
{
    const auto n = g.vertex_count();
    std::vector<int> colour(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (colour[s] != -1)
            continue;
        colour[s] = 0;
        std::queue<Vertex> queue;
        queue.push(s);
        while (! queue.empty()) {
            auto v = queue.front();
            queue.pop();
            for (auto w : g.neighbours(v))
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    queue.push(w);
                }
        }
    }

    auto gain = [&](Vertex v) {
        long same = 0, other = 0;
        for (auto w : g.neighbours(v))
            (colour[w] == colour[v] ? same : other) += 1;
        return same - other;
    };
    // flip any vertex with more same-coloured than other-coloured neighbours
    for (bool improved = true; improved;) {
        improved = false;
        for (Vertex v = 0; v < n; ++v)
            if (gain(v) > 0) {
                colour[v] = 1 - colour[v];
                improved = true;
            }
    }

    std::size_t violations = 0;
    for (auto [u, v] : g.edges())
        if (colour[u] == colour[v])
            ++violations;
    return violations;
}

auto triangle_count(const Graph & g) -> std::size_t
{
    std::size_t count = 0;
    for (auto [u, v] : g.edges())
        for (auto w : g.neighbours(u))
            if (w > v && g.has_edge(v, w))
                ++count;
    return count;
}

auto check(Theory theory, const Graph & g) -> CheckResult
{
    require_directedness(theory, g);
    switch (theory) {
    case Theory::bipartite: return check_bipartite(g);
    case Theory::tree: return check_tree(g);
    case Theory::connected: return check_connected(g);
    case Theory::planar: return check_planar(g);
    case Theory::has_triangle: {
        auto t = find_triangle(g);
        if (t)
            return {true, triangle_witness(*t)};
        return {false, std::nullopt};
    }
    case Theory::triangle_free: {
        auto t = find_triangle(g);
        if (t)
            return {false, triangle_witness(*t)};
        return {true, std::nullopt};
    }
    case Theory::two_edge_strong: return check_two_edge_strong(g);
    }
    throw std::logic_error("unhandled theory");
}

auto certificate_loss(Theory theory, const Graph & g) -> double
{
    require_directedness(theory, g);
    const auto n = static_cast<double>(g.vertex_count());
    const auto m = static_cast<double>(g.edge_count());
    switch (theory) {
    case Theory::bipartite:
        if (g.edge_count() == 0)
            return 0.0;
        return static_cast<double>(greedy_two_colouring_violations(g)) / m;

    case Theory::tree: {
        if (g.vertex_count() == 0)
            return 0.0;
        auto excess = static_cast<double>(component_count(g) - 1) + std::max(0.0, m - (n - 1));
        return std::min(1.0, excess / n);
    }

    case Theory::connected:
        if (g.vertex_count() <= 1)
            return 0.0;
        return static_cast<double>(component_count(g) - 1) / (n - 1);

    case Theory::planar: {
        double loss = 0.0;
        if (g.vertex_count() >= 3)
            loss = std::min(1.0, std::max(0.0, m - (3 * n - 6)) / n);
        if (loss == 0.0 && ! is_planar(g))
            loss = 0.5;
        return loss;
    }

    case Theory::has_triangle:
        return find_triangle(g) ? 0.0 : 1.0;

    case Theory::triangle_free: {
        if (g.vertex_count() < 3)
            return 0.0;
        const double triples = n * (n - 1) * (n - 2) / 6.0;
        return std::min(1.0, static_cast<double>(triangle_count(g)) / triples);
    }

    case Theory::two_edge_strong:
        return failing_pair_fraction(g);
    }
    throw std::logic_error("unhandled theory");
}

auto verify_witness(const Graph & g, const Witness & w) -> bool
{
    const auto n = g.vertex_count();
    auto in_range = [&](Vertex v) { return v < n; };
    auto distinct = [](std::vector<Vertex> vs) {
        std::sort(vs.begin(), vs.end());
        return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
    };

    switch (w.kind) {
    case WitnessKind::odd_cycle: {
        const auto & c = w.vertices;
        if (c.size() < 3 || c.size() % 2 == 0 || ! distinct(c) || ! std::all_of(c.begin(), c.end(), in_range))
            return false;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (! g.adjacent(c[i], c[(i + 1) % c.size()]))
                return false;
        return true;
    }

    case WitnessKind::kuratowski_subgraph: {
        if (w.partial)
            return false;
        for (auto [u, v] : w.edges)
            if (! g.adjacent(u, v))
                return false;
        return is_kuratowski_subdivision(n, w.edges);
    }

    case WitnessKind::extra_cycle_edge: {
        if (w.edges.size() != 1)
            return false;
        auto e = w.edges.front();
        if (! g.has_edge(e.u, e.v))
            return false;
        return reachable_from(g, e.u, e)[e.v];
    }

    case WitnessKind::disconnecting_split: {
        std::vector<bool> inside(n, false);
        for (auto v : w.vertices) {
            if (! in_range(v))
                return false;
            inside[v] = true;
        }
        if (w.vertices.empty() || w.vertices.size() >= n || ! distinct(w.vertices))
            return false;
        for (auto [u, v] : g.edges()) {
            if (g.directed() ? (inside[u] && ! inside[v]) : (inside[u] != inside[v]))
                return false;
        }
        return true;
    }

    case WitnessKind::triangle: {
        const auto & t = w.vertices;
        return t.size() == 3 && distinct(t) && std::all_of(t.begin(), t.end(), in_range)
                && g.adjacent(t[0], t[1]) && g.adjacent(t[1], t[2]) && g.adjacent(t[0], t[2]);
    }

    case WitnessKind::unit_cut: {
        if (w.edges.size() != 1 || ! w.endpoints)
            return false;
        auto [s, t] = *w.endpoints;
        auto e = w.edges.front();
        if (! in_range(s) || ! in_range(t) || s == t || ! g.has_edge(e.u, e.v))
            return false;
        return reachable_from(g, s)[t] && ! reachable_from(g, s, e)[t];
    }

    case WitnessKind::directed_bridge: {
        if (w.edges.size() != 1)
            return false;
        auto e = w.edges.front();
        if (! g.has_edge(e.u, e.v))
            return false;
        for (Vertex a = 0; a < n; ++a) {
            auto before = reachable_from(g, a);
            auto after = reachable_from(g, a, e);
            if (before != after)
                return true;
        }
        return false;
    }

    case WitnessKind::degree_deficit: {
        if (w.vertices.size() != 1 || ! in_range(w.vertices.front()))
            return false;
        auto v = w.vertices.front();
        if (w.direction == Direction::none)
            return false;
        return w.edges.size() < 2 && w.edges == deficit_witness(g, v, w.direction).edges;
    }
    }
    return false;
}

} // namespace logan
