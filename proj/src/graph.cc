#include <logan/graph.hh>

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace logan {

Graph::Graph(std::size_t n, bool directed) :
    n_(n),
    directed_(directed),
    matrix_(n * n, 0),
    out_(n),
    in_(directed ? n : 0)
{
}

auto Graph::from_edges(std::size_t n, const std::vector<Edge> & edges, bool directed) -> Graph
{
    Graph g(n, directed);
    for (auto [u, v] : edges)
        if (! g.add_edge(u, v))
            throw GraphError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    return g;
}

auto Graph::check_pair(Vertex u, Vertex v) const -> void
{
    if (u >= n_ || v >= n_)
        throw GraphError("vertex out of range: " + std::to_string(u) + " " + std::to_string(v) + " with n=" + std::to_string(n_));
    if (u == v)
        throw GraphError("self-loop on vertex " + std::to_string(u));
}

auto Graph::key(Vertex u, Vertex v) const -> Edge
{
    if (! directed_ && v < u)
        std::swap(u, v);
    return {u, v};
}

auto Graph::has_edge(Vertex u, Vertex v) const -> bool
{
    if (u >= n_ || v >= n_)
        return false;
    return matrix_[u * n_ + v] != 0;
}

namespace {
    auto insert_sorted(std::vector<Vertex> & list, Vertex v) -> void
    {
        list.insert(std::lower_bound(list.begin(), list.end(), v), v);
    }

    auto erase_sorted(std::vector<Vertex> & list, Vertex v) -> void
    {
        list.erase(std::lower_bound(list.begin(), list.end(), v));
    }
}

auto Graph::add_edge(Vertex u, Vertex v) -> bool
{
    check_pair(u, v);
    if (has_edge(u, v))
        return false;
    matrix_[u * n_ + v] = 1;
    insert_sorted(out_[u], v);
    if (directed_)
        insert_sorted(in_[v], u);
    else {
        matrix_[v * n_ + u] = 1;
        insert_sorted(out_[v], u);
    }
    edges_.insert(key(u, v));
    return true;
}

auto Graph::remove_edge(Vertex u, Vertex v) -> bool
{
    check_pair(u, v);
    if (! has_edge(u, v))
        return false;
    matrix_[u * n_ + v] = 0;
    erase_sorted(out_[u], v);
    if (directed_)
        erase_sorted(in_[v], u);
    else {
        matrix_[v * n_ + u] = 0;
        erase_sorted(out_[v], u);
    }
    edges_.erase(key(u, v));
    return true;
}

auto Graph::toggle_edge(Vertex u, Vertex v) -> void
{
    if (! remove_edge(u, v))
        add_edge(u, v);
}

auto Graph::with_edges(const std::vector<Edge> & edges) const -> Graph
{
    return from_edges(n_, edges, directed_);
}

auto Graph::permuted(const std::vector<Vertex> & perm) const -> Graph
{
    if (perm.size() != n_)
        throw GraphError("permutation size mismatch");
    Graph result(n_, directed_);
    for (auto [u, v] : edges_)
        result.add_edge(perm[u], perm[v]);
    return result;
}

auto write_graph(std::ostream & out, const Graph & g) -> void
{
    out << g.vertex_count() << ' ' << g.edge_count() << ' ' << (g.directed() ? 1 : 0) << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

auto read_graph(std::istream & in) -> Graph
{
    long long n, m;
    int d;
    if (! (in >> n >> m >> d))
        throw GraphError("malformed graph header, expected \"n m d\"");
    if (n < 0 || m < 0 || (d != 0 && d != 1))
        throw GraphError("malformed graph header values");
    Graph g(static_cast<std::size_t>(n), d == 1);
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (! (in >> u >> v))
            throw GraphError("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        if (u < 0 || v < 0)
            throw GraphError("negative vertex id");
        if (! g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
            throw GraphError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    return g;
}

auto to_text(const Graph & g) -> std::string
{
    std::ostringstream out;
    write_graph(out, g);
    return std::move(out).str();
}

auto from_text(const std::string & text) -> Graph
{
    std::istringstream in(text);
    return read_graph(in);
}

auto cycle_graph(std::size_t n) -> Graph
{
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

auto path_graph(std::size_t n) -> Graph
{
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

auto complete_graph(std::size_t n) -> Graph
{
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

auto complete_bipartite(std::size_t a, std::size_t b) -> Graph
{
    Graph g(a + b);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
            g.add_edge(i, a + j);
    return g;
}

auto star_graph(std::size_t leaves) -> Graph
{
    Graph g(leaves + 1);
    for (std::size_t i = 1; i <= leaves; ++i)
        g.add_edge(0, i);
    return g;
}

auto empty_graph(std::size_t n) -> Graph
{
    return Graph(n);
}

auto directed_cycle(std::size_t n) -> Graph
{
    Graph g(n, true);
    for (std::size_t i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

auto bidirected_cycle(std::size_t n) -> Graph
{
    Graph g(n, true);
    for (std::size_t i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge((i + 1) % n, i);
    }
    return g;
}

} // namespace logan
