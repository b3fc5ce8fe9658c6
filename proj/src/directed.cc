#include <logan/certificates.hh>

#include <algorithm>
#include <queue>

namespace logan {

auto reachable_from(const Graph & d, Vertex s, std::optional<Edge> skip) -> std::vector<bool>
{
    std::vector<bool> seen(d.vertex_count(), false);
    std::queue<Vertex> queue;
    seen[s] = true;
    queue.push(s);
    while (! queue.empty()) {
        auto v = queue.front();
        queue.pop();
        for (auto w : d.out_neighbours(v)) {
            if (skip && d.key(v, w) == d.key(skip->u, skip->v))
                continue;
            if (! seen[w]) {
                seen[w] = true;
                queue.push(w);
            }
        }
    }
    return seen;
}

auto directed_proxies(const Graph & d) -> DirectedReport
{
    if (! d.directed())
        throw DirectednessMismatch("directed_proxies expects a directed graph");

    DirectedReport report;
    const auto n = d.vertex_count();
    if (n == 0)
        return report;
    report.min_in_degree = report.min_out_degree = n;
    for (Vertex v = 0; v < n; ++v) {
        report.min_in_degree = std::min(report.min_in_degree, d.in_degree(v));
        report.min_out_degree = std::min(report.min_out_degree, d.out_degree(v));
    }

    for (auto e : d.edges()) {
        // (u, v) lies on a directed cycle iff v reaches u
        if (! reachable_from(d, e.v)[e.u])
            report.edges_not_on_any_directed_cycle.push_back(e);
        // removing (u, v) cuts some reachable pair iff it cuts u from v
        if (! reachable_from(d, e.u, e)[e.v])
            report.directed_bridges.push_back(e);
    }
    return report;
}

auto two_edge_disjoint(const Graph & d, Vertex s, Vertex t) -> DisjointPaths
{
    if (! d.directed())
        throw DirectednessMismatch("two_edge_disjoint expects a directed graph");
    if (s == t)
        throw std::invalid_argument("two_edge_disjoint needs s != t");
    const auto n = d.vertex_count();
    if (s >= n || t >= n)
        throw GraphError("two_edge_disjoint: vertex out of range");

    // residual capacity; unit capacity on every arc
    std::vector<int> residual(n * n, 0);
    for (auto [u, v] : d.edges())
        residual[u * n + v] = 1;

    auto augment = [&]() -> bool {
        std::vector<int> parent(n, -1);
        parent[s] = static_cast<int>(s);
        std::queue<Vertex> queue;
        queue.push(s);
        while (! queue.empty() && parent[t] == -1) {
            auto v = queue.front();
            queue.pop();
            for (Vertex w = 0; w < n; ++w)
                if (residual[v * n + w] > 0 && parent[w] == -1) {
                    parent[w] = static_cast<int>(v);
                    queue.push(w);
                }
        }
        if (parent[t] == -1)
            return false;
        for (Vertex v = t; v != s; v = static_cast<Vertex>(parent[v])) {
            auto u = static_cast<Vertex>(parent[v]);
            residual[u * n + v] -= 1;
            residual[v * n + u] += 1;
        }
        return true;
    };

    DisjointPaths result;
    while (result.flow < 2 && augment())
        ++result.flow;
    result.ok = result.flow >= 2;

    if (result.flow == 1) {
        // the min cut on the residual-reachable side holds exactly one arc
        std::vector<bool> side(n, false);
        side[s] = true;
        std::queue<Vertex> queue;
        queue.push(s);
        while (! queue.empty()) {
            auto v = queue.front();
            queue.pop();
            for (Vertex w = 0; w < n; ++w)
                if (residual[v * n + w] > 0 && ! side[w]) {
                    side[w] = true;
                    queue.push(w);
                }
        }
        for (auto [u, v] : d.edges())
            if (side[u] && ! side[v]) {
                result.cut_edge = Edge{u, v};
                break;
            }
    }
    return result;
}

} // namespace logan
