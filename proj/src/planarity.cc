#include <logan/planarity.hh>

#include <algorithm>
#include <map>
#include <set>

namespace logan {

namespace {
    constexpr int none = -1;

    struct Interval {
        int low = none, high = none;

        auto empty() const -> bool { return low == none && high == none; }
    };

    struct ConflictPair {
        Interval left, right;
        int id = none;

        auto swap() -> void { std::swap(left, right); }
    };

    class LeftRight {
    public:
        explicit LeftRight(const Graph & g) :
            n_(g.vertex_count()),
            adj_(n_),
            height_(n_, none),
            parent_edge_(n_, none),
            edge_id_(n_ * n_, none),
            ordered_(n_)
        {
            for (auto [u, v] : g.edges()) {
                adj_[u].push_back(v);
                adj_[v].push_back(u);
            }
            for (auto & list : adj_) {
                std::sort(list.begin(), list.end());
                list.erase(std::unique(list.begin(), list.end()), list.end());
            }
            for (auto & list : adj_)
                edge_total_ += list.size();
            edge_total_ /= 2;
        }

        auto planar() -> bool
        {
            if (n_ > 2 && edge_total_ > 3 * n_ - 6)
                return false;

            std::vector<Vertex> roots;
            for (Vertex v = 0; v < n_; ++v)
                if (height_[v] == none) {
                    height_[v] = 0;
                    roots.push_back(v);
                    orient(v);
                }

            for (Vertex v = 0; v < n_; ++v)
                std::stable_sort(ordered_[v].begin(), ordered_[v].end(),
                        [&](Vertex a, Vertex b) { return nesting_[id(v, a)] < nesting_[id(v, b)]; });

            ref_.assign(tail_.size(), none);
            lowpt_edge_.assign(tail_.size(), none);
            stack_bottom_.assign(tail_.size(), none);

            for (auto root : roots)
                if (! test(root))
                    return false;
            return true;
        }

    private:
        auto id(Vertex v, Vertex w) const -> int { return edge_id_[v * n_ + w]; }

        auto orient(Vertex v) -> void
        {
            const int e = parent_edge_[v];
            for (auto w : adj_[v]) {
                if (id(v, w) != none || id(w, v) != none)
                    continue;
                const int vw = static_cast<int>(tail_.size());
                edge_id_[v * n_ + w] = vw;
                tail_.push_back(v);
                head_.push_back(w);
                ordered_[v].push_back(w);
                lowpt_.push_back(height_[v]);
                lowpt2_.push_back(height_[v]);
                nesting_.push_back(0);

                if (height_[w] == none) {
                    parent_edge_[w] = vw;
                    height_[w] = height_[v] + 1;
                    orient(w);
                }
                else
                    lowpt_[vw] = height_[w];

                nesting_[vw] = 2 * lowpt_[vw];
                if (lowpt2_[vw] < height_[v])
                    nesting_[vw] += 1; // chordal

                if (e != none) {
                    if (lowpt_[vw] < lowpt_[e]) {
                        lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
                        lowpt_[e] = lowpt_[vw];
                    }
                    else if (lowpt_[vw] > lowpt_[e])
                        lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
                    else
                        lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
                }
            }
        }

        auto top_id() const -> int { return stack_.empty() ? none : stack_.back().id; }

        auto conflicting(const Interval & i, int b) const -> bool
        {
            return ! i.empty() && lowpt_[i.high] > lowpt_[b];
        }

        auto lowest(const ConflictPair & p) const -> int
        {
            if (p.left.empty())
                return lowpt_[p.right.low];
            if (p.right.empty())
                return lowpt_[p.left.low];
            return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
        }

        auto set_ref(int edge, int target) -> void
        {
            if (edge != none)
                ref_[edge] = target;
        }

        auto test(Vertex v) -> bool
        {
            const int e = parent_edge_[v];
            for (auto w : ordered_[v]) {
                const int ei = id(v, w);
                stack_bottom_[ei] = top_id();
                if (ei == parent_edge_[w]) {
                    if (! test(w))
                        return false;
                }
                else {
                    lowpt_edge_[ei] = ei;
                    stack_.push_back({{}, {ei, ei}, next_id_++});
                }

                if (lowpt_[ei] < height_[v]) {
                    if (w == ordered_[v].front())
                        lowpt_edge_[e] = lowpt_edge_[ei];
                    else if (! add_constraints(ei, e))
                        return false;
                }
            }
            if (e != none)
                remove_back_edges(e);
            return true;
        }

        auto add_constraints(int ei, int e) -> bool
        {
            ConflictPair p{{}, {}, next_id_++};
            // merge return edges of ei into p.right
            do {
                auto q = stack_.back();
                stack_.pop_back();
                if (! q.left.empty())
                    q.swap();
                if (! q.left.empty())
                    return false;
                if (lowpt_[q.right.low] > lowpt_[e]) {
                    if (p.right.empty())
                        p.right = q.right;
                    else
                        set_ref(p.right.low, q.right.high);
                    p.right.low = q.right.low;
                }
                else
                    set_ref(q.right.low, lowpt_edge_[e]);
            } while (top_id() != stack_bottom_[ei]);

            // merge conflicting return edges of earlier siblings into p.left
            while (! stack_.empty() && (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
                auto q = stack_.back();
                stack_.pop_back();
                if (conflicting(q.right, ei))
                    q.swap();
                if (conflicting(q.right, ei))
                    return false;
                set_ref(p.right.low, q.right.high);
                if (q.right.low != none)
                    p.right.low = q.right.low;
                if (p.left.empty())
                    p.left = q.left;
                else
                    set_ref(p.left.low, q.left.high);
                p.left.low = q.left.low;
            }

            if (! (p.left.empty() && p.right.empty()))
                stack_.push_back(p);
            return true;
        }

        auto remove_back_edges(int e) -> void
        {
            const Vertex u = tail_[e];
            while (! stack_.empty() && lowest(stack_.back()) == height_[u])
                stack_.pop_back();

            if (! stack_.empty()) {
                auto p = stack_.back();
                stack_.pop_back();
                while (p.left.high != none && static_cast<Vertex>(head_[p.left.high]) == u)
                    p.left.high = ref_[p.left.high];
                if (p.left.high == none && p.left.low != none) {
                    ref_[p.left.low] = p.right.low;
                    p.left.low = none;
                }
                while (p.right.high != none && static_cast<Vertex>(head_[p.right.high]) == u)
                    p.right.high = ref_[p.right.high];
                if (p.right.high == none && p.right.low != none) {
                    ref_[p.right.low] = p.left.low;
                    p.right.low = none;
                }
                stack_.push_back(p);
            }

            if (lowpt_[e] < height_[u] && ! stack_.empty()) {
                auto hl = stack_.back().left.high, hr = stack_.back().right.high;
                if (hl != none && (hr == none || lowpt_[hl] > lowpt_[hr]))
                    ref_[e] = hl;
                else
                    ref_[e] = hr;
            }
        }

        std::size_t n_;
        std::size_t edge_total_ = 0;
        std::vector<std::vector<Vertex>> adj_;
        std::vector<int> height_, parent_edge_, edge_id_;
        std::vector<std::vector<Vertex>> ordered_;
        std::vector<Vertex> tail_, head_;
        std::vector<int> lowpt_, lowpt2_, nesting_;
        std::vector<int> ref_, lowpt_edge_, stack_bottom_;
        std::vector<ConflictPair> stack_;
        int next_id_ = 0;
    };

    auto underlying(const Graph & g) -> Graph
    {
        if (! g.directed())
            return g;
        Graph u(g.vertex_count());
        for (auto [a, b] : g.edges())
            u.add_edge(a, b);
        return u;
    }
}

auto is_planar(const Graph & g) -> bool
{
    return LeftRight(underlying(g)).planar();
}

auto kuratowski_subgraph(const Graph & g) -> std::vector<Edge>
{
    auto current = underlying(g);
    if (is_planar(current))
        return {};
    for (auto e : current.edge_list()) {
        current.remove_edge(e.u, e.v);
        if (is_planar(current))
            current.add_edge(e.u, e.v);
    }
    return current.edge_list();
}

auto is_kuratowski_subdivision(std::size_t n, const std::vector<Edge> & edges) -> bool
{
    if (edges.empty())
        return false;
    Graph h(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n || u == v || ! h.add_edge(u, v))
            return false;
    }

    std::vector<Vertex> branch;
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < n; ++v) {
        auto d = h.degree(v);
        if (d == 1 || d > 4)
            return false;
        if (d >= 3)
            branch.push_back(v);
        degree_sum += d;
    }
    const bool k5 = branch.size() == 5 && std::all_of(branch.begin(), branch.end(), [&](Vertex v) { return h.degree(v) == 4; });
    const bool k33 = branch.size() == 6 && std::all_of(branch.begin(), branch.end(), [&](Vertex v) { return h.degree(v) == 3; });
    if (! k5 && ! k33)
        return false;

    // follow each branch vertex's edges through degree-2 vertices
    std::set<std::pair<Vertex, Vertex>> links;
    std::size_t walked = 0;
    for (auto b : branch)
        for (auto first : h.neighbours(b)) {
            Vertex prev = b, cur = first;
            std::size_t length = 1;
            while (h.degree(cur) == 2) {
                auto & nb = h.neighbours(cur);
                Vertex next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
                ++length;
                if (length > edges.size())
                    return false;
            }
            if (cur == b)
                return false;
            walked += length;
            links.insert({std::min(b, cur), std::max(b, cur)});
        }
    // every edge walked twice, once from each end; leftover degree-2 cycles fail this
    if (walked != 2 * edges.size() || walked != degree_sum)
        return false;

    if (k5)
        return links.size() == 10;

    if (links.size() != 9)
        return false;
    // K3,3: the branch vertices split into two triples with no link inside a triple
    std::map<Vertex, int> colour;
    colour[branch[0]] = 0;
    for (auto b : branch)
        if (b != branch[0])
            colour[b] = links.count({std::min(branch[0], b), std::max(branch[0], b)}) ? 1 : 0;
    for (auto [a, b] : links)
        if (colour[a] == colour[b])
            return false;
    return std::count_if(colour.begin(), colour.end(), [](auto & c) { return c.second == 0; }) == 3;
}

} // namespace logan
