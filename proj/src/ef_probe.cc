#include <logan/ef.hh>
#include <logan/wl.hh>

#include <algorithm>
#include <unordered_map>

namespace logan::ef {

auto ProbeBudget::validate() const -> void
{
    if (k < 1 || probes < 1 || branch < 1 || timeout.count() <= 0)
        throw std::invalid_argument("probe budget needs k, S, b >= 1 and a positive timeout");
}

auto ProbeBudget::exhaustive(int k, const Graph & g, const Graph & h) -> ProbeBudget
{
    return ProbeBudget{k, std::numeric_limits<std::size_t>::max(), std::max<std::size_t>({g.vertex_count(), h.vertex_count(), 1}),
            std::chrono::hours(24)};
}

namespace {
    using Clock = std::chrono::steady_clock;

    struct Node {
        std::vector<Pair> map; // sorted by G vertex
        bool expanded = false;
        bool pruned = false;
        bool saturated = false; // every vertex on both sides pebbled
        std::vector<std::vector<std::size_t>> children; // per explored Spoiler move
    };

    auto encode(const std::vector<Pair> & map) -> std::string
    {
        std::string key;
        key.reserve(8 * map.size());
        for (auto p : map)
            for (auto v : {p.g, p.h})
                for (int byte = 0; byte < 4; ++byte)
                    key.push_back(static_cast<char>((v >> (8 * byte)) & 0xff));
        return key;
    }

    class Probe {
    public:
        Probe(const Graph & g, const Graph & h, const ProbeBudget & budget) :
            g_(g),
            h_(h),
            budget_(budget),
            same_(g == h),
            depth_(static_cast<std::size_t>(budget.k)),
            sig_g_(wl::signature_table(g, depth_)),
            sig_h_(wl::signature_table(h, depth_))
        {
        }

        auto run() -> ProbeResult
        {
            const auto deadline = Clock::now() + budget_.timeout;
            nodes_.push_back(Node{});
            std::vector<std::vector<std::size_t>> levels{{0}};
            int horizon = budget_.k;
            bool timed_out = false;

            for (int level = 1; level <= budget_.k && ! timed_out; ++level) {
                std::unordered_map<std::string, std::size_t> index;
                std::vector<std::size_t> next;
                for (auto id : levels.back()) {
                    if (Clock::now() > deadline) {
                        timed_out = true;
                        horizon = level - 1;
                        break;
                    }
                    expand(id, index, next);
                }
                if (timed_out || next.empty())
                    break; // early break: nothing survived this round
                cap_width(next);
                levels.push_back(std::move(next));
            }

            ProbeResult result;
            result.timed_out = timed_out;
            result.maps_expanded = expanded_;
            result.rounds = score(levels, horizon);
            return result;
        }

    private:
        auto graph(Side side) const -> const Graph & { return side == Side::g ? g_ : h_; }
        auto sigs(Side side) const -> const wl::SignatureTable & { return side == Side::g ? sig_g_ : sig_h_; }

        static auto pebbled(const std::vector<Pair> & map, Side side, Vertex v) -> bool
        {
            return std::any_of(map.begin(), map.end(), [&](const Pair & p) { return (side == Side::g ? p.g : p.h) == v; });
        }

        /// Deepest signature level on which x (on `side`) and y (other side) agree.
        auto match_quality(Side side, Vertex x, Vertex y) const -> long
        {
            const auto & from = sigs(side);
            const auto & to = sigs(side == Side::g ? Side::h : Side::g);
            long q = 0;
            for (std::size_t d = 1; d <= depth_; ++d) {
                if (from[d][x] != to[d][y])
                    break;
                q = static_cast<long>(d);
            }
            return q;
        }

        /// Depth-d signature of x refined by its adjacency to each pebble, read
        /// in map order so that both sides see the same pebble sequence.
        auto pebble_key(const std::vector<Pair> & map, Side side, Vertex x, std::size_t d) const -> std::uint64_t
        {
            const auto & graph_x = graph(side);
            std::vector<std::uint64_t> words{sigs(side)[d][x]};
            for (auto p : map) {
                auto v = side == Side::g ? p.g : p.h;
                words.push_back((graph_x.has_edge(x, v) ? 1u : 0u) | (graph_x.has_edge(v, x) ? 2u : 0u));
            }
            return wl::fnv1a64(words);
        }

        /// Unpebbled picks, up to `branch` per side, rarest first: the
        /// shallowest signature depth at which the pick has no look-alike in
        /// the other structure, then its look-alikes there and in its own
        /// structure at full depth. A look-alike also agrees on adjacency to
        /// every pebble. Picks from both sides are merged in that order.
        auto spoiler_moves(const std::vector<Pair> & map) const -> std::vector<Move>
        {
            struct Ranked {
                std::size_t vanish, other, own;
                Move move;
                auto operator<=>(const Ranked &) const = default;
            };
            using Counts = std::unordered_map<std::uint64_t, std::size_t>;
            std::vector<Counts> counts[2];
            std::vector<std::vector<std::uint64_t>> keys[2];
            for (auto side : {Side::g, Side::h}) {
                auto i = side == Side::g ? 0 : 1;
                counts[i].resize(depth_ + 1);
                keys[i].assign(depth_ + 1, std::vector<std::uint64_t>(graph(side).vertex_count()));
                for (Vertex x = 0; x < graph(side).vertex_count(); ++x)
                    if (! pebbled(map, side, x))
                        for (std::size_t d = 0; d <= depth_; ++d)
                            ++counts[i][d][keys[i][d][x] = pebble_key(map, side, x, d)];
            }

            std::vector<Ranked> kept;
            for (auto side : {Side::g, Side::h}) {
                auto i = side == Side::g ? 0 : 1;
                auto look_alikes = [&](int from, std::size_t d, Vertex x) -> std::size_t {
                    auto it = counts[from][d].find(keys[i][d][x]);
                    return it == counts[from][d].end() ? 0 : it->second;
                };
                std::vector<Ranked> ranked;
                for (Vertex x = 0; x < graph(side).vertex_count(); ++x) {
                    if (pebbled(map, side, x))
                        continue;
                    std::size_t vanish = 0;
                    while (vanish <= depth_ && look_alikes(1 - i, vanish, x) > 0)
                        ++vanish;
                    ranked.push_back({vanish, look_alikes(1 - i, depth_, x), look_alikes(i, depth_, x), {side, x}});
                }
                std::sort(ranked.begin(), ranked.end());
                if (ranked.size() > budget_.branch)
                    ranked.resize(budget_.branch);
                kept.insert(kept.end(), ranked.begin(), ranked.end());
            }
            std::sort(kept.begin(), kept.end());
            std::vector<Move> moves;
            for (auto & r : kept)
                moves.push_back(r.move);
            return moves;
        }

        /// Replies preserving the partial isomorphism, best signature match
        /// first; ties prefer the identity answer when G and H are equal, then
        /// the lowest vertex id.
        auto replies(const std::vector<Pair> & map, Move move) const -> std::vector<Vertex>
        {
            struct Ranked {
                long quality;
                bool identity;
                Vertex y;
            };
            std::vector<Ranked> ranked;
            const auto & to = graph(move.side == Side::g ? Side::h : Side::g);
            for (Vertex y = 0; y < to.vertex_count(); ++y) {
                auto pair = move.side == Side::g ? Pair{move.vertex, y} : Pair{y, move.vertex};
                if (! extendable(map, pair))
                    continue;
                ranked.push_back({match_quality(move.side, move.vertex, y), same_ && y == move.vertex, y});
            }
            std::sort(ranked.begin(), ranked.end(), [](const Ranked & a, const Ranked & b) {
                if (a.quality != b.quality)
                    return a.quality > b.quality;
                if (a.identity != b.identity)
                    return a.identity;
                return a.y < b.y;
            });
            if (ranked.size() > budget_.branch)
                ranked.resize(budget_.branch);
            std::vector<Vertex> result;
            for (auto & r : ranked)
                result.push_back(r.y);
            return result;
        }

        auto extendable(const std::vector<Pair> & map, Pair p) const -> bool
        {
            for (auto q : map) {
                if ((p.g == q.g) != (p.h == q.h))
                    return false;
                if (g_.has_edge(p.g, q.g) != h_.has_edge(p.h, q.h) || g_.has_edge(q.g, p.g) != h_.has_edge(q.h, p.h))
                    return false;
            }
            return true;
        }

        auto expand(std::size_t id, std::unordered_map<std::string, std::size_t> & index, std::vector<std::size_t> & next) -> void
        {
            ++expanded_;
            nodes_[id].expanded = true;
            auto moves = spoiler_moves(nodes_[id].map);
            if (moves.empty()) {
                nodes_[id].saturated = true;
                return;
            }
            for (auto move : moves) {
                std::vector<std::size_t> children;
                for (auto y : replies(nodes_[id].map, move)) {
                    auto pair = move.side == Side::g ? Pair{move.vertex, y} : Pair{y, move.vertex};
                    auto map = nodes_[id].map;
                    map.insert(std::upper_bound(map.begin(), map.end(), pair), pair);
                    auto key = encode(map);
                    auto [it, inserted] = index.emplace(std::move(key), nodes_.size());
                    if (inserted) {
                        Node child;
                        child.map = std::move(map);
                        nodes_.push_back(std::move(child));
                        next.push_back(it->second);
                    }
                    children.push_back(it->second);
                }
                nodes_[id].children.push_back(std::move(children));
            }
        }

        /// Keeps the first `probes` maps of a level in generation order, so
        /// the reply groups under the rarest Spoiler picks of the best-ranked
        /// parents stay whole; the rest are dropped unexpanded.
        auto cap_width(std::vector<std::size_t> & level) -> void
        {
            if (level.size() <= budget_.probes)
                return;
            for (std::size_t i = budget_.probes; i < level.size(); ++i)
                nodes_[level[i]].pruned = true;
            level.resize(budget_.probes);
        }

        /// Minimax over the explored game, deepest level first.
        auto score(const std::vector<std::vector<std::size_t>> & levels, int horizon) -> int
        {
            std::vector<int> value(nodes_.size(), 0);
            for (std::size_t id = 0; id < nodes_.size(); ++id)
                if (nodes_[id].pruned)
                    value[id] = std::max(0, horizon - static_cast<int>(nodes_[id].map.size()));

            for (int level = std::min<int>(horizon, static_cast<int>(levels.size()) - 1); level >= 0; --level)
                for (auto id : levels[level]) {
                    const auto & node = nodes_[id];
                    const int left = horizon - level;
                    if (left <= 0 || ! node.expanded) {
                        value[id] = 0;
                        continue;
                    }
                    if (node.saturated) {
                        value[id] = left;
                        continue;
                    }
                    int best = left;
                    for (const auto & children : node.children) {
                        int reply = 0;
                        for (auto c : children)
                            reply = std::max(reply, 1 + value[c]);
                        best = std::min(best, reply);
                    }
                    value[id] = std::min(best, left);
                }
            return value[0];
        }

        const Graph & g_;
        const Graph & h_;
        ProbeBudget budget_;
        bool same_;
        std::size_t depth_;
        wl::SignatureTable sig_g_, sig_h_;
        std::vector<Node> nodes_;
        std::size_t expanded_ = 0;
    };
}

auto approx_round_resilience(const Graph & g, const Graph & h, const ProbeBudget & budget) -> ProbeResult
{
    budget.validate();
    if (g.directed() != h.directed())
        throw std::invalid_argument("EF game between a graph and a digraph");
    return Probe(g, h, budget).run();
}

} // namespace logan::ef
