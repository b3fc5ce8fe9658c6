#include <logan/ef.hh>

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace logan::ef {

auto PartialMap::maps_from(Side side, Vertex v) const -> bool
{
    return std::any_of(pairs_.begin(), pairs_.end(), [&](const Pair & p) { return (side == Side::g ? p.g : p.h) == v; });
}

auto PartialMap::can_extend(const Graph & g, const Graph & h, Pair p) const -> bool
{
    for (auto q : pairs_) {
        if ((p.g == q.g) != (p.h == q.h))
            return false;
        if (g.has_edge(p.g, q.g) != h.has_edge(p.h, q.h))
            return false;
        if (g.has_edge(q.g, p.g) != h.has_edge(q.h, p.h))
            return false;
    }
    return true;
}

auto PartialMap::extended(Pair p) const -> PartialMap
{
    auto pairs = pairs_;
    pairs.push_back(p);
    return PartialMap{std::move(pairs)};
}

auto PartialMap::is_partial_isomorphism(const Graph & g, const Graph & h) const -> bool
{
    for (auto p : pairs_)
        if (p.g >= g.vertex_count() || p.h >= h.vertex_count())
            return false;
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        for (std::size_t j = 0; j < pairs_.size(); ++j) {
            auto a = pairs_[i], b = pairs_[j];
            if ((a.g == b.g) != (a.h == b.h))
                return false;
            if (g.has_edge(a.g, b.g) != h.has_edge(a.h, b.h))
                return false;
        }
    return true;
}

auto PartialMap::canonical() const -> PartialMap
{
    auto pairs = pairs_;
    std::sort(pairs.begin(), pairs.end());
    return PartialMap{std::move(pairs)};
}

namespace {
    /// Minimax over the full game tree. The memo key is the pebbled pair set
    /// plus the rounds left.
    class ExactGame {
    public:
        ExactGame(const Graph & g, const Graph & h) :
            g_(g),
            h_(h),
            same_(g == h)
        {
        }

        /// Rounds (at most cap) Duplicator survives from `map`.
        auto survive(std::vector<Pair> & map, int cap) -> int
        {
            if (cap <= 0)
                return 0;

            auto key = encode(map, cap);
            if (auto it = memo_.find(key); it != memo_.end())
                return it->second;

            int best = cap;
            for (auto side : {Side::g, Side::h}) {
                const auto & from = side == Side::g ? g_ : h_;
                for (Vertex x = 0; x < from.vertex_count() && best > 0; ++x) {
                    if (pebbled(map, side, x))
                        continue;
                    best = std::min(best, answer(map, cap, {side, x}, best));
                }
            }

            memo_.emplace(std::move(key), best);
            return best;
        }

        /// Best Duplicator value against `move`; stops once it reaches `enough`.
        auto answer(std::vector<Pair> & map, int cap, Move move, int enough) -> int
        {
            int value = 0;
            for (auto y : reply_order(move)) {
                auto pair = to_pair(move, y);
                if (! extendable(map, pair))
                    continue;
                map.push_back(pair);
                value = std::max(value, 1 + survive(map, cap - 1));
                map.pop_back();
                if (value >= enough)
                    break;
            }
            return value;
        }

        auto reply_order(Move move) const -> std::vector<Vertex>
        {
            const auto & to = move.side == Side::g ? h_ : g_;
            std::vector<Vertex> order;
            order.reserve(to.vertex_count());
            if (same_)
                order.push_back(move.vertex);
            for (Vertex y = 0; y < to.vertex_count(); ++y)
                if (! (same_ && y == move.vertex))
                    order.push_back(y);
            return order;
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

        static auto to_pair(Move move, Vertex reply) -> Pair
        {
            return move.side == Side::g ? Pair{move.vertex, reply} : Pair{reply, move.vertex};
        }

        static auto pebbled(const std::vector<Pair> & map, Side side, Vertex v) -> bool
        {
            return std::any_of(map.begin(), map.end(), [&](const Pair & p) { return (side == Side::g ? p.g : p.h) == v; });
        }

        auto graph(Side side) const -> const Graph & { return side == Side::g ? g_ : h_; }

    private:
        static auto encode(std::vector<Pair> map, int cap) -> std::string
        {
            std::sort(map.begin(), map.end());
            std::string key;
            key.reserve(2 * map.size() + 1);
            key.push_back(static_cast<char>(cap));
            for (auto p : map) {
                key.push_back(static_cast<char>(p.g));
                key.push_back(static_cast<char>(p.h));
            }
            return key;
        }

        const Graph & g_;
        const Graph & h_;
        bool same_;
        std::unordered_map<std::string, int> memo_;
    };

    auto check_size(const Graph & g, const Graph & h, std::size_t cap) -> void
    {
        if (cap > max_exact_cap)
            throw std::invalid_argument("exact engine cap above " + std::to_string(max_exact_cap));
        if (g.vertex_count() > cap || h.vertex_count() > cap)
            throw InstanceTooLarge("exact EF search limited to " + std::to_string(cap) + " vertices, got " + std::to_string(g.vertex_count()) + " and " + std::to_string(h.vertex_count()));
        if (g.directed() != h.directed())
            throw std::invalid_argument("EF game between a graph and a digraph");
    }

    auto build_strategy(ExactGame & game, std::vector<Pair> & map, int rounds) -> StrategyNode
    {
        for (auto side : {Side::g, Side::h}) {
            const auto & from = game.graph(side);
            const auto & to = game.graph(side == Side::g ? Side::h : Side::g);
            for (Vertex x = 0; x < from.vertex_count(); ++x) {
                if (ExactGame::pebbled(map, side, x))
                    continue;
                Move move{side, x};
                bool wins = true;
                std::vector<Vertex> replies;
                for (Vertex y = 0; y < to.vertex_count() && wins; ++y) {
                    auto pair = ExactGame::to_pair(move, y);
                    if (! game.extendable(map, pair))
                        continue;
                    map.push_back(pair);
                    wins = rounds > 1 && game.survive(map, rounds - 1) < rounds - 1;
                    map.pop_back();
                    replies.push_back(y);
                }
                if (! wins)
                    continue;

                StrategyNode node{move, {}, {}};
                for (auto y : replies) {
                    map.push_back(ExactGame::to_pair(move, y));
                    node.answers.push_back(y);
                    node.next.push_back(build_strategy(game, map, rounds - 1));
                    map.pop_back();
                }
                return node;
            }
        }
        throw std::logic_error("build_strategy called on a position Spoiler cannot win");
    }

    auto replay(const Graph & g, const Graph & h, const StrategyNode & node, PartialMap & map, int rounds) -> bool
    {
        const auto & to = node.move.side == Side::g ? h : g;
        for (Vertex y = 0; y < to.vertex_count(); ++y) {
            auto pair = node.move.side == Side::g ? Pair{node.move.vertex, y} : Pair{y, node.move.vertex};
            if (! map.can_extend(g, h, pair))
                continue;
            if (rounds <= 1)
                return false;
            auto it = std::find(node.answers.begin(), node.answers.end(), y);
            if (it == node.answers.end())
                return false;
            auto child = map.extended(pair);
            if (! replay(g, h, node.next[it - node.answers.begin()], child, rounds - 1))
                return false;
        }
        return true;
    }

    auto describe(std::ostream & out, const StrategyNode & node, int indent) -> void
    {
        out << std::string(2 * indent, ' ') << "spoiler " << (node.move.side == Side::g ? 'G' : 'H') << ':' << node.move.vertex;
        if (node.answers.empty()) {
            out << " (no reply)\n";
            return;
        }
        out << '\n';
        for (std::size_t i = 0; i < node.answers.size(); ++i) {
            out << std::string(2 * indent + 2, ' ') << "reply " << node.answers[i] << '\n';
            describe(out, node.next[i], indent + 2);
        }
    }
}

auto exact_round_resilience(const Graph & g, const Graph & h, int k_max, std::size_t cap) -> int
{
    check_size(g, h, cap);
    if (k_max < 0)
        throw std::invalid_argument("k_max must be nonnegative");
    ExactGame game(g, h);
    std::vector<Pair> map;
    return game.survive(map, k_max);
}

auto spoiler_witness(const Graph & g, const Graph & h, int k_max, std::size_t cap) -> std::optional<SpoilerWitness>
{
    check_size(g, h, cap);
    ExactGame game(g, h);
    std::vector<Pair> map;
    auto r = game.survive(map, k_max);
    if (r >= k_max)
        return std::nullopt;
    return SpoilerWitness{r + 1, build_strategy(game, map, r + 1)};
}

auto replay_witness(const Graph & g, const Graph & h, const SpoilerWitness & witness) -> bool
{
    PartialMap map;
    return witness.depth >= 1 && replay(g, h, witness.root, map, witness.depth);
}

auto SpoilerWitness::moves() const -> std::vector<Move>
{
    std::vector<Move> line;
    const StrategyNode * node = &root;
    while (true) {
        line.push_back(node->move);
        if (node->next.empty())
            break;
        node = &node->next.front();
    }
    return line;
}

auto SpoilerWitness::to_string() const -> std::string
{
    std::ostringstream out;
    out << "depth " << depth << '\n';
    describe(out, root, 0);
    return std::move(out).str();
}

} // namespace logan::ef
