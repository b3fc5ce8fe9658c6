#pragma once

#include <logan/graph.hh>

#include <chrono>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace logan::ef {

/// Which structure a Spoiler pick lands in.
enum class Side : std::uint8_t {
    g,
    h
};

struct Move {
    Side side = Side::g;
    Vertex vertex = 0;

    auto operator<=>(const Move &) const = default;
};

struct Pair {
    Vertex g = 0, h = 0;

    auto operator<=>(const Pair &) const = default;
};

/// An injective correspondence between pebbled vertices of G and H.
class PartialMap {
public:
    PartialMap() = default;
    explicit PartialMap(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {}

    auto pairs() const -> const std::vector<Pair> & { return pairs_; }
    auto size() const -> std::size_t { return pairs_.size(); }
    auto empty() const -> bool { return pairs_.empty(); }

    auto maps_from(Side side, Vertex v) const -> bool;

    /// Would adding `p` keep this a partial isomorphism (given that it is one now)?
    auto can_extend(const Graph & g, const Graph & h, Pair p) const -> bool;

    auto extended(Pair p) const -> PartialMap;

    /// Full check: equality and (directed) adjacency preserved both ways.
    auto is_partial_isomorphism(const Graph & g, const Graph & h) const -> bool;

    /// Pairs sorted by G vertex; identical for maps that are equal as sets.
    auto canonical() const -> PartialMap;

private:
    std::vector<Pair> pairs_;
};

/// The bounded observer: rounds, frontier width, branch cap and wall clock.
struct ProbeBudget {
    int k = 3;
    std::size_t probes = 16;
    std::size_t branch = 4;
    std::chrono::milliseconds timeout{10'000};

    /// Throws std::invalid_argument unless k, probes, branch and timeout are positive.
    auto validate() const -> void;

    /// A budget large enough that the approximate engine searches the full game.
    static auto exhaustive(int k, const Graph & g, const Graph & h) -> ProbeBudget;
};

struct ProbeResult {
    int rounds = 0;
    /// The clock ran out; `rounds` covers only the fully expanded levels.
    bool timed_out = false;
    std::size_t maps_expanded = 0;
};

class InstanceTooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t default_exact_cap = 10;
/// Memo keys pack vertex ids into a byte each.
inline constexpr std::size_t max_exact_cap = 255;

/// r*(G, H) capped at k_max by full minimax over the EF game tree, memoised
/// on partial maps. Throws InstanceTooLarge when either graph exceeds cap.
auto exact_round_resilience(const Graph & g, const Graph & h, int k_max, std::size_t cap = default_exact_cap) -> int;

/// The budgeted probe. Levels of partial maps are expanded breadth-first:
/// from each retained map, the `branch` rarest Spoiler picks on each side
/// (rarity by 1-WL signature refined with adjacency to the pebbles), each
/// answered by the `branch` best signature-matching Duplicator replies that
/// keep the map a partial isomorphism. Each level keeps its first `probes`
/// maps in generation order; expansion stops early once a level comes up
/// empty. The explored game is then scored by minimax, where a map dropped by
/// the width cap counts as surviving the remaining rounds.
auto approx_round_resilience(const Graph & g, const Graph & h, const ProbeBudget & budget) -> ProbeResult;

/// A Spoiler strategy: a pick, then one sub-strategy per Duplicator reply
/// that keeps the map a partial isomorphism (answers[i] -> next[i]).
struct StrategyNode {
    Move move;
    std::vector<Vertex> answers;
    std::vector<StrategyNode> next;
};

struct SpoilerWitness {
    /// Rounds the strategy needs to break every Duplicator line.
    int depth = 0;
    StrategyNode root;

    /// The line followed when Duplicator always gives the first listed reply.
    auto moves() const -> std::vector<Move>;
    auto to_string() const -> std::string;
};

/// Spoiler's winning strategy of depth r* + 1 when r*(G, H) < k_max, else none.
auto spoiler_witness(const Graph & g, const Graph & h, int k_max, std::size_t cap = default_exact_cap) -> std::optional<SpoilerWitness>;

/// Plays the witness against every Duplicator reply sequence; true iff no
/// line survives `depth` rounds.
auto replay_witness(const Graph & g, const Graph & h, const SpoilerWitness & witness) -> bool;

} // namespace logan::ef
