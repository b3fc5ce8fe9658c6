#pragma once

#include <logan/graph.hh>
#include <logan/rng.hh>
#include <logan/theory.hh>

#include <stdexcept>
#include <vector>

namespace logan {

class UnsupportedSample : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// G(n, p): every unordered pair independently with probability p.
auto random_graph(std::size_t n, double p, Seed seed) -> Graph;

/// Directed G(n, p): every ordered pair independently with probability p.
auto random_digraph(std::size_t n, double p, Seed seed) -> Graph;

/// Uniform random labelled tree, decoded from a random Pruefer sequence.
auto random_tree(std::size_t n, Seed seed) -> Graph;

/// A graph satisfying `theory`, for every supported (theory, n):
///   tree n >= 1, bipartite n >= 2, connected n >= 1, planar n >= 1,
///   has_triangle n >= 3, triangle_free n >= 2, two_edge_strong n >= 3.
auto sample_theory(Theory theory, std::size_t n, Seed seed) -> Graph;

/// A graph violating `theory` with a small, legible fault. Needs n >= 3
/// (n >= 5 for planar).
auto sample_negative(Theory theory, std::size_t n, Seed seed) -> Graph;

/// The vertex pairs perturb() flips: round(fraction * |E|) distinct pairs
/// drawn uniformly without replacement from all pairs of G.
auto perturbation_pairs(const Graph & g, double fraction, Seed seed) -> std::vector<Edge>;

/// Toggles each listed pair. Applying the same list twice is the identity.
auto apply_flips(const Graph & g, const std::vector<Edge> & pairs) -> Graph;

auto perturb(const Graph & g, double fraction, Seed seed) -> Graph;

} // namespace logan
