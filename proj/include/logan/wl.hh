#pragma once

#include <logan/graph.hh>

#include <cstdint>
#include <span>
#include <vector>

namespace logan::wl {

/// Stable 1-WL colouring. Colour ids are dense, assigned in sorted order of
/// the (old colour, neighbour colour multiset) signatures, so they depend only
/// on the isomorphism type of the vertex's refinement history.
struct Coloring {
    std::vector<std::uint32_t> colors;
    /// Refinement iterations that split at least one class.
    std::size_t rounds = 0;

    auto class_count() const -> std::size_t;
};

auto refine(const Graph & g, std::size_t max_rounds) -> Coloring;

/// FNV-1a over the little-endian bytes of `words`. Fixed, seedless.
auto fnv1a64(std::span<const std::uint64_t> words) -> std::uint64_t;

/// signatures[d][v] for d = 0..depth. signatures[0] is the same constant for
/// every vertex; level d+1 hashes level d of v together with the sorted
/// level-d multisets of its out- and in-neighbours.
using SignatureTable = std::vector<std::vector<std::uint64_t>>;

auto signature_table(const Graph & g, std::size_t depth) -> SignatureTable;

auto signature(const Graph & g, Vertex v, std::size_t depth) -> std::uint64_t;

} // namespace logan::wl
