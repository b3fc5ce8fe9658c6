#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace logan {

/// Target theories with a sampler, a checker, a witness type and a surrogate loss.
enum class Theory {
    bipartite,
    planar,
    tree,
    connected,
    has_triangle,
    triangle_free,
    two_edge_strong,
};

inline constexpr std::array all_theories{
    Theory::bipartite,
    Theory::planar,
    Theory::tree,
    Theory::connected,
    Theory::has_triangle,
    Theory::triangle_free,
    Theory::two_edge_strong,
};

auto theory_name(Theory t) -> std::string_view;
auto parse_theory(std::string_view name) -> std::optional<Theory>;

/// Only two_edge_strong is a theory of digraphs.
constexpr auto theory_is_directed(Theory t) -> bool
{
    return t == Theory::two_edge_strong;
}

} // namespace logan
