#include <logan/theory.hh>

namespace logan {

auto theory_name(Theory t) -> std::string_view
{
    switch (t) {
    case Theory::bipartite: return "bipartite";
    case Theory::planar: return "planar";
    case Theory::tree: return "tree";
    case Theory::connected: return "connected";
    case Theory::has_triangle: return "has_triangle";
    case Theory::triangle_free: return "triangle_free";
    case Theory::two_edge_strong: return "two_edge_strong";
    }
    return "unknown";
}

auto parse_theory(std::string_view name) -> std::optional<Theory>
{
    for (auto t : all_theories)
        if (theory_name(t) == name)
            return t;
    // accepted aliases
    if (name == "planarity")
        return Theory::planar;
    if (name == "connectivity")
        return Theory::connected;
    return std::nullopt;
}

} // namespace logan
