#include <logan/wl.hh>

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <tuple>

namespace logan::wl {

auto Coloring::class_count() const -> std::size_t
{
    return std::set<std::uint32_t>(colors.begin(), colors.end()).size();
}

namespace {
    auto neighbour_colors(const std::vector<Vertex> & nbrs, const std::vector<std::uint32_t> & colors) -> std::vector<std::uint32_t>
    {
        std::vector<std::uint32_t> result;
        result.reserve(nbrs.size());
        for (auto w : nbrs)
            result.push_back(colors[w]);
        std::sort(result.begin(), result.end());
        return result;
    }
}

auto refine(const Graph & g, std::size_t max_rounds) -> Coloring
{
    const auto n = g.vertex_count();
    Coloring result{std::vector<std::uint32_t>(n, 0), 0};
    auto classes = n == 0 ? 0 : std::size_t{1};

    using Signature = std::tuple<std::uint32_t, std::vector<std::uint32_t>, std::vector<std::uint32_t>>;
    while (result.rounds < max_rounds) {
        std::vector<Signature> sigs;
        sigs.reserve(n);
        for (Vertex v = 0; v < n; ++v)
            sigs.emplace_back(result.colors[v], neighbour_colors(g.out_neighbours(v), result.colors),
                    g.directed() ? neighbour_colors(g.in_neighbours(v), result.colors) : std::vector<std::uint32_t>{});

        std::map<Signature, std::uint32_t> ids;
        for (auto & s : sigs)
            ids.emplace(s, 0);
        std::uint32_t next = 0;
        for (auto & [sig, id] : ids)
            id = next++;

        if (ids.size() == classes)
            break;

        for (Vertex v = 0; v < n; ++v)
            result.colors[v] = ids.at(sigs[v]);
        classes = ids.size();
        ++result.rounds;
    }
    return result;
}

auto fnv1a64(std::span<const std::uint64_t> words) -> std::uint64_t
{
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (auto w : words)
        for (int byte = 0; byte < 8; ++byte) {
            hash ^= (w >> (8 * byte)) & 0xffU;
            hash *= 0x100000001b3ULL;
        }
    return hash;
}

auto signature_table(const Graph & g, std::size_t depth) -> SignatureTable
{
    const auto n = g.vertex_count();
    constexpr std::uint64_t separator = 0xffffffffffffffffULL;
    SignatureTable table;
    table.emplace_back(n, fnv1a64(std::array<std::uint64_t, 1>{g.directed() ? 2U : 1U}));

    std::vector<std::uint64_t> words, nbrs;
    for (std::size_t d = 0; d < depth; ++d) {
        const auto & prev = table.back();
        std::vector<std::uint64_t> next(n);
        for (Vertex v = 0; v < n; ++v) {
            words.assign({prev[v], g.out_degree(v)});
            nbrs.clear();
            for (auto w : g.out_neighbours(v))
                nbrs.push_back(prev[w]);
            std::sort(nbrs.begin(), nbrs.end());
            words.insert(words.end(), nbrs.begin(), nbrs.end());
            if (g.directed()) {
                words.push_back(separator);
                nbrs.clear();
                for (auto w : g.in_neighbours(v))
                    nbrs.push_back(prev[w]);
                std::sort(nbrs.begin(), nbrs.end());
                words.insert(words.end(), nbrs.begin(), nbrs.end());
            }
            next[v] = fnv1a64(words);
        }
        table.push_back(std::move(next));
    }
    return table;
}

auto signature(const Graph & g, Vertex v, std::size_t depth) -> std::uint64_t
{
    if (v >= g.vertex_count())
        throw GraphError("signature: vertex out of range");
    return signature_table(g, depth)[depth][v];
}

} // namespace logan::wl
