#include <logan/builder.hh>
#include <logan/samplers.hh>

#include <algorithm>
#include <string>

namespace logan {

namespace {
    auto supports(Theory theory, WitnessKind kind) -> bool
    {
        switch (theory) {
        case Theory::bipartite: return kind == WitnessKind::odd_cycle;
        case Theory::planar: return kind == WitnessKind::kuratowski_subgraph;
        case Theory::tree: return kind == WitnessKind::extra_cycle_edge || kind == WitnessKind::disconnecting_split;
        case Theory::connected: return kind == WitnessKind::disconnecting_split;
        case Theory::has_triangle: return false;
        case Theory::triangle_free: return kind == WitnessKind::triangle;
        case Theory::two_edge_strong:
            return kind == WitnessKind::unit_cut || kind == WitnessKind::directed_bridge
                    || kind == WitnessKind::degree_deficit || kind == WitnessKind::disconnecting_split;
        }
        return false;
    }

    auto unsupported(Theory theory, const Witness & witness) -> UnsupportedRepair
    {
        return UnsupportedRepair("no repair for " + std::string(witness_kind_name(witness.kind)) + " under "
            + std::string(theory_name(theory)));
    }

    template <typename T>
    auto pick_or_throw(const std::vector<T> & items, Rng & rng, Theory theory, const Witness & witness) -> T
    {
        if (items.empty())
            throw unsupported(theory, witness);
        return rng.pick(items);
    }

    auto cycle_edges_of(const Witness & witness) -> std::vector<Edge>
    {
        if (! witness.edges.empty())
            return witness.edges;
        std::vector<Edge> edges;
        const auto & c = witness.vertices;
        for (std::size_t i = 0; i < c.size(); ++i)
            edges.push_back(Edge{c[i], c[(i + 1) % c.size()]});
        return edges;
    }

    // an arc x -> t with x reachable from s once `cut` is gone
    auto bypass(const Graph & g, Vertex s, Vertex t, Edge cut, Rng & rng, Theory theory, const Witness & witness) -> Edit
    {
        auto reach = reachable_from(g, s, cut);
        std::vector<Edge> candidates;
        for (Vertex x = 0; x < g.vertex_count(); ++x)
            if (reach[x] && x != t && ! g.has_edge(x, t))
                candidates.push_back(Edge{x, t});
        return Edit{EditKind::add, pick_or_throw(candidates, rng, theory, witness)};
    }
}

auto repair_edit(const Graph & g, Theory theory, const Witness & witness, Seed seed) -> Edit
{
    if (! supports(theory, witness.kind) || witness.partial || ! verify_witness(g, witness))
        throw unsupported(theory, witness);

    Rng rng(seed);
    const auto n = g.vertex_count();

    switch (witness.kind) {
    case WitnessKind::odd_cycle:
    case WitnessKind::kuratowski_subgraph:
    case WitnessKind::extra_cycle_edge:
    {
        auto e = rng.pick(cycle_edges_of(witness));
        return Edit{EditKind::remove, g.key(e.u, e.v)};
    }

    case WitnessKind::triangle: {
        const auto & t = witness.vertices;
        std::vector<Edge> sides{g.key(t[0], t[1]), g.key(t[1], t[2]), g.key(t[0], t[2])};
        return Edit{EditKind::remove, rng.pick(sides)};
    }

    case WitnessKind::disconnecting_split: {
        std::vector<bool> inside(n, false);
        for (auto v : witness.vertices)
            inside[v] = true;
        std::vector<Edge> candidates;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
                if (inside[u] && ! inside[v])
                    candidates.push_back(g.key(u, v));
        return Edit{EditKind::add, pick_or_throw(candidates, rng, theory, witness)};
    }

    case WitnessKind::unit_cut:
        return bypass(g, witness.endpoints->u, witness.endpoints->v, witness.edges.front(), rng, theory, witness);

    case WitnessKind::directed_bridge: {
        auto e = witness.edges.front();
        return bypass(g, e.u, e.v, e, rng, theory, witness);
    }

    case WitnessKind::degree_deficit: {
        auto v = witness.vertices.front();
        std::vector<Edge> candidates;
        for (Vertex w = 0; w < n; ++w) {
            if (w == v)
                continue;
            auto arc = witness.direction == Direction::out ? Edge{v, w} : Edge{w, v};
            if (! g.has_edge(arc.u, arc.v))
                candidates.push_back(arc);
        }
        return Edit{EditKind::add, pick_or_throw(candidates, rng, theory, witness)};
    }
    }
    throw unsupported(theory, witness);
}

auto apply_edit(const Graph & g, const Edit & edit) -> Graph
{
    auto result = g;
    bool changed = edit.kind == EditKind::add ? result.add_edge(edit.edge.u, edit.edge.v)
                                              : result.remove_edge(edit.edge.u, edit.edge.v);
    if (! changed)
        throw GraphError("edit does not change the graph");
    return result;
}

auto repair(const Graph & g, Theory theory, const Witness & witness, Seed seed) -> Graph
{
    return apply_edit(g, repair_edit(g, theory, witness, seed));
}

auto build(Theory theory, std::size_t n, const PrototypeBank & bank, const LossWeights & weights,
    const ef::ProbeBudget & budget, const BuildOptions & options, Seed seed) -> BuildResult
{
    if (n == 0)
        throw std::invalid_argument("build needs n >= 1");
    weights.validate();
    budget.validate();

    auto graph = theory_is_directed(theory) ? random_digraph(n, options.initial_density, derive_seed(seed, 0))
                                            : random_graph(n, options.initial_density, derive_seed(seed, 0));
    auto loss = logical_loss(graph, bank, weights, budget);

    BuildResult best{graph, loss, check(theory, graph).holds, {}};
    RepairTrace trace;
    trace.initial_loss = loss.total;

    auto better = [](double loss_a, bool holds_a, double loss_b, bool holds_b) {
        return loss_a < loss_b || (loss_a == loss_b && holds_a && ! holds_b);
    };

    Rng rng(derive_seed(seed, 1));
    for (std::size_t iter = 1; iter <= options.max_iters && loss.total > 0.0; ++iter) {
        trace.iterations = iter;
        auto result = check(theory, graph);

        std::optional<Edit> edit;
        if (! result.holds && result.witness) {
            try {
                edit = repair_edit(graph, theory, *result.witness, derive_seed(seed, 2 + iter));
            }
            catch (const UnsupportedRepair &) {
            }
        }

        if (edit) {
            graph = apply_edit(graph, *edit);
            loss = logical_loss(graph, bank, weights, budget);
            trace.steps.push_back(RepairStep{iter, result.witness, *edit, loss.total});
        }
        else {
            if (n < 2)
                break;
            auto u = static_cast<Vertex>(rng.below(n));
            auto v = static_cast<Vertex>(rng.below(n - 1));
            if (v >= u)
                ++v;
            auto key = graph.key(u, v);
            Edit flip{graph.has_edge(key.u, key.v) ? EditKind::remove : EditKind::add, key};
            auto candidate = apply_edit(graph, flip);
            auto candidate_loss = logical_loss(candidate, bank, weights, budget);
            if (candidate_loss.total <= loss.total) {
                graph = std::move(candidate);
                loss = candidate_loss;
                trace.steps.push_back(RepairStep{iter, std::nullopt, flip, loss.total});
            }
            else
                ++trace.rejected_flips;
        }

        auto holds = check(theory, graph).holds;
        if (better(loss.total, holds, best.loss.total, best.satisfies))
            best = BuildResult{graph, loss, holds, {}};
    }

    trace.final_loss = best.loss.total;
    best.trace = std::move(trace);
    return best;
}

} // namespace logan
