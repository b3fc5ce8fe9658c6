#pragma once

#include <logan/certificates.hh>
#include <logan/ef.hh>
#include <logan/graph.hh>
#include <logan/loss.hh>
#include <logan/rng.hh>
#include <logan/theory.hh>

#include <optional>
#include <stdexcept>
#include <vector>

namespace logan {

class UnsupportedRepair : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class EditKind {
    add,
    remove
};

struct Edit {
    EditKind kind = EditKind::add;
    Edge edge;

    auto operator<=>(const Edit &) const = default;
};

/// The single edge or arc edit that breaks `witness`.
///   odd_cycle, triangle, kuratowski_subgraph: remove one of its edges
///   extra_cycle_edge: remove that edge
///   disconnecting_split: add an edge (arc) leaving the split
///   unit_cut, directed_bridge: add a bypass arc around the cut arc
///   degree_deficit: add an arc on the deficient side
/// Throws UnsupportedRepair for witnesses that do not describe a failure of
/// `theory`, or that are partial.
auto repair_edit(const Graph & g, Theory theory, const Witness & witness, Seed seed) -> Edit;

auto apply_edit(const Graph & g, const Edit & edit) -> Graph;

auto repair(const Graph & g, Theory theory, const Witness & witness, Seed seed) -> Graph;

struct RepairStep {
    std::size_t iteration = 0;
    /// Absent for exploratory flips.
    std::optional<Witness> witness;
    Edit edit;
    double loss_after = 0.0;
};

struct RepairTrace {
    double initial_loss = 0.0;
    double final_loss = 0.0;
    std::size_t iterations = 0;
    std::size_t rejected_flips = 0;
    std::vector<RepairStep> steps;
};

struct BuildOptions {
    std::size_t max_iters = 200;
    double initial_density = 0.25;
};

struct BuildResult {
    Graph graph;
    LossBreakdown loss;
    bool satisfies = false;
    RepairTrace trace;
};

/// Seeded G(n, p) start, then witness-driven repairs; when no witness is
/// available a random flip is kept if the loss does not rise. Returns the
/// best graph seen, ordered by loss and then by check().
auto build(Theory theory, std::size_t n, const PrototypeBank & bank, const LossWeights & weights,
    const ef::ProbeBudget & budget, const BuildOptions & options, Seed seed) -> BuildResult;

} // namespace logan
