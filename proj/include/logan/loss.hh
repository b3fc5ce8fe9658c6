#pragma once

#include <logan/ef.hh>
#include <logan/graph.hh>
#include <logan/rng.hh>
#include <logan/theory.hh>

#include <deque>
#include <map>
#include <vector>

namespace logan {

/// M exemplar graphs, each satisfying the bank's theory.
class PrototypeBank {
public:
    /// Throws std::invalid_argument if empty or if any prototype fails check().
    PrototypeBank(Theory theory, std::vector<Graph> prototypes);

    /// m seeded sample_theory draws with sizes cycling through [n_min, n_max].
    static auto sample(Theory theory, std::size_t m, std::size_t n_min, std::size_t n_max, Seed seed) -> PrototypeBank;

    auto theory() const -> Theory { return theory_; }
    auto prototypes() const -> const std::vector<Graph> & { return prototypes_; }
    auto size() const -> std::size_t { return prototypes_.size(); }

    /// The prototypes within `slack` vertices of n; the whole bank if none are.
    auto matched(std::size_t n, std::size_t slack = 2) const -> PrototypeBank;

    auto with(Graph prototype) const -> PrototypeBank;

private:
    Theory theory_;
    std::vector<Graph> prototypes_;
};

struct LossWeights {
    double ef = 1.0;
    std::map<Theory, double> certificates;

    /// Nonnegative weights, at least one positive.
    auto validate() const -> void;

    static auto for_theory(Theory theory, double ef_weight = 1.0, double certificate_weight = 1.0) -> LossWeights;
};

struct LossBreakdown {
    double total = 0.0;
    /// Unweighted terms.
    double ef = 0.0;
    std::map<Theory, double> certificates;
};

/// min over prototypes of (k - r(G, B_i)) / k, with r from the budgeted probe.
auto ef_loss(const Graph & g, const PrototypeBank & bank, const ef::ProbeBudget & budget) -> double;

/// weights.ef * ef_loss + sum over theories of weight * certificate_loss.
/// The EF term is skipped when its weight is zero.
auto logical_loss(const Graph & g, const PrototypeBank & bank, const LossWeights & weights, const ef::ProbeBudget & budget) -> LossBreakdown;

/// Depth schedule: k rises by one once the windowed fault rate drops below
/// the threshold.
struct CurriculumState {
    int k_current = 2;
    int k_max = 5;
    double threshold = 0.1;
    std::size_t window_size = 50;
    std::deque<double> window;

    auto windowed_rate() const -> double;
    auto validate() const -> void;
};

auto curriculum_step(CurriculumState state, double batch_fault_rate) -> CurriculumState;

} // namespace logan
