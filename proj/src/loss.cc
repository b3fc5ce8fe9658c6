#include <logan/certificates.hh>
#include <logan/loss.hh>
#include <logan/samplers.hh>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace logan {

PrototypeBank::PrototypeBank(Theory theory, std::vector<Graph> prototypes) :
    theory_(theory),
    prototypes_(std::move(prototypes))
{
    if (prototypes_.empty())
        throw std::invalid_argument("prototype bank must not be empty");
    for (const auto & p : prototypes_)
        if (! check(theory_, p).holds)
            throw std::invalid_argument("prototype does not satisfy " + std::string(theory_name(theory_)));
}

auto PrototypeBank::sample(Theory theory, std::size_t m, std::size_t n_min, std::size_t n_max, Seed seed) -> PrototypeBank
{
    if (m == 0 || n_min > n_max)
        throw std::invalid_argument("prototype bank needs m >= 1 and n_min <= n_max");
    std::vector<Graph> prototypes;
    prototypes.reserve(m);
    const auto span = n_max - n_min + 1;
    for (std::size_t i = 0; i < m; ++i)
        prototypes.push_back(sample_theory(theory, n_min + i % span, derive_seed(seed, i)));
    return PrototypeBank(theory, std::move(prototypes));
}

auto PrototypeBank::matched(std::size_t n, std::size_t slack) const -> PrototypeBank
{
    std::vector<Graph> near;
    for (const auto & p : prototypes_) {
        auto size = p.vertex_count();
        if ((size > n ? size - n : n - size) <= slack)
            near.push_back(p);
    }
    if (near.empty())
        return *this;
    return PrototypeBank(theory_, std::move(near));
}

auto PrototypeBank::with(Graph prototype) const -> PrototypeBank
{
    auto prototypes = prototypes_;
    prototypes.push_back(std::move(prototype));
    return PrototypeBank(theory_, std::move(prototypes));
}

auto LossWeights::validate() const -> void
{
    bool positive = ef > 0.0;
    if (ef < 0.0)
        throw std::invalid_argument("negative EF weight");
    for (auto [theory, w] : certificates) {
        if (w < 0.0)
            throw std::invalid_argument("negative certificate weight for " + std::string(theory_name(theory)));
        positive = positive || w > 0.0;
    }
    if (! positive)
        throw std::invalid_argument("at least one loss weight must be positive");
}

auto LossWeights::for_theory(Theory theory, double ef_weight, double certificate_weight) -> LossWeights
{
    return LossWeights{ef_weight, {{theory, certificate_weight}}};
}

auto ef_loss(const Graph & g, const PrototypeBank & bank, const ef::ProbeBudget & budget) -> double
{
    budget.validate();
    const double k = budget.k;
    double best = 1.0;
    for (const auto & prototype : bank.prototypes()) {
        if (prototype.directed() != g.directed())
            continue;
        auto r = ef::approx_round_resilience(g, prototype, budget).rounds;
        best = std::min(best, (k - r) / k);
        if (best == 0.0)
            break;
    }
    return best;
}

auto logical_loss(const Graph & g, const PrototypeBank & bank, const LossWeights & weights, const ef::ProbeBudget & budget) -> LossBreakdown
{
    weights.validate();
    LossBreakdown result;
    if (weights.ef > 0.0) {
        result.ef = ef_loss(g, bank, budget);
        result.total += weights.ef * result.ef;
    }
    for (auto [theory, w] : weights.certificates) {
        auto term = certificate_loss(theory, g);
        result.certificates[theory] = term;
        result.total += w * term;
    }
    return result;
}

auto CurriculumState::windowed_rate() const -> double
{
    if (window.empty())
        return 0.0;
    return std::accumulate(window.begin(), window.end(), 0.0) / static_cast<double>(window.size());
}

auto CurriculumState::validate() const -> void
{
    if (k_max < 2 || k_current < 2 || k_current > k_max)
        throw std::invalid_argument("curriculum depth must lie in [2, k_max]");
    if (window_size == 0)
        throw std::invalid_argument("curriculum window must be positive");
}

auto curriculum_step(CurriculumState state, double batch_fault_rate) -> CurriculumState
{
    state.validate();
    if (! (batch_fault_rate >= 0.0 && batch_fault_rate <= 1.0))
        throw std::invalid_argument("fault rate must lie in [0, 1]");

    state.window.push_back(batch_fault_rate);
    while (state.window.size() > state.window_size)
        state.window.pop_front();

    if (state.window.size() == state.window_size && state.windowed_rate() < state.threshold && state.k_current < state.k_max) {
        ++state.k_current;
        state.window.clear();
    }
    return state;
}

} // namespace logan
