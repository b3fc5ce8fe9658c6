#pragma once

#include <logan/ef.hh>
#include <logan/graph.hh>
#include <logan/rng.hh>
#include <logan/theory.hh>

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace logan {

enum class ExperimentId {
    exp1,
    exp2,
    exp3
};

auto experiment_name(ExperimentId id) -> std::string_view;
auto parse_experiment(std::string_view name) -> ExperimentId;

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
    ExperimentId id = ExperimentId::exp1;
    std::vector<Theory> theories;
    std::size_t n_min = 6;
    std::size_t n_max = 16;
    /// exp1 and exp2: draws per vertex count. exp3 ignores it.
    std::size_t samples_per_size = 20;
    /// exp3: draws per arm.
    std::size_t samples = 50;
    std::vector<int> ks;
    std::size_t bank_size = 100;
    std::size_t bank_slack = 2;
    ef::ProbeBudget budget;
    double ef_weight = 1.0;
    double certificate_weight = 1.0;
    double baseline_density = 0.25;
    double perturb_fraction = 0.2;
    /// exp2: vertex count of the two class prototypes.
    std::size_t prototype_n = 8;
    Seed seed{20250101};
    std::filesystem::path output = "results";
    bool quick = false;

    static auto defaults(ExperimentId id) -> ExperimentConfig;

    /// Sample counts divided by four (at least one).
    auto quartered() const -> ExperimentConfig;

    auto validate() const -> void;
};

/// Applies `key=value` lines to `config`. Blank lines and lines starting with
/// '#' are skipped. A key may be prefixed by an experiment name ("exp2.ks")
/// to apply only to that experiment.
auto apply_config(ExperimentConfig config, std::istream & in) -> ExperimentConfig;
auto apply_config_text(ExperimentConfig config, const std::string & text) -> ExperimentConfig;
auto apply_config_file(ExperimentConfig config, const std::filesystem::path & path) -> ExperimentConfig;

/// The key=value form of `config`, readable by apply_config.
auto config_text(const ExperimentConfig & config) -> std::string;

struct Exp1Row {
    Theory theory;
    std::size_t n_min = 0, n_max = 0, samples = 0;
    double pos_rate = 0.0;
    double neg_rate = 0.0;
};

struct Exp2Row {
    int k = 0;
    std::size_t samples = 0;
    double accuracy = 0.0;
};

struct Exp3Row {
    Theory theory;
    std::size_t samples = 0;
    double baseline_sat = 0.0;
    double framework_sat = 0.0;
    double improvement = 0.0;
    double discrimination = 0.0;
};

struct LabelledGraph {
    Graph graph;
    bool positive = false;
};

auto run_exp1(const ExperimentConfig & config) -> std::vector<Exp1Row>;

/// True when g's probed resilience against `positive` is at least that
/// against `negative`.
auto classify_by_prototype(const Graph & g, const Graph & positive, const Graph & negative, const ef::ProbeBudget & budget) -> bool;

/// The seeded prototypes and balanced test set that run_exp2 uses.
auto exp2_prototypes(const ExperimentConfig & config) -> std::pair<Graph, Graph>;
auto exp2_test_set(const ExperimentConfig & config) -> std::vector<LabelledGraph>;

auto run_exp2(const ExperimentConfig & config) -> std::vector<Exp2Row>;
auto run_exp2_on(const ExperimentConfig & config, const Graph & positive, const Graph & negative,
    const std::vector<LabelledGraph> & tests) -> std::vector<Exp2Row>;

auto run_exp3(const ExperimentConfig & config) -> std::vector<Exp3Row>;

auto write_csv(std::ostream & out, const std::vector<Exp1Row> & rows) -> void;
auto write_csv(std::ostream & out, const std::vector<Exp2Row> & rows) -> void;
auto write_csv(std::ostream & out, const std::vector<Exp3Row> & rows) -> void;

struct BandResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Acceptance bands; `widen` scales every tolerance.
auto exp1_bands(const std::vector<Exp1Row> & rows, double widen = 1.0) -> std::vector<BandResult>;
auto exp2_bands(const std::vector<Exp2Row> & rows, double widen = 1.0) -> std::vector<BandResult>;
auto exp3_bands(const std::vector<Exp3Row> & rows, double widen = 1.0) -> std::vector<BandResult>;

struct RunSummary {
    std::vector<BandResult> bands;
    std::vector<std::filesystem::path> files;

    auto all_pass() const -> bool;
};

/// Runs every experiment from its defaults (then `overrides`, when given),
/// writes exp1.csv, exp2.csv and exp3.csv under `output`, and checks bands.
/// Quick mode quarters sample counts and widens bands by 1.5.
auto run_all(Seed seed, const std::filesystem::path & output, bool quick, std::ostream & log,
    const std::string & overrides = "") -> RunSummary;

} // namespace logan
