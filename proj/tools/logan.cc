#include <logan/builder.hh>
#include <logan/certificates.hh>
#include <logan/ef.hh>
#include <logan/graph.hh>
#include <logan/harness.hh>
#include <logan/loss.hh>
#include <logan/samplers.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace logan;

namespace {
    struct Options {
        std::string property = "bipartite";
        std::string input = "-";
        std::string against;
        std::size_t n = 10;
        int k = 3;
        std::size_t budget_s = 16;
        std::size_t budget_b = 4;
        std::uint64_t seed = 20250101;
        std::string out;
        bool quick = false;
        std::size_t bank_size = 100;
        std::size_t iters = 500;
        std::string config;
        bool exact = false;
    };

    auto theory_of(const Options & o) -> Theory
    {
        auto theory = parse_theory(o.property);
        if (! theory)
            throw std::invalid_argument("unknown property: " + o.property);
        return *theory;
    }

    auto budget_of(const Options & o) -> ef::ProbeBudget
    {
        ef::ProbeBudget budget;
        budget.k = o.k;
        budget.probes = o.budget_s;
        budget.branch = o.budget_b;
        budget.validate();
        return budget;
    }

    auto load(const std::string & path) -> Graph
    {
        if (path == "-")
            return read_graph(std::cin);
        std::ifstream in(path);
        if (! in)
            throw std::invalid_argument("cannot read " + path);
        return read_graph(in);
    }

    auto bank_for(Theory theory, std::size_t n, const Options & o) -> PrototypeBank
    {
        auto low = n > 2 ? n - 2 : 1;
        return PrototypeBank::sample(theory, o.bank_size, low, n + 2, derive_seed(Seed{o.seed}, 7)).matched(n);
    }

    auto run_check(const Options & o) -> int
    {
        auto theory = theory_of(o);
        auto result = check(theory, load(o.input));
        std::cout << theory_name(theory) << ' ' << (result.holds ? "PASS" : "FAIL");
        if (result.witness)
            std::cout << " witness: " << result.witness->to_string();
        std::cout << '\n';
        return 0;
    }

    auto run_score(const Options & o) -> int
    {
        auto theory = theory_of(o);
        auto g = load(o.input);
        auto bank = bank_for(theory, g.vertex_count(), o);
        auto loss = logical_loss(g, bank, LossWeights::for_theory(theory), budget_of(o));
        std::cout << "property=" << theory_name(theory) << '\n'
                  << "n=" << g.vertex_count() << '\n'
                  << "k=" << o.k << '\n'
                  << "holds=" << (check(theory, g).holds ? "true" : "false") << '\n'
                  << "ef_loss=" << loss.ef << '\n';
        for (auto [t, term] : loss.certificates)
            std::cout << "certificate_loss." << theory_name(t) << '=' << term << '\n';
        std::cout << "logical_loss=" << loss.total << '\n';
        return 0;
    }

    auto run_generate(const Options & o) -> int
    {
        auto theory = theory_of(o);
        auto bank = bank_for(theory, o.n, o);
        BuildOptions options;
        options.max_iters = o.iters;
        auto result = build(theory, o.n, bank, LossWeights::for_theory(theory), budget_of(o), options, Seed{o.seed});

        std::ostringstream trace;
        trace << "initial_loss=" << result.trace.initial_loss << '\n'
              << "final_loss=" << result.trace.final_loss << '\n'
              << "iterations=" << result.trace.iterations << '\n'
              << "rejected_flips=" << result.trace.rejected_flips << '\n'
              << "holds=" << (result.satisfies ? "true" : "false") << '\n';
        for (const auto & step : result.trace.steps) {
            trace << "step " << step.iteration << ' ' << (step.edit.kind == EditKind::add ? "add " : "remove ")
                  << step.edit.edge.u << ' ' << step.edit.edge.v << " loss=" << step.loss_after;
            if (step.witness)
                trace << " witness: " << step.witness->to_string();
            trace << '\n';
        }

        if (o.out.empty()) {
            write_graph(std::cout, result.graph);
            std::cout << trace.str();
        }
        else {
            std::ofstream graph_out(o.out);
            std::ofstream trace_out(o.out + ".trace");
            if (! graph_out || ! trace_out)
                throw std::invalid_argument("cannot write " + o.out);
            write_graph(graph_out, result.graph);
            trace_out << trace.str();
            std::cout << "wrote " << o.out << " and " << o.out << ".trace\n";
        }
        return 0;
    }

    auto run_probe(const Options & o) -> int
    {
        auto g = load(o.input);
        auto h = load(o.against);
        auto result = ef::approx_round_resilience(g, h, budget_of(o));
        std::cout << "r_hat=" << result.rounds << '\n'
                  << "timed_out=" << (result.timed_out ? "true" : "false") << '\n'
                  << "maps_expanded=" << result.maps_expanded << '\n';
        if (o.exact) {
            std::cout << "r_star=" << ef::exact_round_resilience(g, h, o.k) << '\n';
            if (auto witness = ef::spoiler_witness(g, h, o.k))
                std::cout << "spoiler: " << witness->to_string() << '\n';
        }
        return 0;
    }

    auto run_repro(const Options & o) -> int
    {
        std::string overrides;
        if (! o.config.empty()) {
            std::ifstream in(o.config);
            if (! in)
                throw std::invalid_argument("cannot read " + o.config);
            std::ostringstream text;
            text << in.rdbuf();
            overrides = text.str();
        }
        auto out = o.out.empty() ? std::string("results") : o.out;
        auto summary = run_all(Seed{o.seed}, out, o.quick, std::cout, overrides);
        return summary.all_pass() ? 0 : 1;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"logan: logic-bounded graph checking, scoring and generation"};
    app.require_subcommand(1);
    Options o;

    auto budget_flags = [&](CLI::App * sub) {
        sub->add_option("--k", o.k, "EF depth");
        sub->add_option("--budget-s", o.budget_s, "probe frontier width");
        sub->add_option("--budget-b", o.budget_b, "probe branch cap");
    };

    auto * check_cmd = app.add_subcommand("check", "run a property certificate on a graph file");
    check_cmd->add_option("--property", o.property)->required();
    check_cmd->add_option("input,--in", o.input, "graph file, '-' for stdin");

    auto * score_cmd = app.add_subcommand("score", "logical loss of a graph file");
    score_cmd->add_option("--property", o.property)->required();
    score_cmd->add_option("input,--in", o.input, "graph file, '-' for stdin");
    score_cmd->add_option("--seed", o.seed);
    score_cmd->add_option("--bank-size", o.bank_size);
    budget_flags(score_cmd);

    auto * generate_cmd = app.add_subcommand("generate", "build a graph for a property");
    generate_cmd->add_option("--property", o.property)->required();
    generate_cmd->add_option("--n", o.n);
    generate_cmd->add_option("--seed", o.seed);
    generate_cmd->add_option("--out", o.out, "graph file; the trace goes to <out>.trace");
    generate_cmd->add_option("--iters", o.iters);
    generate_cmd->add_option("--bank-size", o.bank_size);
    budget_flags(generate_cmd);

    auto * probe_cmd = app.add_subcommand("probe", "budgeted EF round-resilience between two graph files");
    probe_cmd->add_option("input,--in", o.input)->required();
    probe_cmd->add_option("against,--against", o.against)->required();
    probe_cmd->add_flag("--exact", o.exact, "also run the exact game and print a Spoiler strategy");
    budget_flags(probe_cmd);

    auto * repro_cmd = app.add_subcommand("repro", "run experiments 1-3 and check bands");
    repro_cmd->add_option("--seed", o.seed);
    repro_cmd->add_option("--out", o.out, "output directory");
    repro_cmd->add_flag("--quick", o.quick, "quarter sample counts, widen bands by 1.5");
    repro_cmd->add_option("--config", o.config, "key=value config file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check_cmd->parsed())
            return run_check(o);
        if (score_cmd->parsed())
            return run_score(o);
        if (generate_cmd->parsed())
            return run_generate(o);
        if (probe_cmd->parsed())
            return run_probe(o);
        if (repro_cmd->parsed())
            return run_repro(o);
    }
    catch (const std::exception & e) {
        std::cerr << "logan: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
