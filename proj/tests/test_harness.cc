#include <logan/harness.hh>
#include <logan/samplers.hh>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace logan;

namespace {
    auto scratch(const std::string & name) -> std::filesystem::path
    {
        auto dir = std::filesystem::temp_directory_path() / ("logan_test_" + name);
        std::filesystem::remove_all(dir);
        return dir;
    }

    auto slurp(const std::filesystem::path & p) -> std::string
    {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream out;
        out << in.rdbuf();
        return out.str();
    }
}

TEST(Config, DefaultsFollowPublishedSetups)
{
    auto e1 = ExperimentConfig::defaults(ExperimentId::exp1);
    EXPECT_EQ(e1.n_min, 6u);
    EXPECT_EQ(e1.n_max, 16u);
    EXPECT_EQ(e1.samples_per_size, 20u);
    auto e2 = ExperimentConfig::defaults(ExperimentId::exp2);
    EXPECT_EQ(e2.ks, (std::vector<int>{2, 3, 4, 5}));
    EXPECT_EQ(e2.n_max, 10u);
    auto e3 = ExperimentConfig::defaults(ExperimentId::exp3);
    EXPECT_EQ(e3.samples, 50u);
    EXPECT_EQ(e3.bank_size, 100u);
    EXPECT_EQ(e3.budget.k, 3);
    EXPECT_EQ(e3.budget.probes, 16u);
    EXPECT_EQ(e3.budget.branch, 4u);
    EXPECT_DOUBLE_EQ(e3.baseline_density, 0.25);
}

TEST(Config, KeyValueRoundTrip)
{
    auto config = ExperimentConfig::defaults(ExperimentId::exp2);
    config.seed = Seed{99};
    config.ks = {3, 4};
    config.budget.probes = 8;
    auto text = config_text(config);
    auto parsed = apply_config_text(ExperimentConfig::defaults(ExperimentId::exp2), text);
    EXPECT_EQ(config_text(parsed), text);
}

TEST(Config, PrefixedKeysAndComments)
{
    auto text = "# comment\n\nseed = 5\nexp2.ks = 2\nexp3.samples = 7\n";
    auto e2 = apply_config_text(ExperimentConfig::defaults(ExperimentId::exp2), text);
    EXPECT_EQ(e2.seed, Seed{5});
    EXPECT_EQ(e2.ks, (std::vector<int>{2}));
    EXPECT_EQ(e2.samples, 50u);
    auto e3 = apply_config_text(ExperimentConfig::defaults(ExperimentId::exp3), text);
    EXPECT_EQ(e3.samples, 7u);
}

TEST(Config, ErrorsAreReported)
{
    auto base = ExperimentConfig::defaults(ExperimentId::exp1);
    EXPECT_THROW(apply_config_text(base, "nope=1\n"), ConfigError);
    EXPECT_THROW(apply_config_text(base, "n_min=abc\n"), ConfigError);
    EXPECT_THROW(apply_config_text(base, "theories=moebius\n"), ConfigError);
    EXPECT_THROW(apply_config_text(base, "just a line\n"), ConfigError);
    EXPECT_THROW(apply_config_file(base, "/nonexistent/logan.cfg"), ConfigError);
    auto bad = base;
    bad.theories = {Theory::connected};
    EXPECT_THROW(bad.validate(), ConfigError);
}

TEST(Config, QuickQuarters)
{
    auto q = ExperimentConfig::defaults(ExperimentId::exp3).quartered();
    EXPECT_EQ(q.samples, 12u);
    EXPECT_TRUE(q.quick);
    EXPECT_EQ(ExperimentConfig::defaults(ExperimentId::exp1).quartered().samples_per_size, 5u);
}

TEST(Exp1, SmallRunIsPerfect)
{
    auto config = ExperimentConfig::defaults(ExperimentId::exp1);
    config.samples_per_size = 1;
    for (const auto & row : run_exp1(config)) {
        EXPECT_EQ(row.samples, 11u);
        EXPECT_EQ(row.pos_rate, 1.0);
        EXPECT_EQ(row.neg_rate, 1.0);
    }
}

TEST(Exp2, PrototypesClassifyThemselves)
{
    auto config = ExperimentConfig::defaults(ExperimentId::exp2);
    auto [positive, negative] = exp2_prototypes(config);
    std::vector<LabelledGraph> tests{{positive, true}, {negative, false}};
    for (const auto & row : run_exp2_on(config, positive, negative, tests))
        EXPECT_EQ(row.accuracy, 1.0) << "k=" << row.k;
}

TEST(Exp2, BalancedTestSet)
{
    auto tests = exp2_test_set(ExperimentConfig::defaults(ExperimentId::exp2));
    EXPECT_EQ(tests.size(), 100u);
    EXPECT_EQ(std::count_if(tests.begin(), tests.end(), [](const auto & t) { return t.positive; }), 50);
}

TEST(Exp3, UnperturbedFrameworkArmAlwaysSatisfies)
{
    auto config = ExperimentConfig::defaults(ExperimentId::exp3);
    config.perturb_fraction = 0.0;
    config.samples = 10;
    config.bank_size = 20;
    for (const auto & row : run_exp3(config))
        EXPECT_EQ(row.framework_sat, 1.0) << theory_name(row.theory);
}

TEST(Csv, SchemasAndFixedPrecision)
{
    std::ostringstream a, b, c;
    write_csv(a, std::vector<Exp1Row>{{Theory::tree, 6, 16, 220, 1.0, 1.0}});
    write_csv(b, std::vector<Exp2Row>{{2, 100, 0.5}});
    write_csv(c, std::vector<Exp3Row>{{Theory::bipartite, 50, 0.26, 0.98, 0.72, 0.0712345}});
    EXPECT_EQ(a.str(), "property,n_min,n_max,samples,pos_rate,neg_rate\ntree,6,16,220,1.0000,1.0000\n");
    EXPECT_EQ(b.str(), "k,samples,accuracy\n2,100,0.5000\n");
    EXPECT_EQ(c.str(), "property,samples,baseline_sat,framework_sat,improvement,discrimination\nbipartite,50,0.2600,0.9800,0.7200,0.0712\n");
}

TEST(Bands, WideningApplies)
{
    std::vector<Exp2Row> rows{{2, 100, 0.63}};
    EXPECT_FALSE(exp2_bands(rows, 1.0).front().pass);
    EXPECT_TRUE(exp2_bands(rows, 1.5).front().pass);
    std::vector<Exp3Row> three{{Theory::tree, 50, 0.06, 0.86, 0.80, 0.1}};
    for (const auto & b : exp3_bands(three, 1.0))
        EXPECT_TRUE(b.pass) << b.name;
    three.front().discrimination = -0.01;
    EXPECT_FALSE(exp3_bands(three, 1.0).back().pass);
}

TEST(RunAll, CreatesDirectoryAndIsDeterministic)
{
    auto a = scratch("a"), b = scratch("b");
    std::ostringstream log_a, log_b;
    auto sa = run_all(Seed{3}, a / "nested", true, log_a);
    auto sb = run_all(Seed{3}, b / "nested", true, log_b);
    ASSERT_EQ(sa.files.size(), 3u);
    for (std::size_t i = 0; i < sa.files.size(); ++i) {
        EXPECT_TRUE(std::filesystem::exists(sa.files[i]));
        EXPECT_EQ(slurp(sa.files[i]), slurp(sb.files[i]));
    }
    EXPECT_EQ(log_a.str(), log_b.str());
    std::filesystem::remove_all(a);
    std::filesystem::remove_all(b);
}
