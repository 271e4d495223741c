#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "ivq/harness.hpp"
#include "ivq/io.hpp"
#include "ivq/mst.hpp"
#include "ivq/optbrute.hpp"
#include "support/helpers.hpp"

using namespace ivq;
namespace fs = std::filesystem;

namespace {

ExperimentConfig config_for(const std::string& algorithm, const std::string& model, const std::string& problem,
                            std::size_t n, const std::string& oracle, std::size_t trials = 1) {
    ExperimentConfig c;
    c.algorithm = algorithm;
    c.generator.model = ModelSpec::parse(model);
    c.generator.problem = parse_problem(problem);
    c.generator.n = n;
    c.oracle = oracle;
    c.trials = trials;
    c.threads = 1;
    return c;
}

TrialRecord record(std::size_t trial, std::size_t queries, std::size_t opt) {
    return {trial, "kmin-witness", "OC-OC", 6, 2, queries, opt, "ok"};
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("ivq_harness_" + std::to_string(::getpid()))) {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    [[nodiscard]] fs::path file(const std::string& name) const { return path_ / name; }

private:
    fs::path path_;
};

}  // namespace

TEST(Generator, SameSeedSameInstance) {
    GeneratorParams params;
    params.model = ModelSpec::parse("OCP-P");
    params.problem = SelectionProblem{2};
    params.n = 7;
    params.point_fraction = 0.3;
    const auto a = generate_instance(params, 99);
    const auto b = generate_instance(params, 99);
    EXPECT_EQ(a.areas, b.areas);
    EXPECT_EQ(a.hidden, b.hidden);
    EXPECT_NE(generate_instance(params, 100).areas, a.areas);
}

TEST(Generator, RespectsTheInputSet) {
    GeneratorParams params;
    params.model = ModelSpec::parse("O-O");
    params.n = 12;
    params.overlap = 0.9;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto inst = generate_instance(params, seed);
        ASSERT_EQ(inst.size(), 12u);
        for (std::size_t i = 0; i < inst.size(); ++i) {
            EXPECT_FALSE(inst.areas[i].is_point());
            EXPECT_EQ(inst.areas[i].lo_kind(), EndpointKind::Open);
            EXPECT_EQ(inst.areas[i].hi_kind(), EndpointKind::Open);
            EXPECT_TRUE(inst.areas[i].contains_value((*inst.hidden)[i]));
        }
    }
}

TEST(Generator, NoOverlapMeansNothingToQuery) {
    GeneratorParams params;
    params.model = ModelSpec::parse("OP-P");
    params.problem = SelectionProblem{3};
    params.n = 6;
    params.overlap = 0.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto inst = generate_instance(params, seed);
        GroundTruthOracle oracle(ExactPolicy{}, inst.model.returns, *inst.hidden);
        EXPECT_EQ(opt_value(inst, oracle, verifier_for(inst), 4).opt, 0u);
    }
}

TEST(Generator, SpanningTreesAreConnected) {
    GeneratorParams params;
    params.model = ModelSpec::parse("OP-P");
    params.problem = MstProblem{};
    params.n = 9;
    const auto inst = generate_instance(params, 5);
    EXPECT_NO_THROW(check_graph(std::get<MstProblem>(inst.problem)));
    EXPECT_EQ(std::get<MstProblem>(inst.problem).edges.size(), 9u);
}

TEST(Generator, RejectsInfeasibleParameters) {
    GeneratorParams params;
    params.model = ModelSpec::parse("O-O");
    params.point_fraction = 0.5;
    EXPECT_THROW(generate_instance(params, 1), ConfigError);
    params.point_fraction = 0;
    params.n = 0;
    EXPECT_THROW(generate_instance(params, 1), ConfigError);
    params.n = 4;
    params.block_width = 7;
    EXPECT_THROW(generate_instance(params, 1), ConfigError);
    params.block_width = 10;
    params.problem = SelectionProblem{5};
    EXPECT_THROW(generate_instance(params, 1), ConfigError);
    params.problem = SelectionProblem{1};
    params.model = ModelSpec::parse("P-P");
    EXPECT_THROW(generate_instance(params, 1), ConfigError);
}

TEST(Problems, ParseAndPrint) {
    for (const auto* text : {"min", "max", "kmin:3", "kmax:2", "mst"}) {
        EXPECT_EQ(problem_str(parse_problem(text)), text);
    }
    EXPECT_EQ(std::get<SelectionProblem>(parse_problem("kmax:2")).objective, Objective::KthMax);
    EXPECT_THROW(parse_problem("kmin:0"), ConfigError);
    EXPECT_THROW(parse_problem("kmin:x"), ConfigError);
    EXPECT_THROW(parse_problem("median"), ConfigError);
}

TEST(TrialSeed, DistinctPerTrialAndStable) {
    EXPECT_EQ(trial_seed(7, 3), trial_seed(7, 3));
    EXPECT_NE(trial_seed(7, 3), trial_seed(7, 4));
    EXPECT_NE(trial_seed(7, 3), trial_seed(8, 3));
}

TEST(Compete, TightExampleHitsRatioTwo) {
    auto c = config_for("min1-witness", "O-O", "min", 5, "min-tight", 2);
    const auto report = compete(c);
    ASSERT_EQ(report.records.size(), 2u);
    for (const auto& r : report.records) {
        EXPECT_EQ(r.queries, 10u);
        EXPECT_EQ(r.opt, 5u);
        EXPECT_DOUBLE_EQ(r.ratio(), 2.0);
        EXPECT_EQ(r.status, "ok");
    }
    EXPECT_EQ(report.opt_source, "fixture");
    EXPECT_TRUE(report.ok());
}

TEST(Compete, BypassOnTheLowerBoundFixtureCostsK) {
    auto c = config_for("kmin-bypass", "OP-P", "kmin:3", 1, "kmin-point");
    const auto report = compete(c);
    ASSERT_EQ(report.records.size(), 1u);
    EXPECT_EQ(report.records[0].queries, 3u);
    EXPECT_EQ(report.records[0].opt, 1u);
    EXPECT_EQ(report.records[0].k, 3u);
}

TEST(Compete, UnboundedCombinationsAreReportedOnly) {
    const auto report = compete(config_for("min1-witness", "CP-P", "min", 4, "cp-anomaly"));
    EXPECT_EQ(report.records[0].queries, 4u);
    EXPECT_EQ(report.records[0].opt, 1u);
    EXPECT_EQ(report.records[0].status, "ok");
}

TEST(Compete, ExhaustedBudgetCountsAsAViolation) {
    auto c = config_for("min1-witness", "O-O", "min", 4, "min-tight");
    c.budget = 3;
    const auto report = compete(c);
    EXPECT_EQ(report.records[0].status, "budget-exceeded");
    EXPECT_EQ(report.budget_exceeded, 1u);
    EXPECT_FALSE(report.ok());
}

TEST(Compete, ResultsIgnoreTheThreadCount) {
    auto c = config_for("kmin-witness", "OC-OC", "kmin:2", 5, "halve", 12);
    c.n_min = 3;
    c.generator.overlap = 0.8;
    const auto one = compete(c);
    c.threads = 4;
    const auto four = compete(c);
    EXPECT_EQ(one.records, four.records);
    for (const auto& r : one.records) {
        EXPECT_GE(r.n, 3u);
        EXPECT_LE(r.n, 5u);
    }
}

TEST(Compete, RejectsInvalidConfigurations) {
    EXPECT_THROW(compete(config_for("min1-bypass", "OP-O", "min", 4, "halve")), ConfigError);
    EXPECT_THROW(compete(config_for("min1-witness", "OP-P", "min", 4, "min-tight")), ConfigError);
    EXPECT_THROW(compete(config_for("mst", "OP-P", "min", 4, "exact")), ConfigError);
    EXPECT_THROW(compete(config_for("min1-witness", "OP-P", "min", 4, "exact", 0)), ConfigError);
}

TEST(QueryBound, Table) {
    const auto op_p = ivq::testing::selection_instance(ivq::testing::As({"(0,2)", "(1,3)", "(2,4)", "(3,5)"}),
                                                       "OP-P", 3);
    const auto min1 = ivq::testing::selection_instance(op_p.areas, "OP-P");
    const auto opop = ivq::testing::selection_instance(op_p.areas, "OP-OP", 3);
    EXPECT_EQ(query_bound("min1-witness", min1, 4), 8u);
    EXPECT_EQ(query_bound("min1-bypass", min1, 4), 5u);
    EXPECT_EQ(query_bound("kmin-witness", op_p, 4), 8u);
    EXPECT_EQ(query_bound("kmin-bypass", op_p, 4), 5u);
    EXPECT_EQ(query_bound("opop-alternate", opop, 4), 14u);
    EXPECT_EQ(query_bound("kmin-witness", op_p, 1, true), std::nullopt);
    EXPECT_EQ(query_bound("min1-witness", min1, 1, true), 2u);
}

TEST(MakeOracle, SpecsAndFixtureChecks) {
    auto inst = min_tight_instance(3);
    EXPECT_EQ(make_oracle("min-tight", inst)->kind(), OracleKind::Adversary);
    EXPECT_THROW(make_oracle("exact", inst), ConfigError);
    EXPECT_THROW(make_oracle("kmin-point", inst), ConfigError);
    EXPECT_THROW(make_oracle("nonsense", inst), ConfigError);

    inst.hidden = ivq::testing::Rs({"1", "2", "3", "4"});
    EXPECT_THROW(make_oracle("exact", inst), ConfigError);
    EXPECT_NO_THROW(make_oracle("halve", inst));
    EXPECT_NO_THROW(make_oracle("halve:1/3", inst));
    EXPECT_THROW(make_oracle("halve:3/2", inst), ConfigError);
    EXPECT_THROW(make_oracle("halve:x", inst), ConfigError);

    EXPECT_NO_THROW(make_oracle("kmin-point", kmin_point_instance(2)));
    EXPECT_NO_THROW(make_oracle("opo-counter", fixture_instance("opo-counter", 0)));
    EXPECT_THROW(fixture_instance("nope", 3), ConfigError);
}

TEST(Reports, EmptyCsvIsJustTheHeader) {
    EXPECT_EQ(report_emit({}, ReportFormat::Csv), "trial,algorithm,model,n,k,queries,opt,ratio,gap,status\n");
}

TEST(Reports, OneRecordCsv) {
    EXPECT_EQ(report_emit({record(0, 3, 2)}, ReportFormat::Csv),
              "trial,algorithm,model,n,k,queries,opt,ratio,gap,status\n"
              "0,kmin-witness,OC-OC,6,2,3,2,1.500000,1,ok\n");
    EXPECT_DOUBLE_EQ(record(0, 3, 0).ratio(), 3.0);
    EXPECT_DOUBLE_EQ(record(0, 2, 3).ratio(), 0.666667);
}

TEST(Reports, JsonCsvJsonRoundTrip) {
    const std::vector<TrialRecord> records{record(0, 3, 2), record(1, 0, 0), record(2, 7, 3)};
    const auto json = report_emit(records, ReportFormat::Json);
    const auto from_json = records_from_json(Json::parse(json));
    EXPECT_EQ(from_json, records);
    const auto csv = report_emit(from_json, ReportFormat::Csv);
    const auto from_csv = records_from_csv(csv);
    EXPECT_EQ(from_csv, records);
    EXPECT_EQ(report_emit(from_csv, ReportFormat::Json), json);
}

TEST(Reports, CsvReaderRejectsBadRows) {
    EXPECT_THROW(records_from_csv("trial,queries\n"), IoError);
    const std::string header = "trial,algorithm,model,n,k,queries,opt,ratio,gap,status\n";
    EXPECT_THROW(records_from_csv(header + "0,kmin-witness,OC-OC,6,2,3,2,9.000000,1,ok\n"), IoError);
    EXPECT_THROW(records_from_csv(header + "0,kmin-witness,OC-OC,6,2,3\n"), IoError);
}

TEST(Reports, CompeteJsonCarriesConfigAndSummary) {
    const auto c = config_for("min1-witness", "O-O", "min", 3, "min-tight", 2);
    const auto report = compete(c);
    const auto j = Json::parse(report_emit(report, c, ReportFormat::Json));
    EXPECT_EQ(j["config"], c.to_json());
    EXPECT_EQ(j["opt_source"], "fixture");
    EXPECT_EQ(j["summary"]["trials"], 2);
    EXPECT_EQ(j["summary"]["max_ratio"], 2.0);
    EXPECT_EQ(records_from_json(j), report.records);
}

TEST(ExperimentConfigJson, RoundTrip) {
    auto c = config_for("kmin-bypass", "OCP-P", "kmin:2", 8, "exact", 30);
    c.n_min = 4;
    c.generator.point_fraction = 0.25;
    c.budget = 40;
    c.seed = 1234;
    const auto back = ExperimentConfig::from_json(c.to_json());
    EXPECT_EQ(back.to_json(), c.to_json());
    EXPECT_EQ(back.budget, 40u);
    EXPECT_EQ(back.max_total, std::nullopt);
    EXPECT_THROW(ExperimentConfig::from_json(Json{{"model", "O-O"}}), ConfigError);
    EXPECT_THROW(ExperimentConfig::from_json(Json{{"algorithm", "min1-witness"}, {"model", "Q-O"}}), ConfigError);
}

TEST(Io, InstanceRoundTrip) {
    for (const auto& inst : {min_tight_instance(4), kmin_point_instance(3), cp_anomaly_instance(3)}) {
        const auto back = instance_from_json(Json::parse(dump(to_json(inst))));
        EXPECT_EQ(back.areas, inst.areas);
        EXPECT_EQ(back.model, inst.model);
        EXPECT_EQ(problem_str(back.problem), problem_str(inst.problem));
    }
    GeneratorParams params;
    params.model = ModelSpec::parse("OP-P");
    params.problem = MstProblem{};
    params.n = 8;
    const auto graph = generate_instance(params, 3);
    const auto back = instance_from_json(to_json(graph));
    EXPECT_EQ(back.areas, graph.areas);
    EXPECT_EQ(back.hidden, graph.hidden);
    EXPECT_EQ(std::get<MstProblem>(back.problem).edges, std::get<MstProblem>(graph.problem).edges);
}

TEST(Io, FileErrorsNameThePath) {
    const fs::path missing = fs::temp_directory_path() / "ivq_no_such_dir" / "input.json";
    try {
        read_json_file(missing);
        FAIL() << "no exception";
    } catch (const IoError& e) {
        EXPECT_NE(std::string(e.what()).find(missing.string()), std::string::npos);
    }
}

#ifdef IVQ_CLI_PATH

namespace {

int run_cli(const std::string& args) {
    const std::string command = std::string(IVQ_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void write_config(const fs::path& path, const ExperimentConfig& c) { write_text_file(path, dump(c.to_json())); }

}  // namespace

TEST(Cli, ExitCodes) {
    TempDir dir;
    const auto inst = dir.file("inst.json");
    const auto out = dir.file("out.json");
    EXPECT_EQ(run_cli("gen --model OP-P --problem kmin:2 --n 6 --seed 4 --out " + inst.string()), 0);
    ASSERT_TRUE(fs::exists(inst));
    EXPECT_EQ(run_cli("solve --instance " + inst.string() + " --algorithm kmin-witness --oracle exact --out " + out.string()), 0);
    EXPECT_EQ(read_json_file(out)["status"], "solved");
    EXPECT_EQ(run_cli("opt --instance " + inst.string() + " --oracle exact --out " + out.string()), 0);
    EXPECT_EQ(run_cli("solve --instance " + inst.string() + " --algorithm min1-bypass --oracle exact"), 3);
    EXPECT_EQ(run_cli("solve --instance " + dir.file("missing.json").string() + " --algorithm kmin-witness --oracle exact"), 1);

    const auto good = dir.file("good.json");
    write_config(good, config_for("min1-witness", "O-O", "min", 4, "min-tight", 2));
    const auto csv = dir.file("report.csv");
    EXPECT_EQ(run_cli("compete --config " + good.string() + " --out " + csv.string()), 0);
    EXPECT_EQ(records_from_csv(read_text_file(csv)).size(), 2u);

    const auto violated = dir.file("violated.json");
    auto starved = config_for("min1-witness", "O-O", "min", 4, "min-tight");
    starved.budget = 3;
    write_config(violated, starved);
    EXPECT_EQ(run_cli("compete --config " + violated.string()), 2);

    const auto invalid = dir.file("invalid.json");
    write_config(invalid, config_for("min1-bypass", "OP-O", "min", 4, "halve"));
    EXPECT_EQ(run_cli("compete --config " + invalid.string()), 3);

    EXPECT_EQ(run_cli("fixtures --name min-tight --size 3 --out " + dir.file("fx.json").string()), 0);
    EXPECT_EQ(run_cli("fixtures --name nope --size 3"), 3);
    EXPECT_EQ(run_cli("gen --model OP-P --n zero"), 3);
    EXPECT_EQ(run_cli("--help"), 0);
}

#endif
