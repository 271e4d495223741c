// ivq: solve, brute-force, generate and compare interval-query instances.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ivq/harness.hpp"
#include "ivq/io.hpp"
#include "ivq/mst.hpp"
#include "ivq/optbrute.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitBoundViolated = 2;
constexpr int kExitInvalidConfig = 3;

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        ivq::write_text_file(path, text);
    }
}

int run_solve(const std::string& instance_path, const std::string& algorithm, const std::string& oracle_spec,
              std::optional<std::size_t> budget, const std::string& out) {
    const auto instance = ivq::instance_from_json(ivq::read_json_file(instance_path));
    auto oracle = ivq::make_oracle(oracle_spec, instance);
    ivq::StrategyOptions options;
    options.allow_unbounded_category3 = oracle_spec == "cp-anomaly";
    const auto strategy = ivq::make_strategy(algorithm, instance, options);
    const auto report =
        ivq::solve(instance, *oracle, strategy, budget.value_or(ivq::default_budget(instance, *oracle)));
    auto j = ivq::to_json(report, instance.is_mst());
    if (instance.is_mst() && report.status == ivq::Termination::Solved) {
        j["red_rule_count"] =
            ivq::mst_pass(std::get<ivq::MstProblem>(instance.problem), report.final_areas).answer.red_rule_count;
    }
    emit(ivq::dump(j), out);
    return report.status == ivq::Termination::Solved ? kExitOk : kExitFailed;
}

int run_opt(const std::string& instance_path, const std::string& oracle_spec, std::optional<std::size_t> max_total,
            const std::string& out) {
    const auto instance = ivq::instance_from_json(ivq::read_json_file(instance_path));
    const auto oracle = ivq::make_oracle(oracle_spec, instance);
    if (oracle->kind() == ivq::OracleKind::Adversary) {
        throw ivq::ConfigError("adversary oracles have fixture OPT values only; use a ground-truth or script oracle");
    }
    ivq::BruteForce search(instance, *oracle, ivq::verifier_for(instance));
    const auto limit = max_total.value_or(ivq::default_max_total(instance));
    const auto best = search.opt(limit);
    const auto minimal = search.minimal_solutions(limit);

    ivq::Json j;
    j["opt"] = best.opt ? ivq::Json(*best.opt) : ivq::Json(nullptr);
    ivq::Json vector = ivq::Json::object();
    for (std::size_t i = 0; i < best.vector.size(); ++i) {
        if (best.vector[i] > 0) vector[std::to_string(i + 1)] = best.vector[i];
    }
    j["vector"] = best.opt ? vector : ivq::Json(nullptr);
    j["minimal_count"] = minimal.size();
    emit(ivq::dump(j), out);
    return best.opt ? kExitOk : kExitFailed;
}

int run_compete(const std::string& config_path, const std::string& out_override) {
    auto config = ivq::ExperimentConfig::from_json(ivq::read_json_file(config_path));
    if (!out_override.empty()) config.output = out_override;
    const auto report = ivq::compete(config);
    const bool json = config.output.size() >= 5 && config.output.ends_with(".json");
    emit(ivq::report_emit(report, config, json ? ivq::ReportFormat::Json : ivq::ReportFormat::Csv), config.output);
    std::cerr << config.algorithm << " on " << config.generator.model.str() << ": " << report.records.size()
              << " trials, max ratio " << report.max_ratio << ", max gap " << report.max_gap << ", "
              << report.violations << " violations (OPT from " << report.opt_source << ")\n";
    return report.ok() ? kExitOk : kExitBoundViolated;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Query-competitive selection and spanning trees over areas of uncertainty"};
    app.require_subcommand(1);

    std::string instance_path, algorithm, oracle_spec = "exact", out, config_path, model, problem = "min",
                                          tie_rule = "stable", fixture;
    std::optional<std::size_t> budget, max_total;
    std::size_t n = 5, vertices = 0, size = 3;
    std::uint64_t seed = 1;
    double overlap = 0.5, point_fraction = 0.0;
    bool tie_prone = false, variant = false;

    auto* solve = app.add_subcommand("solve", "Run one algorithm on an instance");
    solve->add_option("--instance", instance_path, "Instance JSON")->required();
    solve->add_option("--algorithm", algorithm, "min1-witness, kmin-witness, min1-bypass, kmin-bypass, min1-lex, "
                                                "kmin-lex, opop-alternate, mst or mst-lex")
        ->required();
    solve->add_option("--oracle", oracle_spec, "exact, halve[:P/Q], script:PATH or a fixture name")->required();
    solve->add_option("--budget", budget, "Query budget");
    solve->add_option("--out", out, "Run report path (default stdout)");

    auto* opt = app.add_subcommand("opt", "Brute-force OPT and the minimal solutions");
    opt->add_option("--instance", instance_path, "Instance JSON")->required();
    opt->add_option("--oracle", oracle_spec, "exact, halve[:P/Q] or script:PATH")->required();
    opt->add_option("--max-total", max_total, "Largest query total searched");
    opt->add_option("--out", out, "Output path (default stdout)");

    auto* gen = app.add_subcommand("gen", "Generate a seeded instance");
    gen->add_option("--model", model, "Model such as OP-P")->required();
    gen->add_option("--problem", problem, "min, max, kmin:K, kmax:K or mst");
    gen->add_option("--n", n, "Areas, or edges for mst");
    gen->add_option("--seed", seed, "Seed");
    gen->add_option("--out", out, "Instance path (default stdout)");
    gen->add_option("--vertices", vertices, "Vertices for mst (default n/2 + 1)");
    gen->add_option("--overlap", overlap, "Overlap density in [0, 1]");
    gen->add_option("--point-fraction", point_fraction, "Share of point areas in [0, 1]");
    gen->add_option("--tie-rule", tie_rule, "stable or lex")->check(CLI::IsMember({"stable", "lex"}));
    gen->add_flag("--tie-prone", tie_prone, "Hidden values on the integer grid");

    auto* compete = app.add_subcommand("compete", "Run an experiment and check its bound");
    compete->add_option("--config", config_path, "Experiment config JSON")->required();
    compete->add_option("--out", out, "Report path; .json selects JSON");

    auto* fixtures = app.add_subcommand("fixtures", "Write a named adversary fixture instance");
    fixtures->add_option("--name", fixture, "min-tight, kmin-point, cp-anomaly or opo-counter")
        ->required()
        ->check(CLI::IsMember(ivq::fixture_names()));
    fixtures->add_option("--size", size, "n for min-tight and cp-anomaly, k for kmin-point");
    fixtures->add_flag("--variant", variant, "min-tight: a0 last; kmin-point: interval returns");
    fixtures->add_option("--out", out, "Instance path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInvalidConfig;
    }

    try {
        if (*solve) return run_solve(instance_path, algorithm, oracle_spec, budget, out);
        if (*opt) return run_opt(instance_path, oracle_spec, max_total, out);
        if (*compete) return run_compete(config_path, out);
        if (*gen) {
            ivq::GeneratorParams params;
            params.model = ivq::ModelSpec::parse(model);
            params.problem = ivq::parse_problem(problem, ivq::tie_rule_from_string(tie_rule));
            params.n = n;
            params.vertices = vertices;
            params.overlap = overlap;
            params.point_fraction = point_fraction;
            params.tie_prone = tie_prone;
            if (auto* graph = std::get_if<ivq::MstProblem>(&params.problem);
                graph != nullptr && ivq::classify_model(params.model) == ivq::ModelCategory::Category3) {
                graph->lex = true;
            }
            emit(ivq::dump(ivq::to_json(ivq::generate_instance(params, seed))), out);
            return kExitOk;
        }
        if (*fixtures) {
            emit(ivq::dump(ivq::to_json(ivq::fixture_instance(fixture, size, variant))), out);
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return kExitInvalidConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitFailed;
}
