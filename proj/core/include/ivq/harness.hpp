#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ivq/engine.hpp"
#include "ivq/instance.hpp"
#include "ivq/io.hpp"
#include "ivq/models.hpp"
#include "ivq/oracles.hpp"
#include "ivq/selection.hpp"

namespace ivq {

/// "min", "max", "kmin:K", "kmax:K" or "mst".
Problem parse_problem(const std::string& text, TieRule tie = TieRule::Stable);
std::string problem_str(const Problem& problem);

struct GeneratorParams {
    ModelSpec model;
    Problem problem = SelectionProblem{};
    std::size_t n = 5;              // areas, or edges for spanning trees
    std::size_t vertices = 0;       // spanning trees only; 0 picks about n/2 + 1
    std::int64_t block_width = 10;  // even; areas live on a grid of blocks this wide
    double overlap = 0.5;           // chance that an area reaches into later blocks
    double point_fraction = 0.0;    // chance of a point area; needs P in the input set
    bool tie_prone = false;         // hidden values on the integer grid instead of general position
};

/// Deterministic in (params, seed). Throws ConfigError on infeasible params.
UncertainInstance generate_instance(const GeneratorParams& params, std::uint64_t seed);

/// Seed for trial `trial` of an experiment seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// Names accepted by `fixture_instance` and by oracle specs.
const std::vector<std::string>& fixture_names();

/// Instance matching a named adversary. `size` is n for min-tight and
/// cp-anomaly, k for kmin-point, and ignored for opo-counter.
UncertainInstance fixture_instance(const std::string& name, std::size_t size, bool variant = false);

/// "exact", "halve", "halve:P/Q", "script:PATH", or a fixture name. Ground
/// truth needs the instance's hidden values.
std::unique_ptr<Oracle> make_oracle(const std::string& spec, const UncertainInstance& instance);

/// Selection algorithms by name, or "mst" / "mst-lex" for spanning trees.
SolverStrategy make_strategy(const std::string& algorithm, const UncertainInstance& instance,
                             const StrategyOptions& options = {});

/// Largest query total the algorithm is allowed against `opt`, or nothing when
/// no bound applies. `fixture_opt` marks an OPT taken from an adversary
/// fixture rather than searched with the algorithm's own verifier.
std::optional<std::size_t> query_bound(const std::string& algorithm, const UncertainInstance& instance,
                                       std::size_t opt, bool fixture_opt = false);

struct ExperimentConfig {
    std::string algorithm = "min1-witness";
    GeneratorParams generator;
    std::size_t n_min = 0;  // when nonzero, each trial draws n from [n_min, generator.n]
    std::string oracle = "exact";
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::optional<std::size_t> budget;
    std::optional<std::size_t> max_total;
    std::size_t threads = 0;  // 0 uses the hardware concurrency
    std::string output;       // ".json" selects JSON, anything else CSV

    static ExperimentConfig from_json(const Json& j);
    [[nodiscard]] Json to_json() const;
};

struct TrialRecord {
    std::size_t trial = 0;
    std::string algorithm;
    std::string model;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t queries = 0;
    std::size_t opt = 0;
    std::string status;  // ok, bound-violated, budget-exceeded, opt-unknown

    /// queries / max(opt, 1), rounded to six decimals.
    [[nodiscard]] double ratio() const;
    [[nodiscard]] long long gap() const { return static_cast<long long>(queries) - static_cast<long long>(opt); }

    friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct CompeteReport {
    std::vector<TrialRecord> records;
    std::string opt_source;  // "brute-force", "fixture" or "brute-force-opt-facing"
    double max_ratio = 0;
    long long max_gap = 0;
    std::size_t violations = 0;
    std::size_t budget_exceeded = 0;

    [[nodiscard]] bool ok() const noexcept { return violations == 0; }
};

/// Runs every trial, each with its own instance and oracle, and aggregates.
/// Throws ConfigError for invalid algorithm, model and oracle combinations.
CompeteReport compete(const ExperimentConfig& config);

/// Runs a single trial of `config`; `compete` is the parallel map of this.
TrialRecord run_trial(const ExperimentConfig& config, std::size_t trial);

enum class ReportFormat { Csv, Json };

std::string report_emit(const std::vector<TrialRecord>& records, ReportFormat format);
std::string report_emit(const CompeteReport& report, const ExperimentConfig& config, ReportFormat format);
std::vector<TrialRecord> records_from_csv(const std::string& text);
std::vector<TrialRecord> records_from_json(const Json& j);

}  // namespace ivq
