#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ivq/area.hpp"
#include "ivq/instance.hpp"
#include "ivq/oracles.hpp"

namespace ivq {

/// Verifier outcome. `answer` holds one index for selection problems and the
/// tree edge set for spanning trees.
struct Verdict {
    bool resolved = false;
    IndexList answer;

    static Verdict unresolved() { return {}; }
    static Verdict solved(IndexList answer) { return {true, std::move(answer)}; }
};

using Verifier = std::function<Verdict(std::span<const Area>)>;

/// Returns the indices to query next; `iteration` counts engine rounds from 0.
using WitnessFn = std::function<IndexList(std::span<const Area>, std::size_t iteration)>;

struct SolverStrategy {
    std::string name;
    Verifier verifier;
    WitnessFn witness;
    std::size_t k_bound = 2;
};

/// Strategy whose witness call alternates a, b, a, b, ... across rounds.
/// Both must share one verifier; a's is kept.
SolverStrategy alternate(SolverStrategy a, SolverStrategy b);

enum class Termination { Solved, BudgetExceeded };
std::string to_string(Termination t);

struct QueryRecord {
    std::size_t index;
    Area response;
};

struct RunReport {
    Termination status = Termination::BudgetExceeded;
    IndexList answer;
    std::vector<QueryRecord> queries;
    std::vector<std::size_t> counts;
    std::size_t total = 0;
    AreaVector final_areas;
    std::vector<IndexList> witnesses;
};

/// The oracle answered with something the model does not allow.
class OracleViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A strategy emitted an empty witness set or tried to query a point.
class StrategyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Called once per round, before any member of `witness` is queried.
using WitnessObserver = std::function<void(std::span<const Area> areas, std::span<const std::size_t> counts,
                                           std::span<const std::size_t> witness)>;

/// Verify, pick a witness set, query its members in ascending index order,
/// repeat. The verifier is re-run after every single query so the loop stops
/// as soon as the instance is resolved.
RunReport solve(const UncertainInstance& instance, Oracle& oracle, const SolverStrategy& strategy,
                std::size_t budget, const WitnessObserver& observer = {});

/// 4 * n * (refinements the oracle expects per area).
std::size_t default_budget(const UncertainInstance& instance, const Oracle& oracle);

}  // namespace ivq
