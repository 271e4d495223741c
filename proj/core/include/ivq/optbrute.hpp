#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ivq/engine.hpp"
#include "ivq/instance.hpp"
#include "ivq/oracles.hpp"

namespace ivq {

/// Per-index query counts; a solution in multiset form.
using CountVector = std::vector<std::size_t>;

std::size_t total(const CountVector& counts) noexcept;

/// State the search starts from: areas after `base_counts` earlier queries.
struct SearchStart {
    AreaVector areas;
    std::vector<std::size_t> base_counts;
};

struct OptResult {
    /// Empty when no vector of total <= max_total verifies.
    std::optional<std::size_t> opt;
    CountVector vector;
};

/// Exhaustive search over count vectors for an update-independent oracle.
///
/// The response chain of each index is produced lazily from a private copy of
/// the oracle. A chain ends at a point or where a scripted oracle runs dry.
class BruteForce {
public:
    /// Throws OracleRejected for adversaries.
    BruteForce(const UncertainInstance& instance, const Oracle& oracle, Verifier verifier,
               std::optional<SearchStart> start = std::nullopt);

    /// Smallest verifying total, with the lexicographically smallest vector
    /// attaining it.
    OptResult opt(std::size_t max_total);

    /// Every inclusion-minimal verifying vector of total <= max_total, in
    /// order of total and then lexicographically.
    std::vector<CountVector> minimal_solutions(std::size_t max_total);

    /// Areas after applying `counts` on top of the start state.
    AreaVector areas_after(const CountVector& counts);

    bool verifies(const CountVector& counts);

    [[nodiscard]] std::size_t size() const noexcept { return start_.areas.size(); }

private:
    // Number of further queries index i admits, capped at `want`.
    std::size_t available(std::size_t i, std::size_t want);

    template <typename Visit>
    bool enumerate(std::size_t total, Visit&& visit);

    ModelSpec model_;
    std::unique_ptr<Oracle> oracle_;
    Verifier verifier_;
    SearchStart start_;
    std::vector<AreaVector> chains_;  // chains_[i][c] = area after c more queries
    std::vector<bool> closed_;
};

/// The verifier of the instance's own problem.
Verifier verifier_for(const UncertainInstance& instance);

/// 2n when queries return points only, 4n otherwise.
std::size_t default_max_total(const UncertainInstance& instance);

OptResult opt_value(const UncertainInstance& instance, const Oracle& oracle, const Verifier& verifier,
                    std::size_t max_total, std::optional<SearchStart> start = std::nullopt);

std::vector<CountVector> minimal_solutions(const UncertainInstance& instance, const Oracle& oracle,
                                           const Verifier& verifier, std::size_t max_total,
                                           std::optional<SearchStart> start = std::nullopt);

/// True iff every solution has a positive count on some member of `witness`.
bool witness_check(std::span<const std::size_t> witness, std::span<const CountVector> solutions);

}  // namespace ivq
