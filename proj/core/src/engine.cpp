#include "ivq/engine.hpp"

#include <algorithm>
#include <memory>

namespace ivq {

SolverStrategy alternate(SolverStrategy a, SolverStrategy b) {
    SolverStrategy out;
    out.name = a.name + "+" + b.name;
    out.verifier = a.verifier;
    out.k_bound = std::max(a.k_bound, b.k_bound);
    out.witness = [wa = std::move(a.witness), wb = std::move(b.witness)](std::span<const Area> areas,
                                                                          std::size_t iteration) {
        return iteration % 2 == 0 ? wa(areas, iteration / 2) : wb(areas, iteration / 2);
    };
    return out;
}

std::string to_string(Termination t) { return t == Termination::Solved ? "solved" : "budget-exceeded"; }

RunReport solve(const UncertainInstance& instance, Oracle& oracle, const SolverStrategy& strategy,
                std::size_t budget, const WitnessObserver& observer) {
    if (const auto check = validate_instance(instance); !check.ok()) {
        throw std::invalid_argument("invalid instance: " + check.str());
    }
    if (budget < 1) {
        throw std::invalid_argument("budget must be positive");
    }

    RunReport report;
    report.final_areas = instance.areas;
    report.counts.assign(instance.size(), 0);
    auto& areas = report.final_areas;

    auto verdict = strategy.verifier(areas);
    for (std::size_t iteration = 0; !verdict.resolved; ++iteration) {
        auto witness = strategy.witness(areas, iteration);
        std::sort(witness.begin(), witness.end());
        witness.erase(std::unique(witness.begin(), witness.end()), witness.end());
        if (witness.empty()) {
            throw StrategyError(strategy.name + " returned an empty witness set on an unresolved instance");
        }
        for (auto i : witness) {
            if (i >= areas.size()) {
                throw StrategyError(strategy.name + " returned out-of-range index " + std::to_string(i + 1));
            }
            if (areas[i].is_point()) {
                throw StrategyError(strategy.name + " asked to query point area " + std::to_string(i + 1));
            }
        }
        if (observer) observer(areas, report.counts, witness);
        report.witnesses.push_back(witness);

        for (auto i : witness) {
            if (report.total >= budget) {
                report.status = Termination::BudgetExceeded;
                return report;
            }
            const auto count = ++report.counts[i];
            auto response = oracle.respond(i, count, areas[i]);
            if (auto bad = validate_response(instance.model, areas[i], response)) {
                throw OracleViolation(oracle.name() + " on area " + std::to_string(i + 1) + ": " + bad->message);
            }
            areas[i] = response;
            report.queries.push_back({i, response});
            ++report.total;
            verdict = strategy.verifier(areas);
            if (verdict.resolved) break;
        }
    }
    report.status = Termination::Solved;
    report.answer = std::move(verdict.answer);
    return report;
}

std::size_t default_budget(const UncertainInstance& instance, const Oracle& oracle) {
    return 4 * std::max<std::size_t>(instance.size(), 1) * std::max<std::size_t>(oracle.refinement_hint(), 1);
}

}  // namespace ivq
