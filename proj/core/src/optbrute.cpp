#include "ivq/optbrute.hpp"

#include <algorithm>
#include <numeric>

#include "ivq/mst.hpp"
#include "ivq/selection.hpp"

namespace ivq {

std::size_t total(const CountVector& counts) noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

BruteForce::BruteForce(const UncertainInstance& instance, const Oracle& oracle, Verifier verifier,
                       std::optional<SearchStart> start)
    : model_(instance.model), oracle_(oracle.clone()), verifier_(std::move(verifier)) {
    if (oracle.kind() == OracleKind::Adversary) {
        throw OracleRejected("adversary oracle " + oracle.name() + " is not update independent");
    }
    if (start) {
        start_ = std::move(*start);
        if (start_.areas.size() != instance.size()) throw std::invalid_argument("start state has the wrong size");
    } else {
        start_.areas = instance.areas;
    }
    start_.base_counts.resize(start_.areas.size(), 0);
    chains_.resize(size());
    closed_.assign(size(), false);
    for (std::size_t i = 0; i < size(); ++i) {
        chains_[i].push_back(start_.areas[i]);
        closed_[i] = start_.areas[i].is_point();
    }
}

std::size_t BruteForce::available(std::size_t i, std::size_t want) {
    auto& chain = chains_[i];
    while (chain.size() <= want && !closed_[i]) {
        const auto count = start_.base_counts[i] + chain.size();
        try {
            auto next = oracle_->respond(i, count, chain.back());
            if (auto bad = validate_response(model_, chain.back(), next)) {
                throw OracleViolation(oracle_->name() + " on area " + std::to_string(i + 1) + ": " + bad->message);
            }
            chain.push_back(next);
            closed_[i] = next.is_point();
        } catch (const OracleExhausted&) {
            closed_[i] = true;
        }
    }
    return std::min(want, chain.size() - 1);
}

AreaVector BruteForce::areas_after(const CountVector& counts) {
    AreaVector areas(size(), Area::point(0));
    for (std::size_t i = 0; i < size(); ++i) {
        if (available(i, counts[i]) < counts[i]) throw std::out_of_range("count exceeds the response chain");
        areas[i] = chains_[i][counts[i]];
    }
    return areas;
}

bool BruteForce::verifies(const CountVector& counts) { return verifier_(areas_after(counts)).resolved; }

template <typename Visit>
bool BruteForce::enumerate(std::size_t target, Visit&& visit) {
    CountVector counts(size(), 0);
    // Assigns counts[i..] summing to `left`, smaller leading counts first.
    auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> bool {
        if (i + 1 == size()) {
            if (available(i, left) < left) return false;
            counts[i] = left;
            const bool stop = visit(counts);
            counts[i] = 0;
            return stop;
        }
        const auto cap = available(i, left);
        for (std::size_t c = 0; c <= cap; ++c) {
            counts[i] = c;
            if (self(self, i + 1, left - c)) return true;
        }
        counts[i] = 0;
        return false;
    };
    if (size() == 0) return target == 0 && visit(counts);
    return rec(rec, 0, target);
}

OptResult BruteForce::opt(std::size_t max_total) {
    OptResult result;
    for (std::size_t t = 0; t <= max_total && !result.opt; ++t) {
        enumerate(t, [&](const CountVector& counts) {
            if (!verifies(counts)) return false;
            result.opt = t;
            result.vector = counts;
            return true;
        });
    }
    return result;
}

std::vector<CountVector> BruteForce::minimal_solutions(std::size_t max_total) {
    std::vector<CountVector> found;
    const auto dominates = [](const CountVector& v, const CountVector& s) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < s[i]) return false;
        }
        return true;
    };
    for (std::size_t t = 0; t <= max_total; ++t) {
        const auto before = found.size();
        enumerate(t, [&](const CountVector& counts) {
            for (std::size_t s = 0; s < before; ++s) {
                if (dominates(counts, found[s])) return false;
            }
            if (verifies(counts)) found.push_back(counts);
            return false;
        });
        if (t == 0 && !found.empty()) break;
    }
    return found;
}

Verifier verifier_for(const UncertainInstance& instance) {
    if (const auto* graph = std::get_if<MstProblem>(&instance.problem)) {
        return make_mst_strategy(*graph).verifier;
    }
    return selection_verifier(std::get<SelectionProblem>(instance.problem));
}

std::size_t default_max_total(const UncertainInstance& instance) {
    const bool points_only = instance.model.returns == TypeSet(TypeSet::kPoint);
    return (points_only ? 2 : 4) * instance.size();
}

OptResult opt_value(const UncertainInstance& instance, const Oracle& oracle, const Verifier& verifier,
                    std::size_t max_total, std::optional<SearchStart> start) {
    return BruteForce(instance, oracle, verifier, std::move(start)).opt(max_total);
}

std::vector<CountVector> minimal_solutions(const UncertainInstance& instance, const Oracle& oracle,
                                           const Verifier& verifier, std::size_t max_total,
                                           std::optional<SearchStart> start) {
    return BruteForce(instance, oracle, verifier, std::move(start)).minimal_solutions(max_total);
}

bool witness_check(std::span<const std::size_t> witness, std::span<const CountVector> solutions) {
    return std::all_of(solutions.begin(), solutions.end(), [&](const CountVector& s) {
        return std::any_of(witness.begin(), witness.end(), [&](std::size_t i) { return i < s.size() && s[i] > 0; });
    });
}

}  // namespace ivq
