#include "ivq/selection.hpp"

#include <string>

namespace ivq {

namespace {

IndexList drop_points(std::span<const Area> areas, IndexList candidates) {
    std::erase_if(candidates, [&](std::size_t i) { return areas[i].is_point(); });
    return candidates;
}

IndexList heads(std::span<const Area> areas, std::span<const std::size_t> subset, TieRule tie, std::size_t count) {
    auto order = order_l(areas, subset, tie);
    if (order.size() > count) order.resize(count);
    return drop_points(areas, std::move(order));
}

bool separated(std::span<const Area> areas, std::span<const std::size_t> low, std::span<const std::size_t> high,
               TieRule tie) {
    for (auto i : low) {
        for (auto j : high) {
            if (!surely_before(areas, i, j, tie)) return false;
        }
    }
    return true;
}

void check_k(std::size_t k, std::size_t n) {
    if (k < 1 || k > n) {
        throw std::out_of_range("k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
    }
}

}  // namespace

bool surely_before(std::span<const Area> areas, std::size_t i, std::size_t j, TieRule tie) {
    if (tie == TieRule::Lex && j < i) {
        return surely_lt(areas[i], areas[j]);
    }
    return surely_leq(areas[i], areas[j]);
}

std::optional<std::size_t> kmin_verifier(std::span<const Area> areas, std::size_t k, TieRule tie) {
    check_k(k, areas.size());
    const auto order = order_l(areas, all_indices(areas.size()), tie);
    const auto pk = order[k - 1];
    for (std::size_t t = 0; t < order.size(); ++t) {
        if (t + 1 < k && !surely_before(areas, order[t], pk, tie)) return std::nullopt;
        if (t + 1 > k && !surely_before(areas, pk, order[t], tie)) return std::nullopt;
    }
    return pk;
}

std::optional<std::size_t> min1_verifier(std::span<const Area> areas, TieRule tie) {
    return kmin_verifier(areas, 1, tie);
}

IndexList min1_witness(std::span<const Area> areas, TieRule tie) {
    return heads(areas, all_indices(areas.size()), tie, 2);
}

IndexList kmin_witness(std::span<const Area> areas, std::size_t k, TieRule tie) {
    check_k(k, areas.size());
    const auto order = order_l(areas, all_indices(areas.size()), tie);
    const std::span<const std::size_t> lower(order.data(), k - 1);
    const std::span<const std::size_t> rest(order.data() + (k - 1), order.size() - (k - 1));
    if (separated(areas, lower, rest, tie)) {
        return heads(areas, rest, tie, 2);
    }
    const auto q = order_u(areas, lower, tie).back();
    return drop_points(areas, {order[k - 1], q});
}

IndexList min1_bypass_witness(std::span<const Area> areas) {
    return heads(areas, all_indices(areas.size()), TieRule::Stable, 1);
}

IndexList kmin_bypass_witness(std::span<const Area> areas, std::size_t k) {
    check_k(k, areas.size());
    const auto order = order_l(areas, all_indices(areas.size()), TieRule::Stable);
    const std::span<const std::size_t> first(order.data(), k);
    const std::span<const std::size_t> rest(order.data() + k, order.size() - k);
    if (!separated(areas, first, rest, TieRule::Stable)) {
        return drop_points(areas, {order_u(areas, first, TieRule::Stable).back()});
    }
    // 1-Max among the first k: the 1-Min bypass head over the mirrored areas.
    const auto mirrored = mirror(areas);
    return drop_points(areas, heads(mirrored, first, TieRule::Stable, 1));
}

Verifier mirror_to_max(Verifier verifier) {
    return [verifier = std::move(verifier)](std::span<const Area> areas) { return verifier(mirror(areas)); };
}

WitnessFn mirror_to_max(WitnessFn witness) {
    return [witness = std::move(witness)](std::span<const Area> areas, std::size_t iteration) {
        return witness(mirror(areas), iteration);
    };
}

Verifier selection_verifier(const SelectionProblem& problem) {
    Verifier v = [k = problem.k, tie = problem.tie_rule](std::span<const Area> areas) {
        if (const auto answer = kmin_verifier(areas, k, tie)) return Verdict::solved({*answer});
        return Verdict::unresolved();
    };
    return problem.objective == Objective::KthMax ? mirror_to_max(std::move(v)) : v;
}

SolverStrategy make_selection_strategy(std::string_view name, const SelectionProblem& problem,
                                       const ModelSpec& model, const StrategyOptions& options) {
    const std::string algo(name);
    const auto category = classify_model(model);
    if (category == ModelCategory::InvalidAlpha) {
        throw ConfigError("model " + model.str() + " is not a valid model");
    }
    const bool lex = algo == "min1-lex" || algo == "kmin-lex";
    const auto tie = lex ? TieRule::Lex : TieRule::Stable;
    if (problem.tie_rule != tie) {
        throw ConfigError(algo + " uses the " + to_string(tie) + " tie rule but the problem asks for " +
                          to_string(problem.tie_rule));
    }
    if (category == ModelCategory::Category3 && !lex && !options.allow_unbounded_category3) {
        throw ConfigError("Category-3 model " + model.str() + " requires a lexicographic algorithm");
    }
    if ((algo == "min1-witness" || algo == "min1-bypass" || algo == "min1-lex") && problem.k != 1) {
        throw ConfigError(algo + " solves k = 1 only");
    }

    const auto k = problem.k;
    SolverStrategy s;
    s.name = algo;
    s.k_bound = 2;
    if (algo == "min1-witness" || algo == "min1-lex") {
        s.witness = [tie](std::span<const Area> a, std::size_t) { return min1_witness(a, tie); };
    } else if (algo == "kmin-witness" || algo == "kmin-lex") {
        s.witness = [k, tie](std::span<const Area> a, std::size_t) { return kmin_witness(a, k, tie); };
    } else if (algo == "min1-bypass" || algo == "kmin-bypass") {
        if (category != ModelCategory::OP_P) {
            throw ConfigError(algo + " is only valid under OP-P, not " + model.str());
        }
        s.k_bound = 1;
        if (algo == "min1-bypass") {
            s.witness = [](std::span<const Area> a, std::size_t) { return min1_bypass_witness(a); };
        } else {
            s.witness = [k](std::span<const Area> a, std::size_t) { return kmin_bypass_witness(a, k); };
        }
    } else if (algo == "opop-alternate") {
        if (category != ModelCategory::OP_OP) {
            throw ConfigError("opop-alternate is only valid under OP-OP, not " + model.str());
        }
        SolverStrategy bypass{"kmin-bypass", {}, [k](std::span<const Area> a, std::size_t) {
                                  return kmin_bypass_witness(a, k);
                              }, 1};
        SolverStrategy witness{"kmin-witness", {}, [k](std::span<const Area> a, std::size_t) {
                                   return kmin_witness(a, k, TieRule::Stable);
                               }, 2};
        s.witness = alternate(std::move(bypass), std::move(witness)).witness;
    } else {
        throw ConfigError("unknown selection algorithm '" + algo + "'");
    }

    s.verifier = selection_verifier(problem);
    if (problem.objective == Objective::KthMax) {
        s.witness = mirror_to_max(std::move(s.witness));
    }
    return s;
}

}  // namespace ivq
