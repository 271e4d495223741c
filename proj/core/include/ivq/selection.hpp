#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "ivq/area.hpp"
#include "ivq/engine.hpp"
#include "ivq/instance.hpp"
#include "ivq/models.hpp"

namespace ivq {

// All functions take 0-based indices and return 0-based indices.

/// Head of order_l when it is certainly the minimum. Under Lex the head must
/// additionally be strictly below every lower-indexed area.
std::optional<std::size_t> min1_verifier(std::span<const Area> areas, TieRule tie);

/// The two heads of order_l, minus any point areas.
IndexList min1_witness(std::span<const Area> areas, TieRule tie);

/// k-th head of order_l when the k-1 areas before it are certainly no larger
/// and every area after it is certainly no smaller.
std::optional<std::size_t> kmin_verifier(std::span<const Area> areas, std::size_t k, TieRule tie);

/// If the first k-1 heads are already separated from the rest, the 1-Min
/// witness of the rest; otherwise {p_k, q} where q has the largest upper end
/// among the first k-1 heads. Point areas are dropped.
IndexList kmin_witness(std::span<const Area> areas, std::size_t k, TieRule tie);

/// Only the head of order_l. Not a witness set; pays at most one query over OPT
/// under OP-P.
IndexList min1_bypass_witness(std::span<const Area> areas);

/// Among the first k heads of order_l, the area with the largest upper end
/// while those k are not yet separated from the rest, and the 1-Max bypass
/// choice among them once they are.
IndexList kmin_bypass_witness(std::span<const Area> areas, std::size_t k);

/// True iff area i certainly precedes area j in the (value, index) order
/// required by the tie rule.
bool surely_before(std::span<const Area> areas, std::size_t i, std::size_t j, TieRule tie);

/// Verifier and witness function over mirrored areas; indices are unchanged.
Verifier mirror_to_max(Verifier verifier);
WitnessFn mirror_to_max(WitnessFn witness);

/// Verifier for the instance's selection problem.
Verifier selection_verifier(const SelectionProblem& problem);

struct StrategyOptions {
    /// Permit a stable tie rule under Category-3 models (used only to
    /// demonstrate the unbounded ratio there).
    bool allow_unbounded_category3 = false;
};

/// Builds one of "min1-witness", "kmin-witness", "min1-bypass", "kmin-bypass",
/// "min1-lex", "kmin-lex", "opop-alternate". Throws ConfigError when the
/// algorithm does not apply to the problem or model.
SolverStrategy make_selection_strategy(std::string_view name, const SelectionProblem& problem,
                                       const ModelSpec& model, const StrategyOptions& options = {});

}  // namespace ivq
