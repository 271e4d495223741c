#pragma once

#include <cstddef>
#include <span>
#include <variant>

#include "ivq/area.hpp"
#include "ivq/engine.hpp"
#include "ivq/instance.hpp"
#include "ivq/oracles.hpp"

namespace ivq {

/// x ≺ y for an endpoint value x of edge e and y of edge f: x < y, or x == y
/// and e has the smaller index. Throws std::invalid_argument when e == f.
bool edge_prec(const Rational& x, std::size_t e, const Rational& y, std::size_t f);

/// U_c ≺ L_e for every other edge c of the cycle.
bool always_maximal(std::span<const Area> weights, std::span<const std::size_t> cycle, std::size_t e);

struct DeleteEdge {
    std::size_t edge;
};

struct WitnessPair {
    std::size_t f;
    std::size_t g;
};

using CycleAction = std::variant<DeleteEdge, WitnessPair>;

/// Red rule when some cycle edge is always maximal (the one with ≺-largest
/// upper end if several are), otherwise the pair {f, g}.
CycleAction mst_witness_or_delete(std::span<const Area> weights, std::span<const std::size_t> cycle);

struct MstAnswer {
    IndexList tree;  // ascending edge indices
    std::size_t red_rule_count = 0;
};

/// Outcome of one insertion pass over the current weights: either a certified
/// tree or the first witness pair met.
struct MstPass {
    bool certified = false;
    MstAnswer answer;
    WitnessPair witness{};
};

/// Inserts edges in ≺ order of their lower ends into a growing forest and
/// resolves every closed cycle. Stops at the first cycle that needs queries.
MstPass mst_pass(const MstProblem& graph, std::span<const Area> weights);

/// Throws std::invalid_argument unless the graph is connected and loop-free.
void check_graph(const MstProblem& graph);

SolverStrategy make_mst_strategy(const MstProblem& graph);

struct MstRun {
    RunReport report;
    MstAnswer answer;
};

MstRun umst_solve(const UncertainInstance& instance, Oracle& oracle, std::size_t budget);

}  // namespace ivq
