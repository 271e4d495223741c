#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "ivq/area.hpp"
#include "ivq/models.hpp"
#include "ivq/rational.hpp"

namespace ivq {

enum class Objective { KthMin, KthMax };

struct SelectionProblem {
    std::size_t k = 1;
    Objective objective = Objective::KthMin;
    TieRule tie_rule = TieRule::Stable;

    friend bool operator==(const SelectionProblem&, const SelectionProblem&) = default;
};

struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Spanning-tree problem; edge i carries the weight area `areas[i]` of the instance.
struct MstProblem {
    std::size_t vertices = 0;
    std::vector<Edge> edges;
    bool lex = true;

    friend bool operator==(const MstProblem&, const MstProblem&) = default;
};

using Problem = std::variant<SelectionProblem, MstProblem>;

struct UncertainInstance {
    AreaVector areas;
    std::optional<std::vector<Rational>> hidden;
    Problem problem = SelectionProblem{};
    ModelSpec model;

    [[nodiscard]] std::size_t size() const noexcept { return areas.size(); }
    [[nodiscard]] bool is_mst() const noexcept { return std::holds_alternative<MstProblem>(problem); }

    friend bool operator==(const UncertainInstance&, const UncertainInstance&) = default;
};

}  // namespace ivq
