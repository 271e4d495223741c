#pragma once

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ivq/area.hpp"
#include "ivq/instance.hpp"
#include "ivq/models.hpp"
#include "ivq/rational.hpp"

namespace ivq::testing {

/// "(2,6)", "[1,3)", "(5/2, 7/2]" or a bare value for a point.
inline Area A(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (c != ' ') s.push_back(c);
    }
    if (s.empty()) throw std::invalid_argument("empty area text");
    const char open = s.front();
    if (open != '(' && open != '[') return Area::point(Rational::parse(s));
    const char close = s.back();
    const auto comma = s.find(',');
    const auto lo = Rational::parse(s.substr(1, comma - 1));
    const auto hi = Rational::parse(s.substr(comma + 1, s.size() - comma - 2));
    return {lo, hi, open == '[' ? EndpointKind::Closed : EndpointKind::Open,
            close == ']' ? EndpointKind::Closed : EndpointKind::Open};
}

inline AreaVector As(std::initializer_list<std::string_view> texts) {
    AreaVector out;
    for (auto t : texts) out.push_back(A(t));
    return out;
}

inline std::vector<Rational> Rs(std::initializer_list<std::string_view> texts) {
    std::vector<Rational> out;
    for (auto t : texts) out.push_back(Rational::parse(t));
    return out;
}

inline UncertainInstance selection_instance(AreaVector areas, std::string_view model, std::size_t k = 1,
                                            TieRule tie = TieRule::Stable,
                                            std::optional<std::vector<Rational>> hidden = std::nullopt) {
    UncertainInstance inst;
    inst.areas = std::move(areas);
    inst.model = ModelSpec::parse(model);
    inst.problem = SelectionProblem{k, Objective::KthMin, tie};
    inst.hidden = std::move(hidden);
    return inst;
}

inline UncertainInstance mst_instance(std::size_t vertices, std::vector<Edge> edges, AreaVector weights,
                                      std::string_view model, bool lex = true,
                                      std::optional<std::vector<Rational>> hidden = std::nullopt) {
    UncertainInstance inst;
    inst.areas = std::move(weights);
    inst.model = ModelSpec::parse(model);
    inst.problem = MstProblem{vertices, std::move(edges), lex};
    inst.hidden = std::move(hidden);
    return inst;
}

}  // namespace ivq::testing
