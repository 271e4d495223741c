#include "ivq/models.hpp"

#include <stdexcept>

#include "ivq/instance.hpp"

namespace ivq {

TypeSet::TypeSet(std::uint8_t bits) : bits_(bits) {
    if (bits == 0 || bits > (kOpen | kClosed | kPoint)) {
        throw std::invalid_argument("type set must be a nonempty subset of {O, C, P}");
    }
}

TypeSet TypeSet::parse(std::string_view text) {
    std::uint8_t bits = 0;
    for (char c : text) {
        std::uint8_t bit = 0;
        switch (c) {
            case 'O': bit = kOpen; break;
            case 'C': bit = kClosed; break;
            case 'P': bit = kPoint; break;
            default: throw std::invalid_argument("unknown type letter in '" + std::string(text) + "'");
        }
        if ((bits & bit) != 0) {
            throw std::invalid_argument("repeated type letter in '" + std::string(text) + "'");
        }
        bits |= bit;
    }
    return TypeSet(bits);
}

std::vector<TypeSet> TypeSet::all() {
    // Row/column order of the model grid.
    return {TypeSet(kOpen), TypeSet(kClosed), TypeSet(kOpen | kClosed), TypeSet(kPoint),
            TypeSet(kOpen | kPoint), TypeSet(kClosed | kPoint), TypeSet(kOpen | kClosed | kPoint)};
}

bool TypeSet::admits(Shape shape) const noexcept {
    switch (shape) {
        case Shape::Point: return has_point();
        case Shape::Open: return has_open();
        case Shape::Closed: return has_closed();
        case Shape::Mixed: return false;
    }
    return false;
}

std::string TypeSet::str() const {
    std::string out;
    if (has_open()) out += 'O';
    if (has_closed()) out += 'C';
    if (has_point()) out += 'P';
    return out;
}

ModelSpec ModelSpec::parse(std::string_view text) {
    const auto dash = text.find('-');
    if (dash == std::string_view::npos) {
        throw std::invalid_argument("model must look like 'OP-P', got '" + std::string(text) + "'");
    }
    return {TypeSet::parse(text.substr(0, dash)), TypeSet::parse(text.substr(dash + 1))};
}

ModelCategory classify_model(const ModelSpec& spec) noexcept {
    constexpr std::uint8_t O = TypeSet::kOpen;
    constexpr std::uint8_t C = TypeSet::kClosed;
    constexpr std::uint8_t P = TypeSet::kPoint;
    const auto in = spec.input.bits();
    const auto ret = spec.returns.bits();

    if (in == P) {
        return ret == P ? ModelCategory::Trivial : ModelCategory::InvalidAlpha;
    }
    const bool has_p = (in & P) != 0;
    if (!has_p) {
        // Interval-only inputs are only closed under the identical return set.
        return ret == in ? ModelCategory::Category1 : ModelCategory::InvalidAlpha;
    }
    const auto intervals = static_cast<std::uint8_t>(in & ~P);
    if (ret == intervals) {
        return ModelCategory::Category2;
    }
    if (intervals == O) {
        if (ret == P) return ModelCategory::OP_P;
        if (ret == in) return ModelCategory::OP_OP;
        return ModelCategory::InvalidAlpha;
    }
    if ((intervals & C) != 0 && (ret == P || ret == in)) {
        return ModelCategory::Category3;
    }
    return ModelCategory::InvalidAlpha;
}

std::string to_string(ModelCategory category) {
    switch (category) {
        case ModelCategory::Category1: return "Category-1";
        case ModelCategory::Category2: return "Category-2";
        case ModelCategory::Category3: return "Category-3";
        case ModelCategory::OP_P: return "OP-P";
        case ModelCategory::OP_OP: return "OP-OP";
        case ModelCategory::Trivial: return "trivial";
        case ModelCategory::InvalidAlpha: return "invalid";
    }
    return "?";
}

std::string ValidationReport::str() const {
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "; ";
        out += "index " + std::to_string(v.index + 1) + ": " + v.reason;
    }
    return out;
}

ValidationReport validate_instance(const UncertainInstance& instance) {
    ValidationReport report;
    const auto& input = instance.model.input;
    for (std::size_t i = 0; i < instance.areas.size(); ++i) {
        const auto& a = instance.areas[i];
        const auto shape = a.shape();
        if (!input.admits(shape)) {
            report.violations.push_back({i, to_string(shape) + " area " + a.str() + " not admitted by input set " +
                                                input.str()});
        }
    }
    if (instance.hidden) {
        const auto& hidden = *instance.hidden;
        if (hidden.size() != instance.areas.size()) {
            report.violations.push_back({hidden.size(), "hidden configuration has " + std::to_string(hidden.size()) +
                                                            " values for " + std::to_string(instance.areas.size()) +
                                                            " areas"});
        } else {
            for (std::size_t i = 0; i < hidden.size(); ++i) {
                if (!instance.areas[i].contains_value(hidden[i])) {
                    report.violations.push_back(
                        {i, "hidden value " + hidden[i].str() + " outside " + instance.areas[i].str()});
                }
            }
        }
    }
    if (const auto* mst = std::get_if<MstProblem>(&instance.problem)) {
        if (mst->edges.size() != instance.areas.size()) {
            report.violations.push_back({0, "edge count does not match area count"});
        }
        for (std::size_t e = 0; e < mst->edges.size(); ++e) {
            const auto& edge = mst->edges[e];
            if (edge.u >= mst->vertices || edge.v >= mst->vertices) {
                report.violations.push_back({e, "edge endpoint out of range"});
            } else if (edge.u == edge.v) {
                report.violations.push_back({e, "self-loop"});
            }
        }
    } else if (const auto* sel = std::get_if<SelectionProblem>(&instance.problem)) {
        if (sel->k < 1 || sel->k > instance.areas.size()) {
            report.violations.push_back({0, "k = " + std::to_string(sel->k) + " out of range"});
        }
    }
    return report;
}

std::optional<ResponseViolation> validate_response(const ModelSpec& spec, const Area& queried, const Area& response) {
    if (!contains(queried, response)) {
        return ResponseViolation{ResponseRule::NotContained,
                                 "response " + response.str() + " not contained in " + queried.str()};
    }
    if (!spec.returns.admits(response.shape())) {
        return ResponseViolation{ResponseRule::ShapeNotAdmitted, to_string(response.shape()) + " response " +
                                                                     response.str() + " not admitted by " +
                                                                     spec.str()};
    }
    if (response == queried) {
        return ResponseViolation{ResponseRule::NoRefinement, "response " + response.str() + " does not refine"};
    }
    return std::nullopt;
}

}  // namespace ivq
