#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ivq/area.hpp"

namespace ivq {

/// An algorithm, model, oracle or problem combination that is not allowed.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Nonempty subset of {O, C, P}; rendered in the fixed order O, C, P.
class TypeSet {
public:
    static constexpr std::uint8_t kOpen = 1;
    static constexpr std::uint8_t kClosed = 2;
    static constexpr std::uint8_t kPoint = 4;

    constexpr TypeSet() = default;
    explicit TypeSet(std::uint8_t bits);

    /// Parses "O", "OC", "CP", ... (letters in any order, no repeats).
    static TypeSet parse(std::string_view text);
    static std::vector<TypeSet> all();

    [[nodiscard]] bool has_open() const noexcept { return (bits_ & kOpen) != 0; }
    [[nodiscard]] bool has_closed() const noexcept { return (bits_ & kClosed) != 0; }
    [[nodiscard]] bool has_point() const noexcept { return (bits_ & kPoint) != 0; }
    [[nodiscard]] bool admits(Shape shape) const noexcept;
    [[nodiscard]] std::uint8_t bits() const noexcept { return bits_; }
    [[nodiscard]] std::string str() const;

    friend bool operator==(const TypeSet&, const TypeSet&) = default;

private:
    std::uint8_t bits_ = kOpen;
};

/// An X-Y model: X = admissible input shapes, Y = admissible query return shapes.
struct ModelSpec {
    TypeSet input;
    TypeSet returns;

    /// Parses "OP-P", "CP-C", ...
    static ModelSpec parse(std::string_view text);
    [[nodiscard]] std::string str() const { return input.str() + "-" + returns.str(); }

    friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

enum class ModelCategory { Category1, Category2, Category3, OP_P, OP_OP, Trivial, InvalidAlpha };

/// Classification of every X-Y cell of the model grid.
ModelCategory classify_model(const ModelSpec& spec) noexcept;
std::string to_string(ModelCategory category);

struct Violation {
    std::size_t index;  // 0-based; rendered 1-based
    std::string reason;
};

struct ValidationReport {
    std::vector<Violation> violations;
    [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
    [[nodiscard]] std::string str() const;
};

struct UncertainInstance;

/// Checks area shapes against the model's input set and, when present, that
/// each hidden value lies in its area.
ValidationReport validate_instance(const UncertainInstance& instance);

enum class ResponseRule { NotContained, ShapeNotAdmitted, NoRefinement };

struct ResponseViolation {
    ResponseRule rule;
    std::string message;
};

/// A legal response is contained in the queried area, has a shape admitted by
/// the model's return set, and strictly refines the queried area.
std::optional<ResponseViolation> validate_response(const ModelSpec& spec, const Area& queried, const Area& response);

}  // namespace ivq
