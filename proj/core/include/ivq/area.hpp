#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ivq/rational.hpp"

namespace ivq {

enum class EndpointKind { Open, Closed };

/// Shape of an area as seen by the model taxonomy.
enum class Shape { Point, Open, Closed, Mixed };

/// A point or an interval whose endpoints may individually be open or closed.
///
/// A degenerate area (lo == hi) is the closed point {lo}; an Area is never empty.
class Area {
public:
    Area(Rational lo, Rational hi, EndpointKind lo_kind, EndpointKind hi_kind);

    static Area point(Rational value) { return {value, value, EndpointKind::Closed, EndpointKind::Closed}; }
    static Area open(Rational lo, Rational hi) { return {lo, hi, EndpointKind::Open, EndpointKind::Open}; }
    static Area closed(Rational lo, Rational hi) { return {lo, hi, EndpointKind::Closed, EndpointKind::Closed}; }

    [[nodiscard]] const Rational& lo() const noexcept { return lo_; }
    [[nodiscard]] const Rational& hi() const noexcept { return hi_; }
    [[nodiscard]] EndpointKind lo_kind() const noexcept { return lo_kind_; }
    [[nodiscard]] EndpointKind hi_kind() const noexcept { return hi_kind_; }

    [[nodiscard]] bool is_point() const noexcept { return lo_ == hi_; }
    [[nodiscard]] bool attains_lo() const noexcept { return lo_kind_ == EndpointKind::Closed; }
    [[nodiscard]] bool attains_hi() const noexcept { return hi_kind_ == EndpointKind::Closed; }
    [[nodiscard]] Shape shape() const noexcept;
    [[nodiscard]] bool contains_value(const Rational& x) const noexcept;
    [[nodiscard]] Rational length() const { return hi_ - lo_; }

    /// "(2, 6)", "[1, 3)", "{3}" and so on.
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Area&, const Area&) = default;

private:
    Rational lo_;
    Rational hi_;
    EndpointKind lo_kind_;
    EndpointKind hi_kind_;
};

using AreaVector = std::vector<Area>;
using IndexList = std::vector<std::size_t>;

/// True iff every member of `inner` is a member of `outer`.
bool contains(const Area& outer, const Area& inner) noexcept;

/// True iff x <= y for every x in a and y in b.
bool surely_leq(const Area& a, const Area& b) noexcept;

/// True iff x < y for every x in a and y in b.
bool surely_lt(const Area& a, const Area& b) noexcept;

/// Negates both endpoints and swaps them (with their kinds).
Area mirror(const Area& a);
AreaVector mirror(std::span<const Area> areas);

/// Applies x -> scale * x + shift (scale > 0) to both endpoints.
Area affine_map(const Area& a, const Rational& scale, const Rational& shift);

enum class TieRule { Stable, Lex };

/// Permutation of `subset` ordered by ascending lower endpoint.
///
/// Stable keeps index order among equal lower endpoints. Lex puts an area
/// that attains its lower endpoint ahead of one that is open there, and falls
/// back to index order otherwise. Throws std::invalid_argument on duplicate or
/// out-of-range indices.
IndexList order_l(std::span<const Area> areas, std::span<const std::size_t> subset, TieRule tie);

/// Permutation of `subset` ordered by ascending upper endpoint. Under Lex an
/// area attaining its upper endpoint is placed after one that is open there.
IndexList order_u(std::span<const Area> areas, std::span<const std::size_t> subset, TieRule tie);

IndexList all_indices(std::size_t n);

std::string to_string(EndpointKind kind);
std::string to_string(Shape shape);
std::string to_string(TieRule tie);
TieRule tie_rule_from_string(const std::string& text);

}  // namespace ivq
