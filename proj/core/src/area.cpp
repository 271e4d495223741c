#include "ivq/area.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ivq {

Area::Area(Rational lo, Rational hi, EndpointKind lo_kind, EndpointKind hi_kind)
    : lo_(lo), hi_(hi), lo_kind_(lo_kind), hi_kind_(hi_kind) {
    if (hi_ < lo_) {
        throw std::invalid_argument("area with hi < lo: " + lo.str() + " > " + hi.str());
    }
    if (lo_ == hi_ && (lo_kind_ != EndpointKind::Closed || hi_kind_ != EndpointKind::Closed)) {
        throw std::invalid_argument("degenerate area must be a closed point: " + lo.str());
    }
}

Shape Area::shape() const noexcept {
    if (is_point()) return Shape::Point;
    if (lo_kind_ != hi_kind_) return Shape::Mixed;
    return lo_kind_ == EndpointKind::Open ? Shape::Open : Shape::Closed;
}

bool Area::contains_value(const Rational& x) const noexcept {
    const bool above_lo = attains_lo() ? lo_ <= x : lo_ < x;
    const bool below_hi = attains_hi() ? x <= hi_ : x < hi_;
    return above_lo && below_hi;
}

std::string Area::str() const {
    if (is_point()) {
        return "{" + lo_.str() + "}";
    }
    return std::string(attains_lo() ? "[" : "(") + lo_.str() + ", " + hi_.str() + (attains_hi() ? "]" : ")");
}

bool contains(const Area& outer, const Area& inner) noexcept {
    if (inner.lo() < outer.lo() || outer.hi() < inner.hi()) {
        return false;
    }
    if (inner.lo() == outer.lo() && inner.attains_lo() && !outer.attains_lo()) {
        return false;
    }
    if (inner.hi() == outer.hi() && inner.attains_hi() && !outer.attains_hi()) {
        return false;
    }
    return true;
}

bool surely_leq(const Area& a, const Area& b) noexcept { return a.hi() <= b.lo(); }

bool surely_lt(const Area& a, const Area& b) noexcept {
    if (a.hi() < b.lo()) return true;
    return a.hi() == b.lo() && (!a.attains_hi() || !b.attains_lo());
}

Area mirror(const Area& a) { return {-a.hi(), -a.lo(), a.hi_kind(), a.lo_kind()}; }

AreaVector mirror(std::span<const Area> areas) {
    AreaVector out;
    out.reserve(areas.size());
    for (const auto& a : areas) out.push_back(mirror(a));
    return out;
}

Area affine_map(const Area& a, const Rational& scale, const Rational& shift) {
    if (scale <= Rational(0)) {
        throw std::invalid_argument("affine map must be strictly increasing");
    }
    return {a.lo() * scale + shift, a.hi() * scale + shift, a.lo_kind(), a.hi_kind()};
}

namespace {

void check_subset(std::span<const Area> areas, std::span<const std::size_t> subset) {
    std::vector<bool> seen(areas.size(), false);
    for (auto i : subset) {
        if (i >= areas.size()) {
            throw std::invalid_argument("index " + std::to_string(i + 1) + " out of range");
        }
        if (seen[i]) {
            throw std::invalid_argument("duplicate index " + std::to_string(i + 1) + " in subset");
        }
        seen[i] = true;
    }
}

}  // namespace

IndexList order_l(std::span<const Area> areas, std::span<const std::size_t> subset, TieRule tie) {
    check_subset(areas, subset);
    IndexList out(subset.begin(), subset.end());
    std::sort(out.begin(), out.end(), [&](std::size_t i, std::size_t j) {
        const auto& a = areas[i];
        const auto& b = areas[j];
        if (a.lo() != b.lo()) return a.lo() < b.lo();
        if (tie == TieRule::Lex && a.attains_lo() != b.attains_lo()) return a.attains_lo();
        return i < j;
    });
    return out;
}

IndexList order_u(std::span<const Area> areas, std::span<const std::size_t> subset, TieRule tie) {
    check_subset(areas, subset);
    IndexList out(subset.begin(), subset.end());
    std::sort(out.begin(), out.end(), [&](std::size_t i, std::size_t j) {
        const auto& a = areas[i];
        const auto& b = areas[j];
        if (a.hi() != b.hi()) return a.hi() < b.hi();
        if (tie == TieRule::Lex && a.attains_hi() != b.attains_hi()) return b.attains_hi();
        return i < j;
    });
    return out;
}

IndexList all_indices(std::size_t n) {
    IndexList out(n);
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
}

std::string to_string(EndpointKind kind) { return kind == EndpointKind::Open ? "open" : "closed"; }

std::string to_string(Shape shape) {
    switch (shape) {
        case Shape::Point: return "point";
        case Shape::Open: return "open";
        case Shape::Closed: return "closed";
        case Shape::Mixed: return "mixed";
    }
    return "?";
}

std::string to_string(TieRule tie) { return tie == TieRule::Lex ? "lex" : "stable"; }

TieRule tie_rule_from_string(const std::string& text) {
    if (text == "stable") return TieRule::Stable;
    if (text == "lex") return TieRule::Lex;
    throw std::invalid_argument("unknown tie rule '" + text + "'");
}

}  // namespace ivq
