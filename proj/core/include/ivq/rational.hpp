#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ivq {

/// Raised when an intermediate result does not fit in 64 bits.
class RationalOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Exact rational number with a normalized 64-bit numerator/denominator pair.
///
/// The denominator is always positive and gcd(|num|, den) == 1, so equality is
/// structural. Arithmetic is carried out in 128 bits and throws
/// RationalOverflow if the reduced result does not fit.
class Rational {
public:
    constexpr Rational() noexcept = default;
    constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t numerator, std::int64_t denominator);

    [[nodiscard]] constexpr std::int64_t numerator() const noexcept { return num_; }
    [[nodiscard]] constexpr std::int64_t denominator() const noexcept { return den_; }
    [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }

    /// Accepts "-12", "3.25", "+0.5", "7/4", "-7/4".
    static Rational parse(std::string_view text);

    /// Canonical text: "p/q" with normalized gcd, or "p" when q == 1.
    [[nodiscard]] std::string str() const;
    [[nodiscard]] double to_double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& value);

    friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept;

private:
    static Rational from_wide(__int128 numerator, __int128 denominator);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

Rational midpoint(const Rational& a, const Rational& b);

}  // namespace ivq

template <>
struct std::hash<ivq::Rational> {
    std::size_t operator()(const ivq::Rational& r) const noexcept {
        return std::hash<std::int64_t>{}(r.numerator()) * 31u ^ std::hash<std::int64_t>{}(r.denominator());
    }
};
