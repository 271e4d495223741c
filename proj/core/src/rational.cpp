#include "ivq/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace ivq {

namespace {

__int128 wide_abs(__int128 v) { return v < 0 ? -v : v; }

__int128 wide_gcd(__int128 a, __int128 b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t parse_int(std::string_view digits, std::string_view whole) {
    std::int64_t value = 0;
    const auto* first = digits.data();
    const auto* last = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) {
        throw RationalOverflow("rational literal out of range: " + std::string(whole));
    }
    if (ec != std::errc() || ptr != last || digits.empty()) {
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    *this = from_wide(numerator, denominator);
}

Rational Rational::from_wide(__int128 numerator, __int128 denominator) {
    if (denominator == 0) {
        throw std::domain_error("division by zero");
    }
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    const __int128 g = wide_gcd(numerator, denominator);
    if (g > 1) {
        numerator /= g;
        denominator /= g;
    }
    constexpr auto lo = static_cast<__int128>(std::numeric_limits<std::int64_t>::min());
    constexpr auto hi = static_cast<__int128>(std::numeric_limits<std::int64_t>::max());
    if (numerator < lo || numerator > hi || denominator > hi) {
        throw RationalOverflow("rational result exceeds 64-bit range");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(numerator);
    r.den_ = static_cast<std::int64_t>(denominator);
    return r;
}

Rational Rational::parse(std::string_view text) {
    const std::string_view whole = text;
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    Rational result;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto p = parse_int(text.substr(0, slash), whole);
        const auto q = parse_int(text.substr(slash + 1), whole);
        if (p < 0 || q <= 0) {
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
        }
        result = Rational(p, q);
    } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto int_part = text.substr(0, dot);
        const auto frac_part = text.substr(dot + 1);
        if (frac_part.size() > 18 || (int_part.empty() && frac_part.empty())) {
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
        }
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i) {
            scale *= 10;
        }
        const auto ip = int_part.empty() ? 0 : parse_int(int_part, whole);
        const auto fp = frac_part.empty() ? 0 : parse_int(frac_part, whole);
        if (ip < 0 || fp < 0) {
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
        }
        result = from_wide(static_cast<__int128>(ip) * scale + fp, scale);
    } else {
        const auto p = parse_int(text, whole);
        if (p < 0) {
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
        }
        result = Rational(p);
    }
    return negative ? -result : result;
}

std::string Rational::str() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
    *this = from_wide(static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_,
                      static_cast<__int128>(den_) * rhs.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    *this = from_wide(static_cast<__int128>(num_) * rhs.den_ - static_cast<__int128>(rhs.num_) * den_,
                      static_cast<__int128>(den_) * rhs.den_);
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    *this = from_wide(static_cast<__int128>(num_) * rhs.num_, static_cast<__int128>(den_) * rhs.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) {
        throw std::domain_error("division by zero");
    }
    *this = from_wide(static_cast<__int128>(num_) * rhs.den_, static_cast<__int128>(den_) * rhs.num_);
    return *this;
}

Rational operator-(const Rational& value) {
    return Rational::from_wide(-static_cast<__int128>(value.num_), value.den_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept {
    const __int128 l = static_cast<__int128>(lhs.num_) * rhs.den_;
    const __int128 r = static_cast<__int128>(rhs.num_) * lhs.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

}  // namespace ivq
