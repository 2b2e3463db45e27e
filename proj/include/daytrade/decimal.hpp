#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "daytrade/errors.hpp"

namespace daytrade {

namespace detail {
__extension__ typedef __int128 Int128; // GCC/Clang extension, wide enough for comparisons
} // namespace detail

/// Exact decimal number: value = mantissa * 10^-scale.
///
/// Prices are kept in this form from ingestion until computation so that
/// validation and persistence are deterministic; conversion to double
/// happens only where arithmetic needs it. The representation is
/// normalized (no trailing fractional zeros), which makes equality,
/// ordering and the canonical text form agree: "26.50", "26.5" and
/// "2.650e1" all parse to the same Decimal printing as "26.5".
///
/// Mantissa fits int64, scale is capped at 18, so any two values can be
/// compared exactly in 128-bit arithmetic.
class Decimal {
public:
    static constexpr int kMaxScale = 18;

    constexpr Decimal() = default;

    /// Parses "[+-]digits[.digits][eE[+-]digits]". Returns nullopt on any
    /// syntax error or if the value does not fit the representation.
    static std::optional<Decimal> try_parse(std::string_view text) noexcept {
        const char* p = text.data();
        const char* end = p + text.size();
        if (p == end) return std::nullopt;

        bool negative = false;
        if (*p == '+' || *p == '-') {
            negative = (*p == '-');
            ++p;
        }

        std::int64_t mant = 0;
        int frac_digits = 0;
        bool any_digit = false;
        bool seen_point = false;
        for (; p != end; ++p) {
            char ch = *p;
            if (ch >= '0' && ch <= '9') {
                any_digit = true;
                if (__builtin_mul_overflow(mant, std::int64_t{10}, &mant) ||
                    __builtin_add_overflow(mant, std::int64_t{ch - '0'}, &mant)) {
                    return std::nullopt;
                }
                if (seen_point) ++frac_digits;
            } else if (ch == '.') {
                if (seen_point) return std::nullopt;
                seen_point = true;
            } else if (ch == 'e' || ch == 'E') {
                break;
            } else {
                return std::nullopt;
            }
        }
        if (!any_digit) return std::nullopt;

        int exponent = 0;
        if (p != end) { // at 'e' / 'E'
            ++p;
            if (p == end) return std::nullopt;
            int exp_sign = 1;
            if (*p == '+' || *p == '-') {
                if (*p == '-') exp_sign = -1;
                ++p;
            }
            if (p == end) return std::nullopt;
            int ev = 0;
            for (; p != end; ++p) {
                if (*p < '0' || *p > '9') return std::nullopt;
                ev = ev * 10 + (*p - '0');
                if (ev > 9999) return std::nullopt;
            }
            exponent = exp_sign * ev;
        }

        int scale = frac_digits - exponent;
        while (scale < 0) {
            if (__builtin_mul_overflow(mant, std::int64_t{10}, &mant)) return std::nullopt;
            ++scale;
        }
        while (scale > 0 && mant % 10 == 0) {
            mant /= 10;
            --scale;
        }
        if (scale > kMaxScale) return std::nullopt;

        Decimal d;
        d.mantissa_ = negative ? -mant : mant;
        d.scale_ = scale;
        return d;
    }

    /// Parsing that throws ArgumentError instead of returning nullopt.
    static Decimal parse(std::string_view text) {
        auto d = try_parse(text);
        if (!d) throw ArgumentError("not a decimal number: '" + std::string(text) + "'");
        return *d;
    }

    /// Exact conversion from double via the shortest round-trip decimal
    /// form, so from_double(x).to_double() == x bit-for-bit.
    static Decimal from_double(double value) {
        char buf[32];
        auto res = std::to_chars(buf, buf + sizeof(buf), value);
        auto d = try_parse(std::string_view(buf, res.ptr - buf));
        if (!d) throw ArgumentError("double not representable as Decimal: " +
                                    std::string(buf, res.ptr - buf));
        return *d;
    }

    /// Canonical text form: plain "[-]digits[.digits]", no exponent.
    std::string str() const {
        std::int64_t m = mantissa_;
        bool negative = m < 0;
        std::string digits = std::to_string(negative ? -m : m);
        if (scale_ > 0) {
            if (static_cast<int>(digits.size()) <= scale_)
                digits.insert(0, scale_ + 1 - digits.size(), '0');
            digits.insert(digits.size() - scale_, 1, '.');
        }
        return negative ? "-" + digits : digits;
    }

    /// Correctly-rounded nearest double.
    double to_double() const {
        std::string s = str();
        double v = 0.0;
        std::from_chars(s.data(), s.data() + s.size(), v);
        return v;
    }

    std::int64_t mantissa() const noexcept { return mantissa_; }
    int scale() const noexcept { return scale_; }
    bool is_zero() const noexcept { return mantissa_ == 0; }
    bool is_positive() const noexcept { return mantissa_ > 0; }

    friend bool operator==(const Decimal& a, const Decimal& b) noexcept {
        return a.mantissa_ == b.mantissa_ && a.scale_ == b.scale_;
    }

    friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) noexcept {
        // scales <= 18 and |mantissa| < 2^63 keep this within 128 bits
        detail::Int128 lhs = static_cast<detail::Int128>(a.mantissa_) * pow10(b.scale_);
        detail::Int128 rhs = static_cast<detail::Int128>(b.mantissa_) * pow10(a.scale_);
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    static constexpr detail::Int128 pow10(int n) noexcept {
        detail::Int128 r = 1;
        for (int i = 0; i < n; ++i) r *= 10;
        return r;
    }

    std::int64_t mantissa_ = 0;
    int scale_ = 0; // fractional digits, [0, kMaxScale]
};

} // namespace daytrade
