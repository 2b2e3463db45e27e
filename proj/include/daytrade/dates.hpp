#pragma once

#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include "daytrade/errors.hpp"

namespace daytrade {

using Date = std::chrono::year_month_day;

/// Strict ISO-8601 calendar date: "YYYY-MM-DD", zero-padded, validated
/// against the civil calendar (rejects 2003-02-30 and the like).
inline std::optional<Date> try_parse_date(std::string_view text) noexcept {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    auto digits = [](std::string_view s, int& out) {
        out = 0;
        for (char ch : s) {
            if (ch < '0' || ch > '9') return false;
            out = out * 10 + (ch - '0');
        }
        return true;
    };
    int y = 0, m = 0, d = 0;
    if (!digits(text.substr(0, 4), y) || !digits(text.substr(5, 2), m) ||
        !digits(text.substr(8, 2), d)) {
        return std::nullopt;
    }
    Date date{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
              std::chrono::day{static_cast<unsigned>(d)}};
    if (!date.ok()) return std::nullopt;
    return date;
}

inline Date parse_date(std::string_view text) {
    auto d = try_parse_date(text);
    if (!d) throw ArgumentError("not an ISO-8601 date: '" + std::string(text) + "'");
    return *d;
}

inline std::string format_date(const Date& date) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
    return buf;
}

/// Date shifted by a number of calendar days.
inline Date add_days(const Date& date, int days) {
    return Date{std::chrono::sys_days{date} + std::chrono::days{days}};
}

} // namespace daytrade
