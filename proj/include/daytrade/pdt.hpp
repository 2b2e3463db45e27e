#pragma once

#include <charconv>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "daytrade/dates.hpp"
#include "daytrade/errors.hpp"
#include "daytrade/text.hpp"

namespace daytrade {

/// Pattern-day-trader minimum account equity, in currency units.
inline constexpr double kPdtMinEquity = 25000.0;

/// One trading day of an account's log: completed round trips (day
/// trades) plus any other executions that day.
struct TradeDay {
    Date date{};
    int day_trades = 0;
    int other_trades = 0;
};

struct EquityCheckpoint {
    Date date{};
    double equity = 0.0;
};

/// One evaluated 5-trading-day window.
struct PdtWindow {
    Date start{};
    Date end{};
    int day_trades = 0;
    int total_trades = 0;
    bool flagged = false;
};

struct PdtReport {
    bool is_pattern_day_trader = false;
    std::optional<std::pair<Date, Date>> first_trigger_window;
    std::vector<PdtWindow> windows;
    bool min_equity_ok = true; // every checkpoint >= kPdtMinEquity
};

/// Flags pattern-day-trader status: some window of five consecutive
/// trading dates in the log has four or more day trades AND those day
/// trades exceed six percent of the window's total trades.
///
/// "Five days" means five trading dates present in the log, not calendar
/// days; a log shorter than five dates forms a single window. Entries
/// sharing a date are merged. The six-percent comparison is exact
/// integer arithmetic, strict: a window at exactly 6% is not flagged.
inline PdtReport check_pdt(std::span<const TradeDay> log,
                           std::span<const EquityCheckpoint> equity = {}) {
    std::vector<TradeDay> days;
    days.reserve(log.size());
    for (const auto& td : log) {
        if (td.day_trades < 0 || td.other_trades < 0)
            throw ArgumentError("negative trade count on " + format_date(td.date));
        if (!days.empty() && td.date < days.back().date)
            throw ArgumentError("trade log dates not sorted at " + format_date(td.date));
        if (!days.empty() && td.date == days.back().date) {
            days.back().day_trades += td.day_trades;
            days.back().other_trades += td.other_trades;
        } else {
            days.push_back(td);
        }
    }

    PdtReport report;
    for (const auto& cp : equity) {
        if (cp.equity < kPdtMinEquity) report.min_equity_ok = false;
    }
    if (days.empty()) return report;

    const std::size_t m = days.size();
    const std::size_t window_count = (m >= 5) ? m - 4 : 1;
    for (std::size_t i = 0; i < window_count; ++i) {
        std::size_t j_end = std::min(i + 5, m);
        PdtWindow w;
        w.start = days[i].date;
        w.end = days[j_end - 1].date;
        for (std::size_t j = i; j < j_end; ++j) {
            w.day_trades += days[j].day_trades;
            w.total_trades += days[j].day_trades + days[j].other_trades;
        }
        w.flagged = w.day_trades >= 4 && 100 * w.day_trades > 6 * w.total_trades;
        if (w.flagged && !report.first_trigger_window)
            report.first_trigger_window = std::make_pair(w.start, w.end);
        report.is_pattern_day_trader = report.is_pattern_day_trader || w.flagged;
        report.windows.push_back(w);
    }
    return report;
}

namespace detail {

inline std::optional<int> parse_count(std::string_view cell) noexcept {
    int v = 0;
    auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size()) return std::nullopt;
    return v;
}

inline std::optional<double> parse_number(std::string_view cell) noexcept {
    double v = 0.0;
    auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size()) return std::nullopt;
    return v;
}

} // namespace detail

/// Trade-log CSV: header "date,day_trades,other_trades", one row per day.
inline std::vector<TradeDay> parse_trade_log_csv(std::string_view text) {
    std::vector<TradeDay> log;
    bool header_seen = false;
    detail::for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        auto cells = detail::split(line, ',');
        if (!header_seen) {
            if (cells.size() < 3 || !detail::iequals(detail::trim(cells[0]), "date") ||
                !detail::iequals(detail::trim(cells[1]), "day_trades") ||
                !detail::iequals(detail::trim(cells[2]), "other_trades"))
                throw ParseError(line_no, "expected header date,day_trades,other_trades");
            header_seen = true;
            return;
        }
        if (cells.size() < 3)
            throw ParseError(line_no, "expected 3 columns, got " + std::to_string(cells.size()));
        auto date = try_parse_date(detail::trim(cells[0]));
        auto day_trades = detail::parse_count(detail::trim(cells[1]));
        auto other_trades = detail::parse_count(detail::trim(cells[2]));
        if (!date) throw ParseError(line_no, "bad date");
        if (!day_trades || !other_trades) throw ParseError(line_no, "bad trade count");
        log.push_back({*date, *day_trades, *other_trades});
    });
    if (!header_seen) throw ParseError(1, "missing header line");
    return log;
}

/// Equity-checkpoint CSV: header "date,equity".
inline std::vector<EquityCheckpoint> parse_equity_csv(std::string_view text) {
    std::vector<EquityCheckpoint> checkpoints;
    bool header_seen = false;
    detail::for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        auto cells = detail::split(line, ',');
        if (!header_seen) {
            if (cells.size() < 2 || !detail::iequals(detail::trim(cells[0]), "date") ||
                !detail::iequals(detail::trim(cells[1]), "equity"))
                throw ParseError(line_no, "expected header date,equity");
            header_seen = true;
            return;
        }
        if (cells.size() < 2)
            throw ParseError(line_no, "expected 2 columns, got " + std::to_string(cells.size()));
        auto date = try_parse_date(detail::trim(cells[0]));
        auto equity = detail::parse_number(detail::trim(cells[1]));
        if (!date) throw ParseError(line_no, "bad date");
        if (!equity) throw ParseError(line_no, "bad equity value");
        checkpoints.push_back({*date, *equity});
    });
    if (!header_seen) throw ParseError(1, "missing header line");
    return checkpoints;
}

} // namespace daytrade
