#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "daytrade/backtest.hpp"
#include "daytrade/io.hpp"
#include "daytrade/pdt.hpp"
#include "daytrade/projection.hpp"
#include "daytrade/quotes.hpp"
#include "daytrade/spreads.hpp"

// Plain-text emitters behind the CLI. Formatting is fixed so that equal
// inputs always produce byte-identical documents: averages and per-day
// spreads print with 9 decimal places, projection values with 6, money
// with 2.

namespace daytrade {

inline std::string format_fixed(double value, int places) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", places, value);
    return buf;
}

/// Integral values print without a decimal point, others with 6 places;
/// used for the alpha and margin columns.
inline std::string format_compact(double value) {
    if (value == std::floor(value) && std::fabs(value) < 1e15)
        return std::to_string(static_cast<long long>(value));
    return format_fixed(value, 6);
}

inline std::string stats_document(const QuoteSeries& series, const SpreadStats& stats) {
    std::string out;
    out += "symbol=" + series.symbol + "\n";
    out += "n=" + std::to_string(stats.n) + "\n";
    out += "start_date=" + format_date(series.quotes.front().date) + "\n";
    out += "end_date=" + format_date(series.quotes.back().date) + "\n";
    out += "s_av=" + format_fixed(stats.s_av, 9) + "\n";
    out += "q_av=" + format_fixed(stats.q_av, 9) + "\n";
    out += "s_min=" + format_fixed(stats.s_min, 9) + "\n";
    out += "s_max=" + format_fixed(stats.s_max, 9) + "\n";
    out += "s_median=" + format_fixed(stats.s_median, 9) + "\n";
    out += "q_min=" + format_fixed(stats.q_min, 9) + "\n";
    out += "q_max=" + format_fixed(stats.q_max, 9) + "\n";
    out += "q_median=" + format_fixed(stats.q_median, 9) + "\n";
    return out;
}

/// Per-day spread table: date,s_i,q_i.
inline std::string spread_series_csv(const SpreadSeries& spreads) {
    std::string out = "date,s_i,q_i\n";
    for (std::size_t i = 0; i < spreads.size(); ++i) {
        out += format_date(spreads.dates[i]) + "," + format_fixed(spreads.oc[i], 9) + "," +
               format_fixed(spreads.range[i], 9) + "\n";
    }
    return out;
}

/// Sweep table: alpha,margin,value. Interpolated sweeps (fractional
/// alpha step) carry an extra 0/1 column marking non-integer rows.
inline std::string sweep_csv(std::span<const SweepRow> rows, bool interpolated_column) {
    std::string out = interpolated_column ? "alpha,margin,value,interpolated\n"
                                          : "alpha,margin,value\n";
    for (const auto& row : rows) {
        out += format_compact(row.alpha) + "," + format_compact(row.margin) + "," +
               format_fixed(row.value, 6);
        if (interpolated_column) out += row.interpolated ? ",1" : ",0";
        out += "\n";
    }
    return out;
}

inline std::string backtest_document(const QuoteSeries& series, Strategy strategy,
                                     const CostModel& costs, const BacktestResult& result) {
    std::string out;
    out += "symbol=" + series.symbol + "\n";
    out += "strategy=" + std::string(strategy_name(strategy)) + "\n";
    out += "days_traded=" + std::to_string(result.dates.size()) + "\n";
    out += "starting_equity=" + format_fixed(result.starting_equity, 2) + "\n";
    out += "margin=" + format_compact(costs.margin) + "\n";
    out += "commission_per_trade=" + format_fixed(costs.commission_per_trade, 2) + "\n";
    out += "total_commissions=" + format_fixed(result.total_commissions, 2) + "\n";
    out += "terminal_equity=" + format_fixed(result.equity_curve.back(), 2) + "\n";
    out += "terminal_value_pct=" + format_fixed(result.terminal_value_pct, 6) + "\n";
    out += "ruin=" + (result.ruin ? format_date(result.ruin->date) : std::string("none")) + "\n";
    out += "pdt_flagged=" + std::string(result.pdt.is_pattern_day_trader ? "true" : "false") +
           "\n";
    if (result.pdt.first_trigger_window) {
        out += "pdt_first_window=" + format_date(result.pdt.first_trigger_window->first) +
               ".." + format_date(result.pdt.first_trigger_window->second) + "\n";
    }
    out += "pdt_min_equity_ok=" + std::string(result.pdt.min_equity_ok ? "true" : "false") +
           "\n";
    return out;
}

/// Per-day backtest table: date,return_pct,equity.
inline std::string backtest_daily_csv(const BacktestResult& result) {
    std::string out = "date,return_pct,equity\n";
    for (std::size_t i = 0; i < result.dates.size(); ++i) {
        out += format_date(result.dates[i]) + "," + format_fixed(result.daily_returns[i], 6) +
               "," + format_fixed(result.equity_curve[i], 2) + "\n";
    }
    return out;
}

inline std::string pdt_document(const PdtReport& report, std::size_t log_days) {
    std::string out;
    out += "days=" + std::to_string(log_days) + "\n";
    out += "windows=" + std::to_string(report.windows.size()) + "\n";
    std::size_t flagged = 0;
    for (const auto& w : report.windows)
        if (w.flagged) ++flagged;
    out += "flagged_windows=" + std::to_string(flagged) + "\n";
    out += "is_pattern_day_trader=" +
           std::string(report.is_pattern_day_trader ? "true" : "false") + "\n";
    out += "first_trigger_window=";
    if (report.first_trigger_window) {
        out += format_date(report.first_trigger_window->first) + ".." +
               format_date(report.first_trigger_window->second);
    } else {
        out += "none";
    }
    out += "\n";
    out += "min_equity_ok=" + std::string(report.min_equity_ok ? "true" : "false") + "\n";
    return out;
}

/// Per-window PDT table: start,end,day_trades,total_trades,flagged.
inline std::string pdt_windows_csv(const PdtReport& report) {
    std::string out = "start,end,day_trades,total_trades,flagged\n";
    for (const auto& w : report.windows) {
        out += format_date(w.start) + "," + format_date(w.end) + "," +
               std::to_string(w.day_trades) + "," + std::to_string(w.total_trades) + "," +
               (w.flagged ? "1" : "0") + "\n";
    }
    return out;
}

/// The reproduction bundle written by the `report` subcommand: per-day
/// spread tables for both spread definitions, an unleveraged and a
/// leveraged projection sweep (each evaluated at the series' s_av and
/// q_av; first column carries the spread fed in), and a summary.
struct ReportBundle {
    std::string oc_spread_series;    // date,s_i
    std::string range_spread_series; // date,q_i
    std::string sweep_unleveraged;   // spread,alpha,margin,value
    std::string sweep_leveraged;     // spread,alpha,margin,value
    std::string summary;             // key=value lines
};

inline ReportBundle build_report_bundle(const QuoteSeries& series, int horizon,
                                        double leveraged_margin) {
    if (series.empty()) throw ArgumentError("report needs a non-empty series");
    SpreadSeries spreads = compute_spread_series(series);
    SpreadStats stats = compute_spread_stats(spreads);

    ReportBundle bundle;
    bundle.oc_spread_series = "date,s_i\n";
    bundle.range_spread_series = "date,q_i\n";
    for (std::size_t i = 0; i < spreads.size(); ++i) {
        std::string date = format_date(spreads.dates[i]);
        bundle.oc_spread_series += date + "," + format_fixed(spreads.oc[i], 9) + "\n";
        bundle.range_spread_series += date + "," + format_fixed(spreads.range[i], 9) + "\n";
    }

    auto sweep_block = [&](double margin) {
        std::string out = "spread,alpha,margin,value\n";
        for (double spread : {stats.s_av, stats.q_av}) {
            for (const auto& row : alpha_sweep(spread, horizon, {margin})) {
                out += format_fixed(spread, 9) + "," + format_compact(row.alpha) + "," +
                       format_compact(row.margin) + "," + format_fixed(row.value, 6) + "\n";
            }
        }
        return out;
    };
    bundle.sweep_unleveraged = sweep_block(100.0);
    bundle.sweep_leveraged = sweep_block(leveraged_margin);

    auto break_even_text = [&](double spread) {
        if (spread == 0.0) return std::string("0"); // nothing at risk, 100 from the start
        auto alpha = break_even_alpha(spread, horizon, 100.0);
        return alpha ? std::to_string(*alpha) : std::string("never");
    };
    bundle.summary = "symbol=" + series.symbol + "\n";
    bundle.summary += "n=" + std::to_string(stats.n) + "\n";
    bundle.summary += "start_date=" + format_date(series.quotes.front().date) + "\n";
    bundle.summary += "end_date=" + format_date(series.quotes.back().date) + "\n";
    bundle.summary += "s_av=" + format_fixed(stats.s_av, 9) + "\n";
    bundle.summary += "q_av=" + format_fixed(stats.q_av, 9) + "\n";
    bundle.summary += "horizon=" + std::to_string(horizon) + "\n";
    bundle.summary += "leveraged_margin=" + format_compact(leveraged_margin) + "\n";
    bundle.summary += "break_even_alpha_oc=" + break_even_text(stats.s_av) + "\n";
    bundle.summary += "break_even_alpha_range=" + break_even_text(stats.q_av) + "\n";
    return bundle;
}

/// Writes the five bundle files into out_dir (created if missing). Each
/// file lands atomically; any error leaves no half-written file behind.
inline void write_report_bundle(const QuoteSeries& series, const std::filesystem::path& out_dir,
                                int horizon = 30, double leveraged_margin = 200.0) {
    ReportBundle bundle = build_report_bundle(series, horizon, leveraged_margin);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
    write_file_atomic(out_dir / "oc_spread_series.csv", bundle.oc_spread_series);
    write_file_atomic(out_dir / "range_spread_series.csv", bundle.range_spread_series);
    write_file_atomic(out_dir / "sweep_unleveraged.csv", bundle.sweep_unleveraged);
    write_file_atomic(out_dir / "sweep_leveraged.csv", bundle.sweep_leveraged);
    write_file_atomic(out_dir / "summary.txt", bundle.summary);
}

} // namespace daytrade
