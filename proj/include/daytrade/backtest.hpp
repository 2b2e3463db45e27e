#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "daytrade/errors.hpp"
#include "daytrade/pdt.hpp"
#include "daytrade/quotes.hpp"

namespace daytrade {

/// Deterministic one-round-trip-per-day strategies over a single day's
/// bar. The two oracle variants assume perfect hindsight and bound what
/// daily round trips can extract from a bar.
enum class Strategy {
    open_close_long,   // buy the open, sell the close
    open_close_short,  // short the open, cover the close
    open_close_oracle, // always on the right side of open -> close
    range_oracle,      // buys the exact low, sells the exact high
};

inline const char* strategy_name(Strategy s) noexcept {
    switch (s) {
        case Strategy::open_close_long: return "open-close-long";
        case Strategy::open_close_short: return "open-close-short";
        case Strategy::open_close_oracle: return "open-close-oracle";
        case Strategy::range_oracle: return "range-oracle";
    }
    return "?";
}

inline std::optional<Strategy> strategy_from_name(std::string_view name) noexcept {
    if (name == "open-close-long") return Strategy::open_close_long;
    if (name == "open-close-short") return Strategy::open_close_short;
    if (name == "open-close-oracle") return Strategy::open_close_oracle;
    if (name == "range-oracle") return Strategy::range_oracle;
    return std::nullopt;
}

/// Signed unleveraged return of one day's round trip, percent.
inline double strategy_return(Strategy strategy, const DailyQuote& quote) {
    double open = quote.open.to_double();
    double close = quote.close.to_double();
    switch (strategy) {
        case Strategy::open_close_long: return (close - open) / open * 100.0;
        case Strategy::open_close_short: return (open - close) / open * 100.0;
        case Strategy::open_close_oracle: return std::fabs((close - open) / open) * 100.0;
        case Strategy::range_oracle: {
            double low = quote.low.to_double();
            double high = quote.high.to_double();
            return (high - low) / low * 100.0;
        }
    }
    return 0.0;
}

/// Per-execution flat commission and margin buying power. Two executions
/// per daily round trip.
struct CostModel {
    double commission_per_trade = 0.0; // currency, >= 0
    double margin = 100.0;             // percent, >= 100
};

struct RuinEvent {
    Date date{};
    std::size_t day_index = 0; // 0-based into the traded days
};

struct BacktestResult {
    std::vector<Date> dates;           // traded days (may stop early on ruin)
    std::vector<double> daily_returns; // leveraged, pre-commission, percent
    std::vector<double> equity_curve;  // post-commission, currency
    double starting_equity = 0.0;
    double total_commissions = 0.0;
    double terminal_value_pct = 0.0; // last equity / starting equity * 100
    std::optional<RuinEvent> ruin;
    PdtReport pdt;
};

/// Runs one round trip per day over the whole series: equity compounds
/// by (margin/100) * strategy_return, then pays two flat commissions.
/// Stops at the first day equity drops to zero or below, marking ruin.
/// The PDT report is computed from the implied trade log (one day trade
/// per traded day, equity checkpoints at each close).
inline BacktestResult run_backtest(const QuoteSeries& series, Strategy strategy,
                                   const CostModel& costs, double starting_equity) {
    if (series.empty()) throw ArgumentError("backtest needs a non-empty series");
    if (!(starting_equity > 0.0))
        throw ArgumentError("starting equity must be > 0, got " +
                            std::to_string(starting_equity));
    if (costs.commission_per_trade < 0.0)
        throw ArgumentError("commission must be >= 0");
    if (costs.margin < 100.0)
        throw ArgumentError("margin must be >= 100 percent, got " +
                            std::to_string(costs.margin));

    BacktestResult result;
    result.starting_equity = starting_equity;
    double equity = starting_equity;
    double leverage = costs.margin / 100.0;

    for (std::size_t i = 0; i < series.quotes.size(); ++i) {
        const auto& quote = series.quotes[i];
        double day_return = leverage * strategy_return(strategy, quote);
        equity *= 1.0 + day_return / 100.0;
        equity -= 2.0 * costs.commission_per_trade;
        result.total_commissions += 2.0 * costs.commission_per_trade;
        result.dates.push_back(quote.date);
        result.daily_returns.push_back(day_return);
        result.equity_curve.push_back(equity);
        if (equity <= 0.0) {
            result.ruin = RuinEvent{quote.date, i};
            break;
        }
    }

    result.terminal_value_pct = result.equity_curve.back() / starting_equity * 100.0;

    std::vector<TradeDay> trade_log;
    std::vector<EquityCheckpoint> checkpoints;
    trade_log.reserve(result.dates.size());
    checkpoints.reserve(result.dates.size());
    for (std::size_t i = 0; i < result.dates.size(); ++i) {
        trade_log.push_back({result.dates[i], 1, 0});
        checkpoints.push_back({result.dates[i], result.equity_curve[i]});
    }
    result.pdt = check_pdt(trade_log, checkpoints);
    return result;
}

} // namespace daytrade
