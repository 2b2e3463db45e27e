#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "daytrade/backtest.hpp"
#include "daytrade/errors.hpp"
#include "daytrade/pdt.hpp"
#include "daytrade/projection.hpp"
#include "daytrade/quotes.hpp"
#include "daytrade/reporting.hpp"
#include "daytrade/spreads.hpp"

namespace daytrade::cli {

// Exit codes: 0 success, 1 domain/validation error, 2 usage error, 3 I/O.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;
inline constexpr int kExitIoError = 3;

namespace detail {

/// Emits a document to --out (atomically) when given, else to the stream.
inline void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << content;
    } else {
        write_file_atomic(out_path, content);
    }
}

inline Date parse_date_flag(const std::string& text, const char* flag) {
    auto d = try_parse_date(text);
    if (!d)
        throw ArgumentError(std::string(flag) + " expects an ISO date (YYYY-MM-DD), got '" +
                            text + "'");
    return *d;
}

} // namespace detail

/// Dispatches one invocation. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Single-instrument daily OHLC analytics: spread statistics, compounded\n"
                 "return projections with margin, round-trip backtests and pattern-day-\n"
                 "trader checks."};
    app.name("daytrade");
    app.require_subcommand(1);

    // ingest
    struct {
        std::string csv, symbol, store, start, end;
        bool decimal_comma = false;
    } ingest;
    auto* cmd_ingest = app.add_subcommand("ingest", "Parse a quote CSV into a store file");
    cmd_ingest->add_option("--csv", ingest.csv, "input CSV path")->required();
    cmd_ingest->add_option("--symbol", ingest.symbol, "ticker symbol")->required();
    cmd_ingest->add_option("--out", ingest.store, "store file to write")->required();
    cmd_ingest->add_flag("--decimal-comma", ingest.decimal_comma,
                         "input uses ',' decimals and ';' field separators");
    cmd_ingest->add_option("--start", ingest.start, "keep only dates >= this (YYYY-MM-DD)");
    cmd_ingest->add_option("--end", ingest.end, "keep only dates <= this (YYYY-MM-DD)");
    cmd_ingest->callback([&] {
        QuoteSeries series =
            parse_csv_file(ingest.csv, ingest.symbol, CsvOptions{ingest.decimal_comma});
        if (!ingest.start.empty() || !ingest.end.empty()) {
            Date start = ingest.start.empty() ? Date{std::chrono::year{1}, std::chrono::month{1},
                                                     std::chrono::day{1}}
                                              : detail::parse_date_flag(ingest.start, "--start");
            Date end = ingest.end.empty() ? Date{std::chrono::year{9999}, std::chrono::month{12},
                                                 std::chrono::day{31}}
                                          : detail::parse_date_flag(ingest.end, "--end");
            series = slice_by_date(series, start, end);
        }
        save_store(series, ingest.store);
        std::string doc = "store=" + ingest.store + "\n";
        doc += "symbol=" + series.symbol + "\n";
        doc += "n=" + std::to_string(series.size()) + "\n";
        if (!series.empty()) {
            doc += "start_date=" + format_date(series.quotes.front().date) + "\n";
            doc += "end_date=" + format_date(series.quotes.back().date) + "\n";
        }
        out << doc;
    });

    // stats
    struct {
        std::string store, out_path, series_path;
    } stats;
    auto* cmd_stats = app.add_subcommand("stats", "Spread statistics of a stored series");
    cmd_stats->add_option("--store", stats.store, "store file")->required();
    cmd_stats->add_option("--out", stats.out_path, "write the document here instead of stdout");
    cmd_stats->add_option("--series", stats.series_path, "also write per-day date,s_i,q_i CSV");
    cmd_stats->callback([&] {
        QuoteSeries series = load_store(stats.store);
        SpreadSeries spreads = compute_spread_series(series);
        SpreadStats st = compute_spread_stats(spreads);
        detail::emit(stats_document(series, st), stats.out_path, out);
        if (!stats.series_path.empty())
            write_file_atomic(stats.series_path, spread_series_csv(spreads));
    });

    // project
    struct {
        double spread = 0.0, margin = 100.0;
        int alpha = 0, horizon = 30;
    } proj;
    auto* cmd_project = app.add_subcommand("project", "Compounded return projection");
    cmd_project->add_option("--spread", proj.spread, "average daily spread, percent")
        ->required();
    cmd_project->add_option("--alpha", proj.alpha, "winning days")->required();
    cmd_project->add_option("--horizon", proj.horizon, "total working days")->capture_default_str();
    cmd_project->add_option("--margin", proj.margin, "margin percent (100 = unleveraged)")
        ->capture_default_str();
    cmd_project->callback([&] {
        ProjectionResult result =
            project(ProjectionParams{proj.spread, proj.alpha, proj.horizon, proj.margin});
        out << "value=" << format_fixed(result.value, 6) << "\n";
    });

    // sweep
    struct {
        double spread = 0.0, alpha_step = 1.0;
        int horizon = 30;
        std::vector<double> margins{100.0};
        std::string out_path;
    } sweep;
    auto* cmd_sweep = app.add_subcommand("sweep", "Projection table over winning-day counts");
    cmd_sweep->add_option("--spread", sweep.spread, "average daily spread, percent")
        ->required();
    cmd_sweep->add_option("--horizon", sweep.horizon, "total working days")->capture_default_str();
    cmd_sweep->add_option("--margins", sweep.margins, "margin list, e.g. 100,200")
        ->delimiter(',');
    cmd_sweep->add_option("--alpha-step", sweep.alpha_step,
                          "row spacing; fractional steps add interpolated rows")
        ->capture_default_str();
    cmd_sweep->add_option("--out", sweep.out_path, "write CSV here instead of stdout");
    cmd_sweep->callback([&] {
        auto rows = alpha_sweep(sweep.spread, sweep.horizon, sweep.margins, sweep.alpha_step);
        bool interpolated = std::any_of(rows.begin(), rows.end(),
                                        [](const SweepRow& r) { return r.interpolated; });
        detail::emit(sweep_csv(rows, interpolated), sweep.out_path, out);
    });

    // backtest
    struct {
        std::string store, strategy, out_path, daily_path;
        double commission = 0.0, margin = 100.0, equity = 0.0;
    } bt;
    auto* cmd_backtest = app.add_subcommand("backtest", "Daily round-trip simulation");
    cmd_backtest->add_option("--store", bt.store, "store file")->required();
    cmd_backtest
        ->add_option("--strategy", bt.strategy,
                     "open-close-long | open-close-short | open-close-oracle | range-oracle")
        ->required();
    cmd_backtest->add_option("--equity", bt.equity, "starting equity, currency")->required();
    cmd_backtest->add_option("--commission", bt.commission, "flat fee per execution")
        ->capture_default_str();
    cmd_backtest->add_option("--margin", bt.margin, "margin percent (>= 100)")->capture_default_str();
    cmd_backtest->add_option("--out", bt.out_path, "write the document here instead of stdout");
    cmd_backtest->add_option("--daily", bt.daily_path,
                             "also write per-day date,return_pct,equity CSV");
    cmd_backtest->callback([&] {
        auto strategy = strategy_from_name(bt.strategy);
        if (!strategy)
            throw ArgumentError("unknown strategy '" + bt.strategy + "'");
        QuoteSeries series = load_store(bt.store);
        CostModel costs{bt.commission, bt.margin};
        BacktestResult result = run_backtest(series, *strategy, costs, bt.equity);
        detail::emit(backtest_document(series, *strategy, costs, result), bt.out_path, out);
        if (!bt.daily_path.empty())
            write_file_atomic(bt.daily_path, backtest_daily_csv(result));
    });

    // pdt-check
    struct {
        std::string trades, equity, out_path, windows_path;
    } pdt;
    auto* cmd_pdt = app.add_subcommand("pdt-check", "Pattern-day-trader rule check");
    cmd_pdt->add_option("--trades", pdt.trades, "trade-log CSV: date,day_trades,other_trades")
        ->required();
    cmd_pdt->add_option("--equity", pdt.equity, "equity CSV: date,equity");
    cmd_pdt->add_option("--out", pdt.out_path, "write the document here instead of stdout");
    cmd_pdt->add_option("--windows", pdt.windows_path, "also write the per-window CSV");
    cmd_pdt->callback([&] {
        auto log = parse_trade_log_csv(read_file(pdt.trades));
        std::vector<EquityCheckpoint> checkpoints;
        if (!pdt.equity.empty()) checkpoints = parse_equity_csv(read_file(pdt.equity));
        PdtReport report = check_pdt(log, checkpoints);
        detail::emit(pdt_document(report, log.size()), pdt.out_path, out);
        if (!pdt.windows_path.empty())
            write_file_atomic(pdt.windows_path, pdt_windows_csv(report));
    });

    // report
    struct {
        std::string store, out_dir;
        int horizon = 30;
        double margin = 200.0;
    } rep;
    auto* cmd_report = app.add_subcommand("report", "Write the full reproduction bundle");
    cmd_report->add_option("--store", rep.store, "store file")->required();
    cmd_report->add_option("--out-dir", rep.out_dir, "directory for the bundle")->required();
    cmd_report->add_option("--horizon", rep.horizon, "sweep horizon")->capture_default_str();
    cmd_report->add_option("--margin", rep.margin, "margin for the leveraged sweep")
        ->capture_default_str();
    cmd_report->callback([&] {
        QuoteSeries series = load_store(rep.store);
        write_report_bundle(series, rep.out_dir, rep.horizon, rep.margin);
        out << "out_dir=" << rep.out_dir << "\n";
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
        return kExitOk;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsageError;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
}

} // namespace daytrade::cli
