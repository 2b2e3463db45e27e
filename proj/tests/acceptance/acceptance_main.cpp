// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
// Reference values marked "oracle" are frozen from scripts/oracle.py
// (arbitrary-precision recomputation); fixture ground truth comes from
// `scripts/oracle.py fixture-truth` over data/msft_synthetic.csv.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "daytrade/backtest.hpp"
#include "daytrade/cli.hpp"
#include "daytrade/pdt.hpp"
#include "daytrade/projection.hpp"
#include "daytrade/quotes.hpp"
#include "daytrade/reporting.hpp"
#include "daytrade/spreads.hpp"
#include "support/generators.hpp"

using namespace daytrade;

namespace {

struct CriterionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& what) {
    if (!condition) throw CriterionFailure(what);
}

double rel_diff(double a, double b) {
    if (a == b) return 0.0;
    return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b));
}

/// Reads "key=value" documents emitted by the CLI.
double doc_value(const std::string& doc, const std::string& key) {
    std::istringstream in(doc);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(key + "=", 0) == 0) return std::stod(line.substr(key.size() + 1));
    }
    throw CriterionFailure("document lacks key " + key);
}

int run_cli(std::vector<std::string> args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    if (out_text) *out_text = out.str();
    if (code != 0) throw CriterionFailure("cli failed: " + err.str());
    return code;
}

// ---------------------------------------------------------------- criteria

// Reference averages reproduced from the bundled fixture through the real
// CLI path, plus the fixture's exact recomputed ground truth.
void criterion_1() {
    testsupport::TempDir tmp("acc1");
    run_cli({"ingest", "--csv", testsupport::fixture_csv().string(), "--symbol", "MSFT",
             "--out", (tmp / "msft.store").string()});
    std::string doc;
    run_cli({"stats", "--store", (tmp / "msft.store").string()}, &doc);

    require(static_cast<int>(doc_value(doc, "n")) == 756, "fixture must hold 756 days");
    double s_av = doc_value(doc, "s_av");
    double q_av = doc_value(doc, "q_av");
    require(std::fabs(s_av - 0.706059344) <= 0.05,
            "s_av " + std::to_string(s_av) + " not within 0.05 of 0.706059344");
    require(std::fabs(q_av - 1.57655549) <= 0.05,
            "q_av " + std::to_string(q_av) + " not within 0.05 of 1.57655549");

    // synthetic-fixture regression at full precision (oracle ground truth)
    SpreadStats st = compute_spread_stats(parse_csv_file(testsupport::fixture_csv(), "MSFT"));
    require(rel_diff(st.s_av, 0.70581635705661169) < 1e-9, "s_av drifted from ground truth");
    require(rel_diff(st.q_av, 1.5771087034769649) < 1e-9, "q_av drifted from ground truth");
}

// Spread properties on 10,000 random valid quotes. Dominance runs on
// full-resolution quotes; the scaled comparison runs on cent-grid quotes
// (nonzero spreads >= 0.05%) because near-equal open/close pairs are
// ill-conditioned under the scaled prices' double rounding.
void criterion_2() {
    std::mt19937_64 rng(20001);
    std::uniform_real_distribution<double> scale_dist(0.1, 900.0);

    QuoteSeries series{"PROP", {}};
    for (int i = 0; i < 10000; ++i) {
        DailyQuote q = testsupport::random_quote(rng, i);
        double s_i = oc_spread(q);
        double q_i = range_spread(q);
        require(q_i >= s_i, "range spread must dominate oc spread");
        series.quotes.push_back(q);

        DailyQuote cq = testsupport::random_cent_quote(rng, i);
        require(range_spread(cq) >= oc_spread(cq), "range spread must dominate oc spread");
        double k = scale_dist(rng);
        DailyQuote scaled = cq;
        scaled.open = Decimal::from_double(cq.open.to_double() * k);
        scaled.high = Decimal::from_double(cq.high.to_double() * k);
        scaled.low = Decimal::from_double(cq.low.to_double() * k);
        scaled.close = Decimal::from_double(cq.close.to_double() * k);
        require(rel_diff(oc_spread(cq), oc_spread(scaled)) < 1e-12,
                "oc spread not scale invariant");
        require(rel_diff(range_spread(cq), range_spread(scaled)) < 1e-12,
                "range spread not scale invariant");
    }

    SpreadSeries spreads = compute_spread_series(series);
    SpreadStats st = compute_spread_stats(spreads);
    double s_sum = 0.0, q_sum = 0.0; // independent order: plain sequential
    for (std::size_t i = 0; i < spreads.size(); ++i) {
        s_sum += spreads.oc[i];
        q_sum += spreads.range[i];
    }
    require(rel_diff(st.s_av, s_sum / 10000.0) < 1e-9, "s_av disagrees with oracle sum");
    require(rel_diff(st.q_av, q_sum / 10000.0) < 1e-9, "q_av disagrees with oracle sum");
}

// Closed-form projection vs day-by-day products, margin identities.
void criterion_3() {
    std::mt19937_64 rng(30001);
    std::uniform_real_distribution<double> spread_dist(0.0, 10.0);
    std::uniform_real_distribution<double> margin_dist(0.0, 500.0);
    std::uniform_int_distribution<int> horizon_dist(1, 60);
    int accepted = 0;
    while (accepted < 1000) {
        double spread = spread_dist(rng);
        double margin = margin_dist(rng);
        int horizon = horizon_dist(rng);
        if ((margin / 100.0) * (spread / 100.0) >= 1.0) continue; // ruin region
        ++accepted;
        int alpha = std::uniform_int_distribution<int>(0, horizon)(rng);

        double value = project(ProjectionParams{spread, alpha, horizon, margin}).value;

        std::vector<int> signs(horizon, -1);
        std::fill(signs.begin(), signs.begin() + alpha, +1);
        std::shuffle(signs.begin(), signs.end(), rng);
        double step = (margin / 100.0) * (spread / 100.0);
        double wealth = 100.0;
        for (int sign : signs) wealth *= 1.0 + sign * step;
        require(rel_diff(value, wealth) < 1e-12, "closed form vs iterated product");

        double s = spread / 100.0;
        double plain = std::pow(1.0 + s, alpha) *
                       std::pow(1.0 - s, static_cast<double>(horizon - alpha)) * 100.0;
        require(project(ProjectionParams{spread, alpha, horizon, 100.0}).value == plain,
                "margin=100 must equal the unleveraged formula");
        require(project(ProjectionParams{spread, alpha, horizon, 0.0}).value == 100.0,
                "margin=0 must give exactly 100");
    }
}

// Frozen anchors recomputed by scripts/oracle.py, and the break-even scan.
void criterion_4() {
    double all_wins = project(ProjectionParams{0.706059344, 30, 30, 100.0}).value;
    require(std::fabs(all_wins - 123.50031551021418) < 1e-2,
            "all-wins anchor off: " + std::to_string(all_wins));
    double half_wins = project(ProjectionParams{0.706059344, 15, 30, 100.0}).value;
    require(std::fabs(half_wins - 99.925248119585015) < 1e-2,
            "half-wins anchor off: " + std::to_string(half_wins));

    auto be = break_even_alpha(0.706059344, 30, 100.0);
    require(be.has_value() && *be == 16, "break-even alpha must be 16");
    std::optional<int> brute;
    for (int alpha = 0; alpha <= 30; ++alpha) {
        if (project(ProjectionParams{0.706059344, alpha, 30, 100.0}).value >= 100.0) {
            brute = alpha;
            break;
        }
    }
    require(be == brute, "break-even disagrees with brute-force scan");
}

// Even-split projections land strictly below 100 and match (1-s^2)^(n/2).
void criterion_5() {
    for (int n = 2; n <= 60; n += 2) {
        for (int tenth = 1; tenth <= 50; ++tenth) {
            double spread = tenth / 10.0; // (0, 5] percent
            double s = spread / 100.0;
            double value = project(ProjectionParams{spread, n / 2, n, 100.0}).value;
            require(value < 100.0, "even split must lose to volatility drag");
            double drag = std::pow(1.0 - s * s, n / 2) * 100.0;
            require(rel_diff(value, drag) < 1e-12, "drag closed form mismatch");
        }
    }
}

// Backtest terminal value equals the projection on constant-move series.
void criterion_6() {
    std::mt19937_64 rng(60001);
    std::uniform_int_distribution<int> horizon_dist(1, 60);
    std::uniform_int_distribution<int> move_bp(1, 300);
    std::uniform_int_distribution<int> lev_dist(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        int horizon = horizon_dist(rng);
        int alpha = std::uniform_int_distribution<int>(0, horizon)(rng);
        double move = move_bp(rng) / 100.0; // exact two-decimal percent
        double margin = lev_dist(rng) * 100.0;

        QuoteSeries series{"SYN", {}};
        for (int i = 0; i < horizon; ++i) {
            double close = i < alpha ? 100.0 * (1.0 + move / 100.0)
                                     : 100.0 * (1.0 - move / 100.0);
            series.quotes.push_back(testsupport::make_quote(i, 100.0, std::max(100.0, close),
                                                            std::min(100.0, close), close));
        }
        BacktestResult bt =
            run_backtest(series, Strategy::open_close_long, CostModel{0.0, margin}, 10000.0);
        double expected = project(ProjectionParams{move, alpha, horizon, margin}).value;
        require(rel_diff(bt.terminal_value_pct, expected) < 1e-9,
                "backtest/projection bridge broke");
    }
}

// check_pdt vs an independent enumerator, plus the named edge cases.
void criterion_7() {
    auto brute_flagged = [](const std::vector<TradeDay>& log,
                            std::pair<Date, Date>* first) -> bool {
        std::vector<TradeDay> days;
        for (const auto& td : log) {
            if (!days.empty() && days.back().date == td.date) {
                days.back().day_trades += td.day_trades;
                days.back().other_trades += td.other_trades;
            } else {
                days.push_back(td);
            }
        }
        std::size_t m = days.size();
        if (m == 0) return false;
        std::size_t starts = m >= 5 ? m - 4 : 1;
        for (std::size_t i = 0; i < starts; ++i) {
            double day_trades = 0.0, total = 0.0;
            for (std::size_t j = i; j < std::min(i + 5, m); ++j) {
                day_trades += days[j].day_trades;
                total += days[j].day_trades + days[j].other_trades;
            }
            if (day_trades >= 4.0 && total > 0.0 && day_trades / total > 0.06) {
                if (first) *first = {days[i].date, days[std::min(i + 5, m) - 1].date};
                return true;
            }
        }
        return false;
    };

    std::mt19937_64 rng(70001);
    std::uniform_int_distribution<int> len_dist(0, 100);
    std::uniform_int_distribution<int> gap_dist(1, 4);
    std::uniform_int_distribution<int> dt_dist(0, 6);
    std::uniform_int_distribution<int> ot_dist(0, 80);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<TradeDay> log;
        int offset = 0;
        int len = len_dist(rng);
        for (int i = 0; i < len; ++i) {
            offset += gap_dist(rng);
            int dt = unit(rng) < 0.35 ? 0 : dt_dist(rng);
            int ot = unit(rng) < 0.35 ? 0 : ot_dist(rng);
            log.push_back({testsupport::date_at(offset), dt, ot});
        }
        std::pair<Date, Date> first{};
        bool expected = brute_flagged(log, &first);
        PdtReport got = check_pdt(log, {});
        require(got.is_pattern_day_trader == expected, "brute-force disagreement");
        if (expected) {
            require(got.first_trigger_window.has_value() &&
                        got.first_trigger_window->first == first.first &&
                        got.first_trigger_window->second == first.second,
                    "first trigger window disagreement");
        }
    }

    // count threshold alone: three day trades never flag
    std::vector<TradeDay> three = {{testsupport::date_at(0), 3, 0}};
    require(!check_pdt(three, {}).is_pattern_day_trader, "3 day trades must not flag");
    // percentage threshold alone: four day trades diluted to 4% stay clear
    std::vector<TradeDay> diluted = {{testsupport::date_at(0), 4, 0},
                                     {testsupport::date_at(1), 0, 96}};
    require(!check_pdt(diluted, {}).is_pattern_day_trader, "diluted log must not flag");
    // a daily round-trip backtest log is flagged by construction
    std::mt19937_64 rng2(70002);
    QuoteSeries series = testsupport::random_series(rng2, 30);
    BacktestResult bt =
        run_backtest(series, Strategy::open_close_oracle, CostModel{0.0, 100.0}, 50000.0);
    require(bt.pdt.is_pattern_day_trader, "daily round-trip backtest must be flagged");
}

// Bit-identical persistence and byte-identical report bundles.
void criterion_8() {
    testsupport::TempDir tmp("acc8");
    QuoteSeries fixture = parse_csv_file(testsupport::fixture_csv(), "MSFT");

    save_store(fixture, tmp / "a.store");
    QuoteSeries loaded = load_store(tmp / "a.store");
    require(loaded == fixture, "store round trip must be exact");
    save_store(loaded, tmp / "b.store");
    require(read_file(tmp / "a.store") == read_file(tmp / "b.store"),
            "store bytes must be stable");

    run_cli({"report", "--store", (tmp / "a.store").string(), "--out-dir",
             (tmp / "r1").string()});
    run_cli({"report", "--store", (tmp / "a.store").string(), "--out-dir",
             (tmp / "r2").string()});
    for (const char* name : {"oc_spread_series.csv", "range_spread_series.csv",
                             "sweep_unleveraged.csv", "sweep_leveraged.csv", "summary.txt"}) {
        require(read_file(tmp / "r1" / name) == read_file(tmp / "r2" / name),
                std::string("bundle file differs between runs: ") + name);
    }
}

struct Criterion {
    int id;
    const char* label;
    long budget_ms;
    std::function<void()> body;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "reference spread averages via the CLI on the bundled fixture", 1000, criterion_1},
        {2, "spread invariants on 10,000 random quotes", 5000, criterion_2},
        {3, "closed-form projection equals iterated products (1,000 tuples)", 5000,
         criterion_3},
        {4, "frozen projection anchors and break-even alpha", 1000, criterion_4},
        {5, "volatility drag identity on even horizons", 1000, criterion_5},
        {6, "backtest bridges to the projection (200 configurations)", 5000, criterion_6},
        {7, "PDT checker vs brute-force enumeration (500 logs)", 5000, criterion_7},
        {8, "bit-exact persistence and byte-identical report bundles", 5000, criterion_8},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string failure;
        try {
            c.body();
        } catch (const std::exception& e) {
            failure = e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        if (failure.empty() && ms > c.budget_ms) {
            failure = "exceeded " + std::to_string(c.budget_ms) + " ms budget";
        }
        if (failure.empty()) {
            std::printf("criterion %d: PASS (%ld ms) - %s\n", c.id, static_cast<long>(ms),
                        c.label);
        } else {
            ++failures;
            std::printf("criterion %d: FAIL (%ld ms) - %s: %s\n", c.id, static_cast<long>(ms),
                        c.label, failure.c_str());
        }
    }
    return failures == 0 ? 0 : 1;
}
