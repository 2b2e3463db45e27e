#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "daytrade/errors.hpp"
#include "daytrade/quotes.hpp"

namespace daytrade {

/// Absolute open-to-close move of one day, percent: |close - open| / open * 100.
inline double oc_spread(const DailyQuote& quote) {
    double open = quote.open.to_double();
    double close = quote.close.to_double();
    return std::fabs((close - open) / open * 100.0);
}

/// Low-to-high range of one day, percent: (high - low) / low * 100.
/// high >= low always, so no absolute value is needed.
inline double range_spread(const DailyQuote& quote) {
    double low = quote.low.to_double();
    double high = quote.high.to_double();
    return (high - low) / low * 100.0;
}

/// Per-day spread series of a quote series; element-wise range >= oc.
struct SpreadSeries {
    std::vector<Date> dates;
    std::vector<double> oc;    // open-to-close, percent
    std::vector<double> range; // low-to-high, percent

    std::size_t size() const noexcept { return dates.size(); }
};

struct SpreadStats {
    std::size_t n = 0;
    double s_av = 0.0; // mean oc spread, percent
    double q_av = 0.0; // mean range spread, percent
    double s_min = 0.0, s_max = 0.0, s_median = 0.0;
    double q_min = 0.0, q_max = 0.0, q_median = 0.0;
};

namespace detail {

/// Pairwise (tree) summation keeps the rounding error O(log n).
inline double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 16) {
        double acc = 0.0;
        for (double v : values) acc += v;
        return acc;
    }
    std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

inline double median_of(std::vector<double> values) {
    std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + mid, values.end());
    double upper = values[mid];
    if (values.size() % 2 == 1) return upper;
    double lower = *std::max_element(values.begin(), values.begin() + mid);
    return (lower + upper) / 2.0;
}

} // namespace detail

inline SpreadSeries compute_spread_series(const QuoteSeries& series) {
    SpreadSeries out;
    out.dates.reserve(series.size());
    out.oc.reserve(series.size());
    out.range.reserve(series.size());
    for (const auto& q : series.quotes) {
        out.dates.push_back(q.date);
        out.oc.push_back(oc_spread(q));
        out.range.push_back(range_spread(q));
    }
    return out;
}

inline SpreadStats compute_spread_stats(const SpreadSeries& spreads) {
    if (spreads.size() == 0)
        throw ArgumentError("spread statistics need a non-empty series");
    SpreadStats st;
    st.n = spreads.size();
    st.s_av = detail::pairwise_sum(spreads.oc) / static_cast<double>(st.n);
    st.q_av = detail::pairwise_sum(spreads.range) / static_cast<double>(st.n);
    auto [s_lo, s_hi] = std::minmax_element(spreads.oc.begin(), spreads.oc.end());
    auto [q_lo, q_hi] = std::minmax_element(spreads.range.begin(), spreads.range.end());
    st.s_min = *s_lo;
    st.s_max = *s_hi;
    st.q_min = *q_lo;
    st.q_max = *q_hi;
    st.s_median = detail::median_of(spreads.oc);
    st.q_median = detail::median_of(spreads.range);
    return st;
}

inline SpreadStats compute_spread_stats(const QuoteSeries& series) {
    return compute_spread_stats(compute_spread_series(series));
}

} // namespace daytrade
