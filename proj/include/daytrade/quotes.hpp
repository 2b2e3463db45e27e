#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "daytrade/dates.hpp"
#include "daytrade/decimal.hpp"
#include "daytrade/errors.hpp"
#include "daytrade/io.hpp"
#include "daytrade/text.hpp"

namespace daytrade {

/// One trading day's open/high/low/close record.
struct DailyQuote {
    Date date{};
    Decimal open;
    Decimal high;
    Decimal low;
    Decimal close;

    friend bool operator==(const DailyQuote&, const DailyQuote&) = default;
};

/// Throws ValidationError naming the date unless
/// 0 < low <= min(open, close), max(open, close) <= high.
inline void validate_quote(const DailyQuote& q) {
    auto fail = [&](const std::string& what) {
        throw ValidationError(format_date(q.date) + ": " + what);
    };
    if (!q.open.is_positive() || !q.high.is_positive() || !q.low.is_positive() ||
        !q.close.is_positive()) {
        fail("prices must be strictly positive");
    }
    if (q.low > q.high) fail("low " + q.low.str() + " > high " + q.high.str());
    if (q.open < q.low || q.open > q.high)
        fail("open " + q.open.str() + " outside [" + q.low.str() + ", " + q.high.str() + "]");
    if (q.close < q.low || q.close > q.high)
        fail("close " + q.close.str() + " outside [" + q.low.str() + ", " + q.high.str() + "]");
}

/// Date-ordered series of validated daily quotes for one symbol.
struct QuoteSeries {
    std::string symbol;
    std::vector<DailyQuote> quotes; // dates strictly increasing

    std::size_t size() const noexcept { return quotes.size(); }
    bool empty() const noexcept { return quotes.empty(); }

    friend bool operator==(const QuoteSeries&, const QuoteSeries&) = default;
};

/// Checks the series invariants without reordering: strictly increasing
/// dates and per-quote validity.
inline void validate_series(const QuoteSeries& series) {
    for (std::size_t i = 1; i < series.quotes.size(); ++i) {
        if (series.quotes[i].date == series.quotes[i - 1].date)
            throw ValidationError("duplicate date " + format_date(series.quotes[i].date));
        if (series.quotes[i].date < series.quotes[i - 1].date)
            throw ValidationError("dates not ascending at " +
                                  format_date(series.quotes[i].date));
    }
    for (const auto& q : series.quotes) validate_quote(q);
}

/// Sorts ascending by date, then rejects duplicates and invalid quotes.
inline void normalize_and_validate(QuoteSeries& series) {
    std::stable_sort(series.quotes.begin(), series.quotes.end(),
                     [](const DailyQuote& a, const DailyQuote& b) { return a.date < b.date; });
    validate_series(series);
}

struct CsvOptions {
    /// Vendor files using ',' as the decimal separator delimit fields
    /// with ';'. Enabling this switches both on read.
    bool decimal_comma = false;
};

/// Parses the canonical quote CSV: header "date,open,high,low,close"
/// (extra trailing columns such as volume are permitted and ignored),
/// ISO dates, period decimals, LF or CRLF, optional UTF-8 BOM. Rows may
/// arrive in any date order (vendor exports are often newest-first);
/// they are sorted ascending. Duplicate dates and invariant-violating
/// rows are errors, never silently dropped.
inline QuoteSeries parse_csv(std::string_view text, std::string symbol,
                             const CsvOptions& options = {}) {
    const char sep = options.decimal_comma ? ';' : ',';

    QuoteSeries series;
    series.symbol = std::move(symbol);
    bool header_seen = false;

    detail::for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        auto cells = detail::split(line, sep);
        if (!header_seen) {
            static constexpr std::string_view expected[5] = {"date", "open", "high", "low",
                                                             "close"};
            if (cells.size() < 5)
                throw ParseError(line_no, std::string("header must start with date") + sep +
                                              "open" + sep + "high" + sep + "low" + sep +
                                              "close");
            for (int i = 0; i < 5; ++i) {
                if (!detail::iequals(detail::trim(cells[i]), expected[i]))
                    throw ParseError(line_no, "unexpected header column '" +
                                                  std::string(detail::trim(cells[i])) +
                                                  "', expected '" + std::string(expected[i]) +
                                                  "'");
            }
            header_seen = true;
            return;
        }

        if (cells.size() < 5)
            throw ParseError(line_no, "expected at least 5 columns, got " +
                                          std::to_string(cells.size()));

        DailyQuote q;
        auto date_cell = detail::trim(cells[0]);
        auto date = try_parse_date(date_cell);
        if (!date) throw ParseError(line_no, "bad date '" + std::string(date_cell) + "'");
        q.date = *date;

        static constexpr const char* names[4] = {"open", "high", "low", "close"};
        Decimal* fields[4] = {&q.open, &q.high, &q.low, &q.close};
        for (int i = 0; i < 4; ++i) {
            std::string cell(detail::trim(cells[i + 1]));
            if (options.decimal_comma)
                std::replace(cell.begin(), cell.end(), ',', '.');
            auto value = Decimal::try_parse(cell);
            if (!value)
                throw ParseError(line_no, std::string("bad ") + names[i] + " '" + cell + "'");
            *fields[i] = *value;
        }
        series.quotes.push_back(q);
    });

    if (!header_seen) throw ParseError(1, "missing header line");
    normalize_and_validate(series);
    return series;
}

inline QuoteSeries parse_csv_file(const std::filesystem::path& path, std::string symbol,
                                  const CsvOptions& options = {}) {
    return parse_csv(read_file(path), std::move(symbol), options);
}

/// Contiguous subsequence with start <= date <= end (may be empty).
inline QuoteSeries slice_by_date(const QuoteSeries& series, const Date& start, const Date& end) {
    if (start > end)
        throw ArgumentError("slice start " + format_date(start) + " is after end " +
                            format_date(end));
    QuoteSeries out;
    out.symbol = series.symbol;
    auto lo = std::lower_bound(series.quotes.begin(), series.quotes.end(), start,
                               [](const DailyQuote& q, const Date& d) { return q.date < d; });
    auto hi = std::upper_bound(series.quotes.begin(), series.quotes.end(), end,
                               [](const Date& d, const DailyQuote& q) { return d < q.date; });
    out.quotes.assign(lo, hi);
    return out;
}

inline constexpr std::string_view kStoreFormat = "daytrade-store";
inline constexpr int kStoreVersion = 1;

/// Serializes to the store document: a single self-describing JSON file
/// with format/version fields and one row per quote. Prices are written
/// in their canonical decimal form, so save -> load -> save is
/// byte-identical.
inline std::string store_document(const QuoteSeries& series) {
    nlohmann::ordered_json doc;
    doc["format"] = kStoreFormat;
    doc["version"] = kStoreVersion;
    doc["symbol"] = series.symbol;
    doc["columns"] = {"date", "open", "high", "low", "close"};
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& q : series.quotes) {
        rows.push_back({format_date(q.date), q.open.str(), q.high.str(), q.low.str(),
                        q.close.str()});
    }
    return doc.dump() + "\n";
}

inline void save_store(const QuoteSeries& series, const std::filesystem::path& path) {
    validate_series(series);
    write_file_atomic(path, store_document(series));
}

inline QuoteSeries load_store(const std::filesystem::path& path) {
    std::string text = read_file(path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(path.string() + ": not a valid store file: " + e.what());
    }
    try {
        if (!doc.is_object() || doc.value("format", "") != kStoreFormat)
            throw FormatError(path.string() + ": not a quote store");
        if (doc.value("version", -1) != kStoreVersion)
            throw FormatError(path.string() + ": unsupported store version");
        QuoteSeries series;
        series.symbol = doc.at("symbol").get<std::string>();
        for (const auto& row : doc.at("rows")) {
            if (!row.is_array() || row.size() != 5)
                throw FormatError(path.string() + ": malformed row");
            DailyQuote q;
            q.date = parse_date(row[0].get<std::string>());
            q.open = Decimal::parse(row[1].get<std::string>());
            q.high = Decimal::parse(row[2].get<std::string>());
            q.low = Decimal::parse(row[3].get<std::string>());
            q.close = Decimal::parse(row[4].get<std::string>());
            series.quotes.push_back(q);
        }
        normalize_and_validate(series);
        return series;
    } catch (const FormatError&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(path.string() + ": not a valid store file: " + e.what());
    } catch (const Error& e) {
        throw FormatError(path.string() + ": corrupt store: " + e.what());
    }
}

} // namespace daytrade
