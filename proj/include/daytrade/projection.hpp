#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "daytrade/errors.hpp"

namespace daytrade {

/// Inputs of the compounded-return projection: out of `horizon` working
/// days, `alpha` capture +spread percent and the rest lose -spread
/// percent, both amplified by margin/100. margin = 100 is unleveraged,
/// 200 is 2:1 buying power, 0 means nothing at risk.
struct ProjectionParams {
    double spread = 0.0;  // average daily spread, percent, >= 0
    int alpha = 0;        // winning days, in [0, horizon]
    int horizon = 30;     // total working days, >= 1
    double margin = 100.0; // percent, >= 0
};

/// Terminal wealth as percent of starting capital (100 = break-even).
struct ProjectionResult {
    double value = 0.0;
    ProjectionParams params;
};

namespace detail {

/// Leveraged per-day move as a plain fraction: (margin/100) * (spread/100).
inline double leveraged_step(double spread, double margin) {
    return (margin / 100.0) * (spread / 100.0);
}

inline void check_ruin(double spread, double margin) {
    if (leveraged_step(spread, margin) >= 1.0)
        throw RuinError("margin " + std::to_string(margin) + "% at spread " +
                        std::to_string(spread) +
                        "% loses 100% or more in a single day");
}

/// Closed form shared by the integer and interpolated paths.
inline double project_value(double spread, double alpha, int horizon, double margin) {
    double step = leveraged_step(spread, margin);
    return std::pow(1.0 + step, alpha) *
           std::pow(1.0 - step, static_cast<double>(horizon) - alpha) * 100.0;
}

} // namespace detail

inline void validate(const ProjectionParams& p) {
    if (p.horizon < 1)
        throw ArgumentError("horizon must be >= 1, got " + std::to_string(p.horizon));
    if (p.alpha < 0 || p.alpha > p.horizon)
        throw ArgumentError("alpha " + std::to_string(p.alpha) + " outside [0, " +
                            std::to_string(p.horizon) + "]");
    if (!(p.spread >= 0.0))
        throw ArgumentError("spread must be >= 0, got " + std::to_string(p.spread));
    if (!(p.margin >= 0.0))
        throw ArgumentError("margin must be >= 0, got " + std::to_string(p.margin));
    detail::check_ruin(p.spread, p.margin);
}

/// Compounded terminal wealth after alpha winning and horizon-alpha
/// losing days of +/-spread, leveraged by margin/100:
///   (1 + ks)^alpha * (1 - ks)^(horizon-alpha) * 100,
/// with s = spread/100 and k = margin/100.
inline ProjectionResult project(const ProjectionParams& params) {
    validate(params);
    return {detail::project_value(params.spread, params.alpha, params.horizon, params.margin),
            params};
}

/// Minimum integer alpha whose projection reaches break-even (>= 100).
/// nullopt when even alpha = horizon stays below 100 (cannot happen for
/// spread > 0, margin > 0, but the contract covers it).
inline std::optional<int> break_even_alpha(double spread, int horizon, double margin) {
    if (!(spread > 0.0))
        throw ArgumentError("break-even needs spread > 0, got " + std::to_string(spread));
    validate(ProjectionParams{spread, 0, horizon, margin});
    // value is nondecreasing in alpha, so binary search would do; the
    // horizon is small enough that a linear scan reads better.
    for (int alpha = 0; alpha <= horizon; ++alpha) {
        if (detail::project_value(spread, alpha, horizon, margin) >= 100.0) return alpha;
    }
    return std::nullopt;
}

struct SweepRow {
    double alpha = 0.0;
    double margin = 0.0;
    double value = 0.0;
    bool interpolated = false; // alpha not integral
};

/// Projection table over alpha = 0, step, 2*step, ..., horizon for each
/// margin. The default step of 1 yields the plain integer table; a
/// fractional step adds interpolated curve points (flagged as such).
/// Rows are ordered by (alpha, margin); margins are sorted and deduped.
inline std::vector<SweepRow> alpha_sweep(double spread, int horizon,
                                         std::vector<double> margins,
                                         double alpha_step = 1.0) {
    if (margins.empty()) throw ArgumentError("sweep needs at least one margin");
    if (!(alpha_step > 0.0))
        throw ArgumentError("alpha step must be > 0, got " + std::to_string(alpha_step));
    std::sort(margins.begin(), margins.end());
    margins.erase(std::unique(margins.begin(), margins.end()), margins.end());
    for (double m : margins) {
        validate(ProjectionParams{spread, 0, horizon, m});
    }

    std::vector<double> alphas;
    for (int i = 0; i * alpha_step < static_cast<double>(horizon); ++i)
        alphas.push_back(i * alpha_step);
    alphas.push_back(static_cast<double>(horizon));

    std::vector<SweepRow> rows;
    rows.reserve(alphas.size() * margins.size());
    for (double a : alphas) {
        bool interpolated = a != std::floor(a);
        for (double m : margins) {
            rows.push_back({a, m, detail::project_value(spread, a, horizon, m), interpolated});
        }
    }
    return rows;
}

} // namespace daytrade
