#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "silentphone/errors.hpp"
#include "silentphone/merging.hpp"

namespace silentphone {

/// Whether temporal coverage is normalized against one day (1440 min,
/// the default for per-day sweeps) or the whole week (10080 min).
enum class CmaxMode { Day, Week };

inline int c_max_minutes(CmaxMode mode) {
    return mode == CmaxMode::Day ? minutes_per_day : minutes_per_week;
}

/// Applicability of the rule set mined at one (day, base period) point:
/// the sum over rules of normalized support times normalized temporal
/// coverage. Zero exactly when no rules were mined.
struct ApplicabilityScore {
    BasePeriod base;
    Weekday day;
    double value = 0.0;
    int n_rules = 0;
};

/// Per-base-period scores for one day, with the selected optimum. Empty
/// (no scores, no optimum) when the day carries no unavailability evidence.
struct SweepResult {
    std::vector<ApplicabilityScore> scores;
    std::optional<BasePeriod> optimal;
};

/// Sum over periods of (support_count / s_max) * (width / c_max).
/// s_max is the maximum achievable support count and c_max the maximum
/// temporal coverage in minutes; both normalize their factor into [0,1].
inline ApplicabilityScore applicability(std::span<const UnavailabilityPeriod> periods,
                                        int s_max, int c_max, BasePeriod base, Weekday day) {
    if (s_max <= 0) {
        throw DegenerateInputError("applicability undefined: no unavailability evidence (s_max = 0)");
    }
    if (c_max <= 0) {
        throw std::invalid_argument("c_max must be positive");
    }
    double value = 0.0;
    for (const auto& period : periods) {
        const double support_ratio = static_cast<double>(period.support_count) / s_max;
        const double coverage_ratio = static_cast<double>(period.end - period.start) / c_max;
        value += support_ratio * coverage_ratio;
    }
    return {base, day, value, static_cast<int>(periods.size())};
}

/// Total Reject+Missed count on `day`: the maximum support any rule on that
/// day could reach.
inline int day_support_max(const Dataset& data, Weekday day) {
    int count = 0;
    for (const auto& entry : data.records()) {
        if (entry.record.timestamp.weekday() == day && is_unavailability(entry.activity)) {
            ++count;
        }
    }
    return count;
}

/// 5,10,...,60 minutes.
inline std::vector<BasePeriod> default_candidates() {
    std::vector<BasePeriod> candidates;
    for (int m = 5; m <= 60; m += 5) candidates.emplace_back(m);
    return candidates;
}

/// Mines `day` at every candidate base period and scores each run. The
/// optimum is the highest score; ties go to the smaller period. Returns an
/// empty result when the day has no Reject/Missed records at all.
inline SweepResult sweep_base_periods(const Dataset& data, Weekday day, ConfidenceThreshold t,
                                      std::span<const BasePeriod> candidates, int min_events = 1,
                                      CmaxMode cmax_mode = CmaxMode::Day) {
    if (candidates.empty()) {
        throw std::invalid_argument("candidate base periods must be non-empty");
    }
    const int s_max = day_support_max(data, day);
    if (s_max == 0) return {};

    std::vector<BasePeriod> ordered(candidates.begin(), candidates.end());
    std::sort(ordered.begin(), ordered.end());
    ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());

    SweepResult result;
    const int c_max = c_max_minutes(cmax_mode);
    double best = 0.0;
    for (const BasePeriod base : ordered) {
        const auto periods = mine_day(data, day, base, t, min_events);
        const auto score = applicability(periods, s_max, c_max, base, day);
        // Strict comparison keeps the first (smallest) period on ties.
        if (!result.optimal || score.value > best) {
            result.optimal = base;
            best = score.value;
        }
        result.scores.push_back(score);
    }
    return result;
}

/// One sweep per weekday, Monday..Sunday.
inline std::array<SweepResult, 7> sweep_all_days(const Dataset& data, ConfidenceThreshold t,
                                                 std::span<const BasePeriod> candidates,
                                                 int min_events = 1,
                                                 CmaxMode cmax_mode = CmaxMode::Day) {
    std::array<SweepResult, 7> results;
    for (Weekday day : all_weekdays) {
        results[static_cast<std::size_t>(day)] =
            sweep_base_periods(data, day, t, candidates, min_events, cmax_mode);
    }
    return results;
}

/// CSV with header `base_period_min,day,applicability`, days in week order,
/// base periods ascending within a day. Days with no evidence emit no rows.
inline std::string format_sweep_csv(const std::array<SweepResult, 7>& sweeps) {
    std::string out = "base_period_min,day,applicability\n";
    char buf[64];
    for (Weekday day : all_weekdays) {
        for (const auto& score : sweeps[static_cast<std::size_t>(day)].scores) {
            std::snprintf(buf, sizeof(buf), "%d,%s,%.12g\n", score.base.minutes(),
                          to_string(score.day), score.value);
            out += buf;
        }
    }
    return out;
}

} // namespace silentphone
