#pragma once

#include <vector>

#include "silentphone/slicing.hpp"

namespace silentphone {

/// A maximal run of consecutive unavailability-dominant slices on one day,
/// with counts aggregated over the whole span. Confidence is the aggregate
/// Reject+Missed share within [start,end), recomputed over the merged span
/// rather than averaged across slices.
struct UnavailabilityPeriod {
    Weekday day = Weekday::Monday;
    int start = 0;
    int end = 0;
    ActivityCounts counts;
    double confidence = 0.0;
    int support_count = 0;
    // Set by mine_day when the aggregate ratio lands under the mining
    // threshold; such periods are reported, not dropped.
    bool below_threshold = false;

    bool operator==(const UnavailabilityPeriod&) const = default;
};

/// Collapses maximal runs of consecutive dominant slices into periods.
/// Consecutive means time-adjacent (next slice starts where the run ends),
/// so merging a list of already-merged periods changes nothing. Expects
/// slices sorted by start, all on the same day, with dominance verdicts set.
/// Non-dominant slices appear in no period.
inline std::vector<UnavailabilityPeriod> merge_dominant_slices(const std::vector<TimeSlice>& slices) {
    std::vector<UnavailabilityPeriod> periods;
    std::size_t i = 0;
    while (i < slices.size()) {
        if (!slices[i].dominant) {
            ++i;
            continue;
        }
        UnavailabilityPeriod period;
        period.day = slices[i].day;
        period.start = slices[i].start;
        period.end = slices[i].end;
        period.counts = slices[i].counts;
        ++i;
        while (i < slices.size() && slices[i].dominant && slices[i].start == period.end) {
            period.end = slices[i].end;
            period.counts += slices[i].counts;
            ++i;
        }
        period.support_count = period.counts.unavailable();
        period.confidence = static_cast<double>(period.support_count) / period.counts.total();
        periods.push_back(period);
    }
    return periods;
}

/// End-to-end unavailability mining for one day: slice, bin, test dominance
/// per slice, merge runs. Deterministic for fixed inputs.
inline std::vector<UnavailabilityPeriod> mine_day(const Dataset& data, Weekday day,
                                                  BasePeriod base, ConfidenceThreshold t,
                                                  int min_events = 1) {
    auto slices = bin_activities(data, day, generate_time_slices(base, day));
    for (auto& slice : slices) {
        slice.dominant = identify_unavail_dominant(slice, t, min_events);
    }
    auto periods = merge_dominant_slices(slices);
    for (auto& period : periods) {
        period.below_threshold = period.confidence < t.value();
    }
    return periods;
}

} // namespace silentphone
