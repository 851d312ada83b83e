#pragma once

#include <stdexcept>
#include <vector>

#include "silentphone/calllog.hpp"
#include "silentphone/time.hpp"

namespace silentphone {

inline constexpr int minutes_per_day = 1440;
inline constexpr int minutes_per_week = 7 * minutes_per_day;

/// The smallest unit of time used to slice a day when searching for
/// unavailability patterns. Need not divide 1440; the last slice of the day
/// is truncated at 24:00.
class BasePeriod {
public:
    explicit BasePeriod(int minutes) : minutes_(minutes) {
        if (minutes < 1 || minutes > minutes_per_day) {
            throw std::invalid_argument("base period must be in [1,1440] minutes");
        }
    }

    int minutes() const { return minutes_; }

    auto operator<=>(const BasePeriod&) const = default;

private:
    int minutes_;
};

/// Minimum fraction of unavailability (Reject+Missed over all incoming-
/// related events) a slice must show to count as dominant.
class ConfidenceThreshold {
public:
    explicit ConfidenceThreshold(double t) : t_(t) {
        if (!(t > 0.0) || t > 1.0) {
            throw std::invalid_argument("confidence threshold must be in (0,1]");
        }
    }

    double value() const { return t_; }

    auto operator<=>(const ConfidenceThreshold&) const = default;

private:
    double t_;
};

/// Per-slice activity tally. Outgoing never appears here; it is filtered out
/// before binning.
struct ActivityCounts {
    int accept = 0;
    int reject = 0;
    int missed = 0;

    int total() const { return accept + reject + missed; }
    int unavailable() const { return reject + missed; }

    ActivityCounts& operator+=(const ActivityCounts& other) {
        accept += other.accept;
        reject += other.reject;
        missed += other.missed;
        return *this;
    }

    bool operator==(const ActivityCounts&) const = default;
};

/// One half-open [start,end) bucket of a day-of-week.
struct TimeSlice {
    Weekday day = Weekday::Monday;
    int start = 0;
    int end = 0;
    ActivityCounts counts;
    bool dominant = false;
};

/// Tiles [0,1440) with fixed-width slices. All slices have width
/// base.minutes() except possibly the last, which is truncated at 24:00.
inline std::vector<TimeSlice> generate_time_slices(BasePeriod base, Weekday day) {
    std::vector<TimeSlice> slices;
    const int width = base.minutes();
    slices.reserve(static_cast<std::size_t>((minutes_per_day + width - 1) / width));
    for (int start = 0; start < minutes_per_day; start += width) {
        const int end = std::min(start + width, minutes_per_day);
        slices.push_back({day, start, end, {}, false});
    }
    return slices;
}

/// Bins each of `day`'s incoming-related records into the slice whose
/// half-open [start,end) interval contains its minute-of-day. A record on an
/// exact boundary belongs to the later slice.
inline std::vector<TimeSlice> bin_activities(const Dataset& data, Weekday day,
                                             std::vector<TimeSlice> slices) {
    if (slices.empty()) return slices;
    const int width = slices.front().end - slices.front().start;
    for (const auto& entry : data.records()) {
        if (entry.activity == CallActivity::Outgoing) continue;
        if (entry.record.timestamp.weekday() != day) continue;
        const int minute = entry.record.timestamp.minute_of_day();
        auto& slice = slices[static_cast<std::size_t>(minute / width)];
        switch (entry.activity) {
            case CallActivity::Accept: ++slice.counts.accept; break;
            case CallActivity::Reject: ++slice.counts.reject; break;
            case CallActivity::Missed: ++slice.counts.missed; break;
            case CallActivity::Outgoing: break;
        }
    }
    return slices;
}

/// A slice is unavailability-dominant when it holds at least `min_events`
/// incoming-related events and the Reject+Missed share meets the threshold.
/// Empty slices are never dominant (the 0/0 ratio gives no evidence).
inline bool identify_unavail_dominant(const TimeSlice& slice, ConfidenceThreshold t,
                                      int min_events = 1) {
    const int total = slice.counts.total();
    if (total < min_events || total == 0) return false;
    const double ratio = static_cast<double>(slice.counts.unavailable()) / total;
    return ratio >= t.value();
}

} // namespace silentphone
