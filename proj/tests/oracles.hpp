#pragma once

// Test-only helpers: dataset builders and independent oracles. The oracles
// here recompute results by plain exhaustive scanning and must stay
// independent of the library path they check.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <vector>

#include "silentphone/silentphone.hpp"

namespace sptest {

using namespace silentphone;

// Places a record on a given weekday of week `week`, anchored to the same
// Monday epoch the synthetic generator uses.
inline Timestamp at(Weekday day, int minute, int second = 0, int week = 0) {
    using namespace std::chrono;
    const sys_days date = sys_days{synth_epoch} + days{7 * week + static_cast<int>(day)};
    return Timestamp{year_month_day{date}, minute * 60 + second};
}

inline ClassifiedRecord make(Weekday day, int minute, CallActivity activity, int week = 0,
                             int second = 0) {
    CallRecord record;
    record.timestamp = at(day, minute, second, week);
    switch (activity) {
        case CallActivity::Accept:
            record.raw_type = RawCallType::Incoming;
            record.duration_sec = 60;
            break;
        case CallActivity::Reject:
            record.raw_type = RawCallType::Incoming;
            record.duration_sec = 0;
            break;
        case CallActivity::Missed:
            record.raw_type = RawCallType::Missed;
            record.duration_sec = 0;
            break;
        case CallActivity::Outgoing:
            record.raw_type = RawCallType::Outgoing;
            record.duration_sec = 30;
            break;
    }
    return {record, classify_activity(record)};
}

inline Dataset dataset(std::vector<ClassifiedRecord> records) {
    return Dataset(std::move(records));
}

// Brute-force reference for mine_day: rescans every record for every slice,
// applies the ratio test, then merges runs with one explicit linear pass.
inline std::vector<UnavailabilityPeriod> brute_force_mine_day(const Dataset& data, Weekday day,
                                                              int base_minutes, double t,
                                                              int min_events) {
    struct SliceInfo {
        int start, end, accept, reject, missed;
        bool dominant;
    };
    std::vector<SliceInfo> slices;
    for (int start = 0; start < 1440; start += base_minutes) {
        SliceInfo info{start, std::min(start + base_minutes, 1440), 0, 0, 0, false};
        for (const auto& entry : data.records()) {
            if (entry.activity == CallActivity::Outgoing) continue;
            if (entry.record.timestamp.weekday() != day) continue;
            const int minute = entry.record.timestamp.minute_of_day();
            if (minute < info.start || minute >= info.end) continue;
            if (entry.activity == CallActivity::Accept) ++info.accept;
            else if (entry.activity == CallActivity::Reject) ++info.reject;
            else ++info.missed;
        }
        const int total = info.accept + info.reject + info.missed;
        info.dominant = total >= min_events && total > 0 &&
                        static_cast<double>(info.reject + info.missed) / total >= t;
        slices.push_back(info);
    }

    std::vector<UnavailabilityPeriod> periods;
    std::size_t i = 0;
    while (i < slices.size()) {
        if (!slices[i].dominant) {
            ++i;
            continue;
        }
        std::size_t j = i;
        int accept = 0, reject = 0, missed = 0;
        while (j < slices.size() && slices[j].dominant) {
            accept += slices[j].accept;
            reject += slices[j].reject;
            missed += slices[j].missed;
            ++j;
        }
        UnavailabilityPeriod period;
        period.day = day;
        period.start = slices[i].start;
        period.end = slices[j - 1].end;
        period.counts = {accept, reject, missed};
        period.support_count = reject + missed;
        period.confidence =
            static_cast<double>(period.support_count) / (accept + reject + missed);
        period.below_threshold = period.confidence < t;
        periods.push_back(period);
        i = j;
    }
    return periods;
}

// Random tiny one-day log for oracle-equivalence runs.
inline Dataset random_day_log(SplitMix64& rng, Weekday day, int max_records) {
    const int n = rng.next_int(0, max_records);
    std::vector<ClassifiedRecord> records;
    records.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int minute = rng.next_int(0, 1439);
        const int pick = rng.next_int(0, 2);
        const CallActivity activity = pick == 0   ? CallActivity::Accept
                                      : pick == 1 ? CallActivity::Reject
                                                  : CallActivity::Missed;
        records.push_back(make(day, minute, activity, rng.next_int(0, 3), rng.next_int(0, 59)));
    }
    return dataset(std::move(records));
}

inline bool periods_equal(const std::vector<UnavailabilityPeriod>& a,
                          const std::vector<UnavailabilityPeriod>& b) {
    return a == b;
}

} // namespace sptest
