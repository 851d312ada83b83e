#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "silentphone/calllog.hpp"
#include "silentphone/errors.hpp"
#include "silentphone/time.hpp"

namespace silentphone {

/// SplitMix64. The algorithm is pinned here on purpose: the synthetic-log
/// contract is "same seed, same bytes, every platform", which rules out
/// library distributions with unspecified output.
///
///   state += 0x9E3779B97F4A7C15
///   z = state; z ^= z>>30; z *= 0xBF58476D1CE4E5B9;
///   z ^= z>>27; z *= 0x94D049BB133111EB; z ^= z>>31
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0,1): top 53 bits scaled by 2^-53.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool next_bool(double p) { return next_double() < p; }

    /// Uniform in [lo,hi] via modulo; the bias is far below anything the
    /// tests can observe and the mapping stays platform-stable.
    int next_int(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next_u64() % span);
    }

private:
    std::uint64_t state_;
};

/// A window of one weekday in which calls arrive at `planted_rate` and are
/// unavailability (Reject or Missed) with probability `unavail_rate`.
struct PlantedPeriod {
    Weekday day = Weekday::Monday;
    int start = 0;
    int end = 0;
    double unavail_rate = 1.0;
};

/// Recipe for a synthetic call log with known ground truth.
struct SynthSpec {
    int weeks = 0;
    std::vector<PlantedPeriod> planted;
    double planted_rate = 12.0;               // calls per hour inside planted periods
    double background_rate = 1.0;             // calls per hour everywhere else
    double background_unavail_fraction = 0.1; // Reject/Missed share of background calls
    std::uint64_t seed = 0;
};

/// Week 0 starts here; the date is a Monday, so weekday arithmetic is a
/// plain day offset.
inline constexpr std::chrono::year_month_day synth_epoch{
    std::chrono::year{2015}, std::chrono::month{4}, std::chrono::day{6}};

inline void validate(const SynthSpec& spec) {
    if (spec.weeks < 0) throw InvalidSpecError("weeks must be non-negative");
    if (spec.planted_rate < 0.0 || spec.background_rate < 0.0) {
        throw InvalidSpecError("call rates must be non-negative");
    }
    if (spec.background_unavail_fraction < 0.0 || spec.background_unavail_fraction > 1.0) {
        throw InvalidSpecError("background_unavail_fraction must be in [0,1]");
    }
    for (const auto& period : spec.planted) {
        if (period.start < 0 || period.end > minutes_per_day || period.start >= period.end) {
            throw InvalidSpecError("planted period bounds must satisfy 0 <= start < end <= 1440");
        }
        if (period.unavail_rate < 0.0 || period.unavail_rate > 1.0) {
            throw InvalidSpecError("unavail_rate must be in [0,1]");
        }
    }
    for (std::size_t i = 0; i < spec.planted.size(); ++i) {
        for (std::size_t j = i + 1; j < spec.planted.size(); ++j) {
            const auto& a = spec.planted[i];
            const auto& b = spec.planted[j];
            if (a.day == b.day && a.start < b.end && b.start < a.end) {
                throw InvalidSpecError("planted periods overlap on " + std::string(to_string(a.day)));
            }
        }
    }
}

/// Generates the log. The draw order is part of the determinism contract:
/// for each week, each day Monday..Sunday, each minute 0..1439, draw one
/// Bernoulli(rate/60) for call arrival; on arrival draw second-of-minute,
/// then unavailability; unavailable calls split 50/50 into Missed vs Reject
/// (duration 0), available ones become INCOMING with duration in [10,600].
inline Dataset generate(const SynthSpec& spec) {
    validate(spec);
    SplitMix64 rng(spec.seed);
    std::vector<ClassifiedRecord> records;

    const std::chrono::sys_days epoch{synth_epoch};
    for (int week = 0; week < spec.weeks; ++week) {
        for (Weekday day : all_weekdays) {
            const std::chrono::sys_days date = epoch + std::chrono::days{week * 7 + static_cast<int>(day)};
            for (int minute = 0; minute < minutes_per_day; ++minute) {
                const PlantedPeriod* planted = nullptr;
                for (const auto& period : spec.planted) {
                    if (period.day == day && minute >= period.start && minute < period.end) {
                        planted = &period;
                        break;
                    }
                }
                const double rate = planted ? spec.planted_rate : spec.background_rate;
                const double p_call = std::min(rate / 60.0, 1.0);
                if (!rng.next_bool(p_call)) continue;

                const int second = rng.next_int(0, 59);
                const Timestamp ts{std::chrono::year_month_day{date}, minute * 60 + second};
                const double p_unavail =
                    planted ? planted->unavail_rate : spec.background_unavail_fraction;
                CallRecord record;
                record.timestamp = ts;
                if (rng.next_bool(p_unavail)) {
                    record.raw_type = rng.next_bool(0.5) ? RawCallType::Missed : RawCallType::Incoming;
                    record.duration_sec = 0;
                } else {
                    record.raw_type = RawCallType::Incoming;
                    record.duration_sec = rng.next_int(10, 600);
                }
                records.push_back({record, classify_activity(record)});
            }
        }
    }
    return Dataset(std::move(records));
}

/// JSON schema:
///   {"weeks": 8, "seed": 42, "planted_rate": 12.0, "background_rate": 1.0,
///    "background_unavail_fraction": 0.1,
///    "planted": [{"day": "Friday", "start": "16:15", "end": "17:30",
///                 "unavail_rate": 0.95}]}
/// planted_rate, background_rate and background_unavail_fraction are
/// optional and keep their defaults when absent.
inline SynthSpec load_synth_spec(std::string_view json_text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidSpecError(std::string("synth spec JSON does not parse: ") + e.what());
    }
    if (!parsed.is_object()) throw InvalidSpecError("synth spec must be a JSON object");
    SynthSpec spec;
    try {
        spec.weeks = parsed.at("weeks").get<int>();
        spec.seed = parsed.at("seed").get<std::uint64_t>();
        spec.planted_rate = parsed.value("planted_rate", spec.planted_rate);
        spec.background_rate = parsed.value("background_rate", spec.background_rate);
        spec.background_unavail_fraction =
            parsed.value("background_unavail_fraction", spec.background_unavail_fraction);
        for (const auto& entry : parsed.value("planted", nlohmann::json::array())) {
            PlantedPeriod period;
            const auto day = weekday_from_string(entry.at("day").get<std::string>());
            if (!day) throw InvalidSpecError("unknown day name in planted period");
            const auto start = parse_minute(entry.at("start").get<std::string>());
            const auto end = parse_minute(entry.at("end").get<std::string>());
            if (!start || !end) throw InvalidSpecError("planted period times must be HH:MM");
            period.day = *day;
            period.start = *start;
            period.end = *end;
            period.unavail_rate = entry.at("unavail_rate").get<double>();
            spec.planted.push_back(period);
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpecError(std::string("bad synth spec field: ") + e.what());
    }
    validate(spec);
    return spec;
}

inline std::string save_synth_spec(const SynthSpec& spec) {
    nlohmann::ordered_json object;
    object["weeks"] = spec.weeks;
    object["seed"] = spec.seed;
    object["planted_rate"] = spec.planted_rate;
    object["background_rate"] = spec.background_rate;
    object["background_unavail_fraction"] = spec.background_unavail_fraction;
    object["planted"] = nlohmann::ordered_json::array();
    for (const auto& period : spec.planted) {
        nlohmann::ordered_json entry;
        entry["day"] = to_string(period.day);
        entry["start"] = format_minute(period.start);
        entry["end"] = format_minute(period.end);
        entry["unavail_rate"] = period.unavail_rate;
        object["planted"].push_back(std::move(entry));
    }
    return object.dump(2) + "\n";
}

} // namespace silentphone
