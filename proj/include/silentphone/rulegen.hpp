#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "silentphone/applicability.hpp"
#include "silentphone/errors.hpp"

namespace silentphone {

/// A silent-mode configuring rule: (day, [start,end)) => SILENT.
///
/// The consequent is always SILENT, so it is implied by the type. Support is
/// the joint probability P(period, unavailable) over the whole dataset;
/// confidence is the conditional P(unavailable | period). The two use
/// different denominators, so neither bounds the other.
struct SilentRule {
    Weekday day = Weekday::Monday;
    int start = 0;
    int end = 0;
    double confidence = 0.0;
    double support = 0.0;
    int support_count = 0;

    bool operator==(const SilentRule&) const = default;
};

/// Converts mined periods into rules. Confidence and support are recomputed
/// over the full dataset restricted to each period's (day, span) context --
/// every week's occurrence of that window, not just the slices that
/// triggered dominance. Rules falling under the confidence threshold or the
/// minimum support count are dropped; output is sorted by day then start.
///
/// This is the single-antecedent degenerate case of association-rule mining:
/// with one temporal item on the left and a constant consequent, frequent-
/// itemset enumeration reduces to direct counting per period.
inline std::vector<SilentRule> generate_rules(std::span<const UnavailabilityPeriod> periods,
                                              const Dataset& data, ConfidenceThreshold t,
                                              int min_support_count = 1) {
    std::vector<SilentRule> rules;
    const std::size_t total_records = data.record_count();
    for (const auto& period : periods) {
        ActivityCounts counts;
        for (const auto& entry : data.records()) {
            if (entry.record.timestamp.weekday() != period.day) continue;
            const int minute = entry.record.timestamp.minute_of_day();
            if (minute < period.start || minute >= period.end) continue;
            switch (entry.activity) {
                case CallActivity::Accept: ++counts.accept; break;
                case CallActivity::Reject: ++counts.reject; break;
                case CallActivity::Missed: ++counts.missed; break;
                case CallActivity::Outgoing: break;
            }
        }
        if (counts.total() == 0) continue;
        const double confidence = static_cast<double>(counts.unavailable()) / counts.total();
        if (confidence < t.value()) continue;
        if (counts.unavailable() < min_support_count) continue;
        SilentRule rule;
        rule.day = period.day;
        rule.start = period.start;
        rule.end = period.end;
        rule.confidence = confidence;
        rule.support_count = counts.unavailable();
        rule.support = total_records == 0
                           ? 0.0
                           : static_cast<double>(rule.support_count) / static_cast<double>(total_records);
        rules.push_back(rule);
    }
    std::sort(rules.begin(), rules.end(), [](const SilentRule& a, const SilentRule& b) {
        if (a.day != b.day) return static_cast<int>(a.day) < static_cast<int>(b.day);
        return a.start < b.start;
    });
    return rules;
}

/// JSON array of {day, start, end, mode, confidence, support, support_count}.
/// Key order and float formatting are stable, so identical rule lists give
/// byte-identical output.
inline std::string serialize_rules(std::span<const SilentRule> rules) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const auto& rule : rules) {
        nlohmann::ordered_json object;
        object["day"] = to_string(rule.day);
        object["start"] = format_minute(rule.start);
        object["end"] = format_minute(rule.end);
        object["mode"] = "SILENT";
        object["confidence"] = rule.confidence;
        object["support"] = rule.support;
        object["support_count"] = rule.support_count;
        array.push_back(std::move(object));
    }
    return array.dump(2) + "\n";
}

inline std::vector<SilentRule> deserialize_rules(std::string_view json_text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FatalFormatError(std::string("rules JSON does not parse: ") + e.what());
    }
    if (!parsed.is_array()) {
        throw FatalFormatError("rules JSON must be an array");
    }
    std::vector<SilentRule> rules;
    for (const auto& object : parsed) {
        if (!object.is_object()) throw FatalFormatError("rule entry must be an object");
        for (const char* key : {"day", "start", "end", "mode", "confidence", "support", "support_count"}) {
            if (!object.contains(key)) {
                throw FatalFormatError(std::string("rule entry missing key '") + key + "'");
            }
        }
        if (object.at("mode").get<std::string>() != "SILENT") {
            throw FatalFormatError("rule mode must be SILENT");
        }
        const auto day = weekday_from_string(object.at("day").get<std::string>());
        if (!day) throw FatalFormatError("unknown day name in rule");
        const auto start = parse_minute(object.at("start").get<std::string>());
        const auto end = parse_minute(object.at("end").get<std::string>());
        if (!start || !end || *start >= *end) throw FatalFormatError("bad rule period bounds");
        SilentRule rule;
        rule.day = *day;
        rule.start = *start;
        rule.end = *end;
        rule.confidence = object.at("confidence").get<double>();
        rule.support = object.at("support").get<double>();
        rule.support_count = object.at("support_count").get<int>();
        if (rule.confidence < 0.0 || rule.confidence > 1.0 || rule.support < 0.0 ||
            rule.support > 1.0 || rule.support_count < 0) {
            throw FatalFormatError("rule statistics out of range");
        }
        rules.push_back(rule);
    }
    return rules;
}

/// Human-readable rule listing, e.g.
/// `R1: DayTime → Friday [16:15-17:30] ⇒ RingerMode → Silent (Conf=100%)`.
inline std::string format_rule_summary(std::span<const SilentRule> rules) {
    std::string out;
    char buf[160];
    int index = 1;
    for (const auto& rule : rules) {
        std::snprintf(buf, sizeof(buf),
                      "R%d: DayTime → %s [%s-%s] ⇒ RingerMode → Silent (Conf=%d%%)\n",
                      index++, to_string(rule.day), format_minute(rule.start).c_str(),
                      format_minute(rule.end).c_str(),
                      static_cast<int>(std::lround(rule.confidence * 100.0)));
        out += buf;
    }
    return out;
}

/// Knobs for the sweep -> mine -> rules pipeline.
struct PipelineOptions {
    std::vector<BasePeriod> candidates = default_candidates();
    int min_events = 1;
    // Minimum Reject+Missed count an emitted rule needs; defaults to
    // min_events when unset.
    std::optional<int> min_support_count;
    CmaxMode cmax_mode = CmaxMode::Day;

    int effective_min_support() const { return min_support_count.value_or(min_events); }
};

struct MiningResult {
    std::vector<SilentRule> rules;
    std::array<SweepResult, 7> sweeps;
};

/// Full pipeline over one dataset: per day, sweep the candidate base periods,
/// re-mine at the optimum, then turn the resulting periods into rules.
/// Outgoing records are filtered out up front, so raw parsed datasets are
/// accepted as-is.
inline MiningResult mine_rules(const Dataset& data, ConfidenceThreshold t,
                               const PipelineOptions& options = {}) {
    const Dataset incoming = filter_incoming_related(data);
    MiningResult result;
    std::vector<UnavailabilityPeriod> periods;
    result.sweeps = sweep_all_days(incoming, t, options.candidates, options.min_events,
                                   options.cmax_mode);
    for (Weekday day : all_weekdays) {
        const auto& sweep = result.sweeps[static_cast<std::size_t>(day)];
        if (!sweep.optimal) continue;
        auto day_periods = mine_day(incoming, day, *sweep.optimal, t, options.min_events);
        periods.insert(periods.end(), day_periods.begin(), day_periods.end());
    }
    result.rules = generate_rules(periods, incoming, t, options.effective_min_support());
    return result;
}

} // namespace silentphone
