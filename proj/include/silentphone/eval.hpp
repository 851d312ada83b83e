#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "silentphone/rulegen.hpp"

namespace silentphone {

/// Coverage/accuracy assessment of a rule set. Accuracy is absent when no
/// record is covered, since n_correct/n_covers is undefined there.
struct EvalReport {
    std::size_t n_covers = 0;
    std::size_t n_correct = 0;
    std::size_t dataset_size = 0;
    double coverage = 0.0;
    std::optional<double> accuracy;
    double threshold = 0.0;
};

inline bool rule_covers(const SilentRule& rule, const ClassifiedRecord& entry) {
    if (entry.record.timestamp.weekday() != rule.day) return false;
    const int minute = entry.record.timestamp.minute_of_day();
    return minute >= rule.start && minute < rule.end;
}

/// A record is covered when its (day, minute) falls inside any rule's period;
/// a covered record counts as correct when its activity really is
/// unavailability (Reject or Missed). Expects incoming-related data.
inline EvalReport evaluate(std::span<const SilentRule> rules, const Dataset& data) {
    if (data.empty()) {
        throw EmptyDatasetError("cannot evaluate rules against an empty dataset");
    }
    EvalReport report;
    report.dataset_size = data.record_count();
    for (const auto& entry : data.records()) {
        const bool covered = std::any_of(rules.begin(), rules.end(), [&](const SilentRule& rule) {
            return rule_covers(rule, entry);
        });
        if (!covered) continue;
        ++report.n_covers;
        if (is_unavailability(entry.activity)) ++report.n_correct;
    }
    report.coverage = static_cast<double>(report.n_covers) / static_cast<double>(report.dataset_size);
    if (report.n_covers > 0) {
        report.accuracy = static_cast<double>(report.n_correct) / static_cast<double>(report.n_covers);
    }
    return report;
}

/// Chronological split: the oldest (1 - fraction) of records train, the
/// newest `fraction` test. fraction = 0 keeps everything in train and gives
/// an empty test set.
inline std::pair<Dataset, Dataset> split_holdout(const Dataset& data, double fraction) {
    if (fraction < 0.0 || fraction >= 1.0) {
        throw std::invalid_argument("holdout fraction must be in [0,1)");
    }
    const auto& records = data.records();
    const std::size_t n_test =
        static_cast<std::size_t>(std::floor(fraction * static_cast<double>(records.size())));
    const std::size_t n_train = records.size() - n_test;
    std::vector<ClassifiedRecord> train(records.begin(), records.begin() + n_train);
    std::vector<ClassifiedRecord> test(records.begin() + n_train, records.end());
    return {Dataset(std::move(train)), Dataset(std::move(test))};
}

/// Runs the full pipeline (sweep -> mine -> rules -> evaluate) once per
/// threshold and reports in descending threshold order. With holdout = 0 the
/// rules are evaluated on the data that mined them, reproducing the usual
/// resubstitution protocol; a positive holdout evaluates on the held-out
/// chronological tail instead.
inline std::vector<EvalReport> threshold_curve(const Dataset& data,
                                               std::span<const double> thresholds,
                                               const PipelineOptions& options = {},
                                               double holdout = 0.0) {
    const Dataset incoming = filter_incoming_related(data);
    if (incoming.empty()) {
        throw EmptyDatasetError("no incoming-related records to evaluate");
    }
    Dataset train = incoming;
    Dataset test = incoming;
    if (holdout > 0.0) {
        std::tie(train, test) = split_holdout(incoming, holdout);
        if (test.empty()) {
            throw EmptyDatasetError("holdout fraction leaves an empty test set");
        }
        if (train.empty()) {
            throw EmptyDatasetError("holdout fraction leaves an empty training set");
        }
    }

    std::vector<double> ordered(thresholds.begin(), thresholds.end());
    std::sort(ordered.begin(), ordered.end(), std::greater<>{});

    std::vector<EvalReport> reports;
    reports.reserve(ordered.size());
    for (const double t : ordered) {
        const ConfidenceThreshold threshold{t};
        const auto mined = mine_rules(train, threshold, options);
        EvalReport report = evaluate(mined.rules, test);
        report.threshold = t;
        reports.push_back(report);
    }
    return reports;
}

/// CSV with header `threshold,accuracy,coverage`. Accuracy is left empty
/// when undefined.
inline std::string format_eval_csv(std::span<const EvalReport> reports) {
    std::string out = "threshold,accuracy,coverage\n";
    char buf[96];
    for (const auto& report : reports) {
        std::string accuracy;
        if (report.accuracy) {
            std::snprintf(buf, sizeof(buf), "%.12g", *report.accuracy);
            accuracy = buf;
        }
        std::snprintf(buf, sizeof(buf), "%.12g,%s,%.12g\n", report.threshold, accuracy.c_str(),
                      report.coverage);
        out += buf;
    }
    return out;
}

} // namespace silentphone
