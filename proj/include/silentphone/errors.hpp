#pragma once

#include <stdexcept>
#include <string>

namespace silentphone {

/// Input log is structurally unusable: header row missing, or data rows
/// exist but none of them parse.
class FatalFormatError : public std::runtime_error {
public:
    explicit FatalFormatError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A day carries no unavailability evidence (S_max = 0), so the
/// applicability score is undefined for it.
class DegenerateInputError : public std::runtime_error {
public:
    explicit DegenerateInputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Evaluation requested against a dataset with no records.
class EmptyDatasetError : public std::runtime_error {
public:
    explicit EmptyDatasetError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A synthetic-log spec violates its own constraints (overlapping planted
/// periods, rates outside [0,1], malformed JSON, ...).
class InvalidSpecError : public std::runtime_error {
public:
    explicit InvalidSpecError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace silentphone
