#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "silentphone/errors.hpp"
#include "silentphone/time.hpp"

namespace silentphone {

/// Call type token as the device log records it.
enum class RawCallType { Incoming, Missed, Outgoing };

/// Classified call activity. Reject and Missed are the two unavailability
/// signals; Outgoing is user-initiated and excluded from mining.
enum class CallActivity { Accept, Reject, Missed, Outgoing };

inline const char* to_string(RawCallType type) {
    switch (type) {
        case RawCallType::Incoming: return "INCOMING";
        case RawCallType::Missed: return "MISSED";
        case RawCallType::Outgoing: return "OUTGOING";
    }
    return "?";
}

inline const char* to_string(CallActivity activity) {
    switch (activity) {
        case CallActivity::Accept: return "Accept";
        case CallActivity::Reject: return "Reject";
        case CallActivity::Missed: return "Missed";
        case CallActivity::Outgoing: return "Outgoing";
    }
    return "?";
}

inline std::optional<RawCallType> raw_call_type_from_string(std::string_view token) {
    std::string upper(token);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (upper == "INCOMING") return RawCallType::Incoming;
    if (upper == "MISSED") return RawCallType::Missed;
    if (upper == "OUTGOING") return RawCallType::Outgoing;
    return std::nullopt;
}

/// One call-log row. A MISSED row always carries duration 0; the parser
/// rejects anything else as corrupt.
struct CallRecord {
    Timestamp timestamp;
    RawCallType raw_type = RawCallType::Incoming;
    int duration_sec = 0;

    bool operator==(const CallRecord&) const = default;
};

/// Zero/nonzero duration splits incoming calls into Reject vs Accept; the
/// call type alone decides the rest. Total over all valid records.
inline CallActivity classify_activity(const CallRecord& record) {
    switch (record.raw_type) {
        case RawCallType::Incoming:
            return record.duration_sec > 0 ? CallActivity::Accept : CallActivity::Reject;
        case RawCallType::Missed:
            return CallActivity::Missed;
        case RawCallType::Outgoing:
            return CallActivity::Outgoing;
    }
    return CallActivity::Outgoing;
}

inline bool is_unavailability(CallActivity activity) {
    return activity == CallActivity::Reject || activity == CallActivity::Missed;
}

struct ClassifiedRecord {
    CallRecord record;
    CallActivity activity = CallActivity::Outgoing;

    bool operator==(const ClassifiedRecord&) const = default;
};

/// An immutable, timestamp-sorted list of classified records. Sorting is
/// enforced at construction so every consumer can assume chronological order.
class Dataset {
public:
    Dataset() = default;

    explicit Dataset(std::vector<ClassifiedRecord> records) : records_(std::move(records)) {
        std::stable_sort(records_.begin(), records_.end(),
                         [](const ClassifiedRecord& a, const ClassifiedRecord& b) {
                             return a.record.timestamp < b.record.timestamp;
                         });
    }

    const std::vector<ClassifiedRecord>& records() const { return records_; }
    std::size_t record_count() const { return records_.size(); }
    bool empty() const { return records_.empty(); }

    bool operator==(const Dataset&) const = default;

private:
    std::vector<ClassifiedRecord> records_;
};

struct MalformedRow {
    std::size_t line = 0; // 1-based, counting the header as line 1
    std::string reason;
};

struct ParseResult {
    Dataset dataset;
    std::vector<MalformedRow> malformed;
};

enum class LogFormat { Csv };

namespace detail {

inline std::string_view trim(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t' || text.front() == '\r'))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
        text.remove_suffix(1);
    return text;
}

inline std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

inline std::string lowercase(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

inline std::optional<int> parse_nonnegative_int(std::string_view text) {
    if (text.empty()) return std::nullopt;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0) return std::nullopt;
    return value;
}

} // namespace detail

/// Parses a CSV call log. Expected header: `timestamp,call_type,duration_sec`
/// (extra columns, e.g. caller identity, are ignored). Rows that fail to
/// parse are collected per line with a reason and skipped; the file is fatal
/// only when the header is wrong or no data row parses at all.
inline ParseResult parse_log(std::istream& source, LogFormat format = LogFormat::Csv) {
    (void)format; // CSV is the only wire format
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(source, line)) {
        throw FatalFormatError("empty input: missing header row");
    }
    ++line_no;
    const auto header = detail::split_csv(line);
    if (header.size() < 3 ||
        detail::lowercase(header[0]) != "timestamp" ||
        detail::lowercase(header[1]) != "call_type" ||
        detail::lowercase(header[2]) != "duration_sec") {
        throw FatalFormatError("missing or malformed header: expected timestamp,call_type,duration_sec");
    }

    ParseResult result;
    std::vector<ClassifiedRecord> records;
    std::size_t attempted = 0;

    while (std::getline(source, line)) {
        ++line_no;
        if (detail::trim(line).empty()) continue;
        ++attempted;

        const auto fields = detail::split_csv(line);
        if (fields.size() < 3) {
            result.malformed.push_back({line_no, "expected 3 columns, got " + std::to_string(fields.size())});
            continue;
        }
        const auto timestamp = Timestamp::parse(fields[0]);
        if (!timestamp) {
            result.malformed.push_back({line_no, "bad timestamp '" + std::string(fields[0]) + "'"});
            continue;
        }
        const auto raw_type = raw_call_type_from_string(fields[1]);
        if (!raw_type) {
            result.malformed.push_back({line_no, "unknown call_type '" + std::string(fields[1]) + "'"});
            continue;
        }
        const auto duration = detail::parse_nonnegative_int(fields[2]);
        if (!duration) {
            result.malformed.push_back({line_no, "duration_sec must be a non-negative integer, got '" +
                                                     std::string(fields[2]) + "'"});
            continue;
        }
        if (*raw_type == RawCallType::Missed && *duration != 0) {
            result.malformed.push_back({line_no, "missed call with nonzero duration"});
            continue;
        }
        CallRecord record{*timestamp, *raw_type, *duration};
        records.push_back({record, classify_activity(record)});
    }

    if (attempted > 0 && records.empty()) {
        throw FatalFormatError("no parseable rows (" + std::to_string(result.malformed.size()) +
                               " malformed)");
    }
    result.dataset = Dataset(std::move(records));
    return result;
}

inline ParseResult parse_log(std::string_view text, LogFormat format = LogFormat::Csv) {
    std::istringstream stream{std::string(text)};
    return parse_log(stream, format);
}

inline ParseResult parse_log_file(const std::filesystem::path& path) {
    std::ifstream stream(path);
    if (!stream) {
        throw FatalFormatError("cannot open input file: " + path.string());
    }
    return parse_log(stream);
}

/// Inverse of parse_log: emits the canonical CSV form, preserving dataset
/// order. parse_log(write_csv(d)) reproduces d exactly.
inline std::string write_csv(const Dataset& data) {
    std::string out = "timestamp,call_type,duration_sec\n";
    for (const auto& entry : data.records()) {
        out += entry.record.timestamp.to_string();
        out += ',';
        out += to_string(entry.record.raw_type);
        out += ',';
        out += std::to_string(entry.record.duration_sec);
        out += '\n';
    }
    return out;
}

/// Drops Outgoing records; order is preserved. Outgoing calls are
/// user-initiated and carry no unavailability signal.
inline Dataset filter_incoming_related(const Dataset& data) {
    std::vector<ClassifiedRecord> kept;
    kept.reserve(data.record_count());
    for (const auto& entry : data.records()) {
        if (entry.activity != CallActivity::Outgoing) kept.push_back(entry);
    }
    return Dataset(std::move(kept));
}

} // namespace silentphone
