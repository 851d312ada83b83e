#pragma once

#include <array>
#include <chrono>
#include <compare>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace silentphone {

enum class Weekday : int {
    Monday = 0,
    Tuesday,
    Wednesday,
    Thursday,
    Friday,
    Saturday,
    Sunday,
};

inline constexpr std::array<Weekday, 7> all_weekdays{
    Weekday::Monday,   Weekday::Tuesday, Weekday::Wednesday, Weekday::Thursday,
    Weekday::Friday,   Weekday::Saturday, Weekday::Sunday,
};

inline const char* to_string(Weekday day) {
    switch (day) {
        case Weekday::Monday: return "Monday";
        case Weekday::Tuesday: return "Tuesday";
        case Weekday::Wednesday: return "Wednesday";
        case Weekday::Thursday: return "Thursday";
        case Weekday::Friday: return "Friday";
        case Weekday::Saturday: return "Saturday";
        case Weekday::Sunday: return "Sunday";
    }
    return "?";
}

inline std::optional<Weekday> weekday_from_string(std::string_view name) {
    for (Weekday d : all_weekdays) {
        if (name == to_string(d)) return d;
    }
    return std::nullopt;
}

namespace detail {

inline std::optional<int> parse_digits(std::string_view text, std::size_t pos, std::size_t count) {
    int value = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const char c = text[pos + i];
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + (c - '0');
    }
    return value;
}

} // namespace detail

/// Wall-clock timestamp with seconds precision. Values are taken exactly as
/// the device recorded them; there is no timezone or DST conversion, since
/// the patterns mined downstream are wall-clock phenomena.
class Timestamp {
public:
    Timestamp() = default;
    Timestamp(std::chrono::year_month_day date, int second_of_day)
        : day_(std::chrono::sys_days{date}), sec_(second_of_day) {}

    /// Parses the strict `YYYY-MM-DDThh:mm:ss` form. Returns nullopt on any
    /// deviation (wrong separators, out-of-range fields, invalid dates).
    static std::optional<Timestamp> parse(std::string_view text) {
        if (text.size() != 19) return std::nullopt;
        if (text[4] != '-' || text[7] != '-' || text[10] != 'T' ||
            text[13] != ':' || text[16] != ':') {
            return std::nullopt;
        }
        const auto year = detail::parse_digits(text, 0, 4);
        const auto month = detail::parse_digits(text, 5, 2);
        const auto day = detail::parse_digits(text, 8, 2);
        const auto hour = detail::parse_digits(text, 11, 2);
        const auto minute = detail::parse_digits(text, 14, 2);
        const auto second = detail::parse_digits(text, 17, 2);
        if (!year || !month || !day || !hour || !minute || !second) return std::nullopt;
        if (*hour > 23 || *minute > 59 || *second > 59) return std::nullopt;
        const std::chrono::year_month_day ymd{
            std::chrono::year{*year},
            std::chrono::month{static_cast<unsigned>(*month)},
            std::chrono::day{static_cast<unsigned>(*day)}};
        if (!ymd.ok()) return std::nullopt;
        return Timestamp{ymd, *hour * 3600 + *minute * 60 + *second};
    }

    std::string to_string() const {
        const std::chrono::year_month_day ymd{day_};
        char buf[20];
        std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02d",
                      int(ymd.year()), unsigned(ymd.month()), unsigned(ymd.day()),
                      sec_ / 3600, (sec_ / 60) % 60, sec_ % 60);
        return buf;
    }

    Weekday weekday() const {
        const std::chrono::weekday wd{day_};
        return static_cast<Weekday>(wd.iso_encoding() - 1);
    }

    int minute_of_day() const { return sec_ / 60; }
    int second_of_day() const { return sec_; }
    std::chrono::year_month_day date() const { return std::chrono::year_month_day{day_}; }

    // Chronological order: date first, then time of day.
    auto operator<=>(const Timestamp&) const = default;

private:
    std::chrono::sys_days day_{};
    int sec_ = 0;
};

/// Minutes-of-day as "HH:MM". 1440 renders as "24:00" so a period ending at
/// midnight stays printable.
inline std::string format_minute(int minute_of_day) {
    char buf[6];
    std::snprintf(buf, sizeof(buf), "%02d:%02d", minute_of_day / 60, minute_of_day % 60);
    return buf;
}

inline std::optional<int> parse_minute(std::string_view text) {
    if (text.size() != 5 || text[2] != ':') return std::nullopt;
    const auto hour = detail::parse_digits(text, 0, 2);
    const auto minute = detail::parse_digits(text, 3, 2);
    if (!hour || !minute || *minute > 59) return std::nullopt;
    const int total = *hour * 60 + *minute;
    if (total > 1440) return std::nullopt;
    return total;
}

} // namespace silentphone
