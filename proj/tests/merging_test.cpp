#include <gtest/gtest.h>

#include "oracles.hpp"
#include "silentphone/merging.hpp"

using namespace silentphone;

namespace {

// Builds a tiled slice list from a dominance pattern; dominant slices get one
// Reject so counts stay consistent with the verdicts.
std::vector<TimeSlice> slices_from_pattern(const std::vector, <bool>& pattern, int start, int width) {
    std::vector<TimeSlice> slices;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        TimeSlice slice;
        slice.day = Weekday::Monday;
        slice.start = start + static_cast<int>(i) * width;
        slice.end = slice.start + width;
        if (pattern[i]) {
            slice.counts.reject = 1;
            slice.dominant = true;
        }
        slices.push_back(slice);
    }
    return slices;
}

TEST(MergeDominantSlices, PatternWithTwoRuns) {
    const auto slices = slices_from_pattern({false, true, true, false, true}, 600, 10);
    const auto periods = merge_dominant_slices(slices);
    ASSERT_EQ(periods.size(), 2u);
    EXPECT_EQ(periods[0].start, 610);
    EXPECT_EQ(periods[0].end, 630);
    EXPECT_EQ(periods[0].support_count, 2);
    EXPECT_EQ(periods[1].start, 640);
    EXPECT_EQ(periods[1].end, 650);
    EXPECT_EQ(periods[1].support_count, 1);
}

TEST(MergeDominantSlices, AllNonDominantGivesEmpty) {
    const auto slices = slices_from_pattern({false, false, false}, 0, 30);
    EXPECT_TRUE(merge_dominant_slices(slices).empty());
}

TEST(MergeDominantSlices, SingleDominantSliceIsItsOwnPeriod) {
    const auto slices = slices_from_pattern({false, true, false}, 300, 15);
    const auto periods = merge_dominant_slices(slices);
    ASSERT_EQ(periods.size(), 1u);
    EXPECT_EQ(periods[0].start, 315);
    EXPECT_EQ(periods[0].end, 330);
    EXPECT_EQ(periods[0].counts, (ActivityCounts{0, 1, 0}));
    EXPECT_DOUBLE_EQ(periods[0].confidence, 1.0);
}

TEST(MergeDominantSlices, AggregatesCountsAndConfidence) {
    std::vector<TimeSlice> slices;
    slices.push_back({Weekday::Friday, 0, 30, {1, 3, 2}, true});
    slices.push_back({Weekday::Friday, 30, 60, {0, 4, 0}, true});
    slices.push_back({Weekday::Friday, 60, 90, {5, 0, 0}, false});
    const auto periods = merge_dominant_slices(slices);
    ASSERT_EQ(periods.size(), 1u);
    EXPECT_EQ(periods[0].counts, (ActivityCounts{1, 7, 2}));
    EXPECT_EQ(periods[0].support_count, 9);
    EXPECT_DOUBLE_EQ(periods[0].confidence, 9.0 / 10.0);
}

TEST(MergeDominantSlices, PropertySuite) {
    SplitMix64 rng(55);
    for (int iteration = 0; iteration < 300; ++iteration) {
        const int width = rng.next_int(1, 120);
        const int n = rng.next_int(0, 24);
        std::vector<bool> pattern;
        for (int i = 0; i < n; ++i) pattern.push_back(rng.next_bool(0.45));
        const auto slices = slices_from_pattern(pattern, 0, width);
        const auto periods = merge_dominant_slices(slices);

        // Disjoint, sorted, and within the tiled range.
        for (std::size_t i = 0; i + 1 < periods.size(); ++i) {
            EXPECT_LT(periods[i].end, periods[i + 1].start + 1); // end <= next start
            EXPECT_LT(periods[i].start, periods[i].end);
        }
        // Maximality: slices just before and after each period are non-dominant.
        for (const auto& period : periods) {
            const int before = (period.start / width) - 1;
            const std::size_t after = static_cast<std::size_t>(period.end / width);
            if (before >= 0) EXPECT_FALSE(slices[static_cast<std::size_t>(before)].dominant);
            if (after < slices.size()) EXPECT_FALSE(slices[after].dominant);
        }
        // Every dominant slice is inside exactly one period.
        for (const auto& slice : slices) {
            int containing = 0;
            for (const auto& period : periods) {
                if (slice.start >= period.start && slice.end <= period.end) ++containing;
            }
            EXPECT_EQ(containing, slice.dominant ? 1 : 0);
        }
        // Idempotence: feeding the periods back in as single dominant slices
        // changes nothing.
        std::vector<TimeSlice> as_slices;
        for (const auto& period : periods) {
            as_slices.push_back({period.day, period.start, period.end, period.counts, true});
        }
        EXPECT_EQ(merge_dominant_slices(as_slices), periods);
    }
}

TEST(MineDay, DenseRejectBlockRecovered) {
    std::vector<ClassifiedRecord> records;
    for (int minute = 860; minute < 960; minute += 5) {
        records.push_back(sptest::make(Weekday::Monday, minute, CallActivity::Reject));
    }
    records.push_back(sptest::make(Weekday::Monday, 600, CallActivity::Accept));
    records.push_back(sptest::make(Weekday::Monday, 700, CallActivity::Accept));
    records.push_back(sptest::make(Weekday::Monday, 1000, CallActivity::Accept));
    const Dataset data = sptest::dataset(std::move(records));

    const auto periods =
        mine_day(data, Weekday::Monday, BasePeriod{20}, ConfidenceThreshold{0.8});
    ASSERT_EQ(periods.size(), 1u);
    EXPECT_EQ(periods[0].start, 860); // 14:20
    EXPECT_EQ(periods[0].end, 960);   // 16:00
    EXPECT_EQ(periods[0].support_count, 20);
    EXPECT_DOUBLE_EQ(periods[0].confidence, 1.0);
    EXPECT_FALSE(periods[0].below_threshold);
}

TEST(MineDay, OnlyOutgoingGivesNothing) {
    const Dataset data = filter_incoming_related(sptest::dataset({
        sptest::make(Weekday::Monday, 600, CallActivity::Outgoing),
        sptest::make(Weekday::Monday, 700, CallActivity::Outgoing),
    }));
    EXPECT_TRUE(mine_day(data, Weekday::Monday, BasePeriod{20}, ConfidenceThreshold{0.8}).empty());
}

TEST(MineDay, FullThresholdSplitsAtAccept) {
    std::vector<ClassifiedRecord> records;
    for (int minute = 600; minute < 660; minute += 5) {
        records.push_back(sptest::make(Weekday::Monday, minute, CallActivity::Reject));
    }
    records.push_back(sptest::make(Weekday::Monday, 625, CallActivity::Accept));
    const Dataset data = sptest::dataset(std::move(records));

    const auto periods =
        mine_day(data, Weekday::Monday, BasePeriod{10}, ConfidenceThreshold{1.0});
    ASSERT_EQ(periods.size(), 2u);
    EXPECT_EQ(periods[0].start, 600);
    EXPECT_EQ(periods[0].end, 620);
    EXPECT_EQ(periods[1].start, 630);
    EXPECT_EQ(periods[1].end, 660);
    // The slice holding the lone Accept is in no period.
    EXPECT_EQ(sptest::brute_force_mine_day(data, Weekday::Monday, 10, 1.0, 1), periods);
}

TEST(MineDay, MatchesBruteForceOracleOnRandomLogs) {
    SplitMix64 rng(77);
    for (int iteration = 0; iteration < 200; ++iteration) {
        const Weekday day = static_cast<Weekday>(rng.next_int(0, 6));
        const Dataset data = sptest::random_day_log(rng, day, 50);
        const int base = rng.next_int(1, 120);
        const double t = 0.5 + 0.5 * rng.next_double();
        const int min_events = rng.next_int(1, 3);
        const auto expected = sptest::brute_force_mine_day(data, day, base, t, min_events);
        const auto actual =
            mine_day(data, day, BasePeriod{base}, ConfidenceThreshold{t}, min_events);
        EXPECT_EQ(actual, expected) << "base=" << base << " t=" << t;
    }
}

} // namespace
