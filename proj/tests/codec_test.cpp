#include <gtest/gtest.h>

#include <random>
#include <set>

#include "lampclock/catalog.hpp"
#include "lampclock/codec.hpp"
#include "oracles.hpp"

using namespace lampclock;

namespace {

TimeOfDay hm(int h, int m) { return TimeOfDay::from_hm(h, m); }

} // namespace

TEST(DeriveUnits, TriangularRowValues) {
    EXPECT_EQ(derive_units({1, 2, 3, 4, 5}, 1), (std::vector<count_t>{360, 120, 30, 6, 1}));
}

TEST(DeriveUnits, BerlinRowValues) {
    EXPECT_EQ(derive_units({4, 4, 11, 4}, 1), (std::vector<count_t>{300, 60, 5, 1}));
}

TEST(DeriveUnits, SingleRowIsBaseUnit) {
    EXPECT_EQ(derive_units({3}, 1), (std::vector<count_t>{1}));
    EXPECT_EQ(derive_units({3}, 5), (std::vector<count_t>{5}));
}

TEST(DeriveUnits, BaseUnitScalesEveryRow) {
    EXPECT_EQ(derive_units({1, 2}, 10), (std::vector<count_t>{30, 10}));
}

TEST(DeriveUnits, RejectsEmptyAndZeroLamps) {
    EXPECT_THROW(derive_units(std::span<const count_t>{}, 1), invalid_scheme);
    EXPECT_THROW(derive_units({1, 0, 3}, 1), invalid_scheme);
    EXPECT_THROW(derive_units({1, 2}, 0), invalid_scheme);
}

TEST(DeriveUnits, OverflowIsReported) {
    std::vector<count_t> lamps(70, 1); // 2^69 does not fit
    EXPECT_THROW(derive_units(lamps, 1), invalid_scheme);
}

TEST(DeriveUnits, RecurrenceHoldsForRandomLampCounts) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<count_t> lamps(1 + rng() % 6);
        for (auto& l : lamps) l = 1 + rng() % 12;
        const count_t base = 1 + rng() % 5;
        const auto units = derive_units(lamps, base);
        ASSERT_EQ(units.size(), lamps.size());
        EXPECT_EQ(units.back(), base);
        for (std::size_t k = 1; k < units.size(); ++k) EXPECT_EQ(units[k - 1], (lamps[k] + 1) * units[k]);
        // independent route: radix products
        const auto pv = oracle::place_values(lamps);
        for (std::size_t k = 0; k < units.size(); ++k) EXPECT_EQ(units[k], pv[k] * base);
    }
}

TEST(Capacity, BuiltIns) {
    EXPECT_EQ(capacity(triangular_scheme()), 720u);
    EXPECT_EQ(capacity(berlin_scheme()), 1500u);
}

TEST(Capacity, SingleLampRow) {
    // one lamp worth 12 hours
    RowScheme one{"one", 720, 1440, {{1, 1}}};
    EXPECT_EQ(capacity(one), 2u);
}

TEST(Capacity, TriangularIsFactorial) {
    for (count_t n = 1; n <= 7; ++n) {
        std::vector<count_t> lamps;
        for (count_t k = 1; k <= n; ++k) lamps.push_back(k);
        // base unit large enough that the scheme covers a day
        const count_t base = (minutes_per_day + oracle::factorial(n + 1) - 1) / oracle::factorial(n + 1);
        auto s = make_scheme("tri", lamps, base, minutes_per_day);
        EXPECT_EQ(capacity(s), oracle::factorial(n + 1)) << "n=" << n;
    }
}

TEST(Encode, WorkedExample0449) {
    auto s = encode(hm(4, 49), triangular_scheme());
    EXPECT_EQ(s.digits, (std::vector<count_t>{0, 2, 1, 3, 1}));
    EXPECT_EQ(s.meridiem, Meridiem::AM);
}

TEST(Encode, Midnight) {
    auto s = encode(hm(0, 0), triangular_scheme());
    EXPECT_EQ(s.digits, (std::vector<count_t>{0, 0, 0, 0, 0}));
    EXPECT_EQ(s.meridiem, Meridiem::AM);
}

TEST(Encode, AllOnAt1159) {
    auto s = encode(hm(11, 59), triangular_scheme());
    EXPECT_EQ(s.digits, (std::vector<count_t>{1, 2, 3, 4, 5}));
    EXPECT_EQ(s.meridiem, Meridiem::AM);
}

TEST(Encode, FigureTimes) {
    const auto tri = triangular_scheme();
    EXPECT_EQ(encode(hm(10, 31), berlin_scheme()).digits, (std::vector<count_t>{2, 0, 6, 1}));
    EXPECT_EQ(encode(hm(10, 31), berlin_scheme()).meridiem, std::nullopt);
    EXPECT_EQ(encode(hm(10, 31), tri).digits, (std::vector<count_t>{1, 2, 1, 0, 1}));
    EXPECT_EQ(encode(hm(8, 5), tri).digits, (std::vector<count_t>{1, 1, 0, 0, 5}));
    EXPECT_EQ(encode(hm(11, 11), tri).digits, (std::vector<count_t>{1, 2, 2, 1, 5}));
}

TEST(Encode, AfternoonUsesPm) {
    auto s = encode(hm(16, 49), triangular_scheme());
    EXPECT_EQ(s.digits, (std::vector<count_t>{0, 2, 1, 3, 1}));
    EXPECT_EQ(s.meridiem, Meridiem::PM);
}

TEST(Encode, MatchesBruteForceForEveryMinute) {
    for (const auto& scheme : {triangular_scheme(), berlin_scheme()}) {
        for (int t = 0; t < minutes_per_day; ++t) {
            const auto state = encode(TimeOfDay(t), scheme);
            const count_t value = scheme.uses_meridiem() ? t % minutes_per_half_day : t;
            auto expected = oracle::brute_force_encode(value, scheme.lamp_counts());
            ASSERT_TRUE(expected);
            ASSERT_EQ(state.digits, *expected) << scheme.name << " t=" << t;
        }
    }
}

TEST(Encode, RefusesInvalidScheme) {
    RowScheme broken{"broken", 1, 720, {{1, 360}, {2, 100}, {3, 30}, {4, 6}, {5, 1}}};
    EXPECT_THROW(encode(hm(1, 0), broken), invalid_scheme);
}

TEST(Encode, CoarseBaseUnitTruncates) {
    // 5-minute resolution: 12 x 12 states of 5 minutes cover 12 hours
    auto s = make_scheme("coarse", {11, 11}, 5, 720);
    EXPECT_EQ(encode(hm(4, 49), s).digits, (std::vector<count_t>{4, 9}));
    EXPECT_EQ(decode(encode(hm(4, 49), s), s), hm(4, 45));
}

TEST(Decode, WorkedExample) {
    EXPECT_EQ(decode({{0, 2, 1, 3, 1}, Meridiem::AM}, triangular_scheme()), hm(4, 49));
}

TEST(Decode, PmOffsetOnly) {
    EXPECT_EQ(decode({{0, 0, 0, 0, 0}, Meridiem::PM}, triangular_scheme()), hm(12, 0));
}

TEST(Decode, Berlin) {
    EXPECT_EQ(decode({{2, 0, 6, 1}, std::nullopt}, berlin_scheme()), hm(10, 31));
}

TEST(Decode, AllOnTriangularIs1159) {
    EXPECT_EQ(decode(all_on(triangular_scheme()), triangular_scheme()), hm(11, 59));
    EXPECT_EQ(decode(all_on(triangular_scheme(), Meridiem::PM), triangular_scheme()), hm(23, 59));
}

TEST(Decode, Errors) {
    const auto tri = triangular_scheme();
    EXPECT_THROW(decode({{0, 3, 0, 0, 0}, Meridiem::AM}, tri), invalid_state);
    EXPECT_THROW(decode({{0, 0, 0, 0}, Meridiem::AM}, tri), invalid_state);
    EXPECT_THROW(decode({{0, 0, 0, 0, 0}, std::nullopt}, tri), invalid_state);
    EXPECT_THROW(decode({{0, 0, 0, 0}, Meridiem::AM}, berlin_scheme()), invalid_state);
    // Berlin surplus states show more than 23:59
    EXPECT_THROW(decode({{4, 4, 0, 0}, std::nullopt}, berlin_scheme()), invalid_state);
}

TEST(Decode, AllOnSumIsCapacityMinusOne) {
    std::mt19937_64 rng(11);
    std::vector<RowScheme> schemes{triangular_scheme(), berlin_scheme()};
    for (int i = 0; i < 200; ++i) {
        std::vector<count_t> lamps(1 + rng() % 5);
        for (auto& l : lamps) l = 1 + rng() % 9;
        count_t cap = 1;
        for (auto l : lamps) cap *= l + 1;
        const count_t base = (minutes_per_day + cap - 1) / cap;
        schemes.push_back(make_scheme("r", lamps, base, minutes_per_day));
    }
    for (const auto& s : schemes)
        EXPECT_EQ(displayed_minutes(all_on(s), s), (capacity(s) - 1) * s.base_unit_minutes) << s.name;
    EXPECT_EQ(displayed_minutes(all_on(berlin_scheme()), berlin_scheme()), 1499u);
}

TEST(RoundTrip, EveryMinuteOnBuiltIns) {
    for (const auto& scheme : {triangular_scheme(), berlin_scheme()})
        for (int t = 0; t < minutes_per_day; ++t) {
            const auto state = encode(TimeOfDay(t), scheme);
            for (std::size_t k = 0; k < state.digits.size(); ++k)
                ASSERT_LE(state.digits[k], scheme.rows[k].lamp_count);
            ASSERT_EQ(decode(state, scheme).minutes_since_midnight(), t) << scheme.name;
        }
}

TEST(Uniqueness, DecodeIsInjectiveOverAllStates) {
    for (const auto& scheme : {triangular_scheme(), berlin_scheme()}) {
        std::set<count_t> seen;
        std::size_t states = 0;
        oracle::for_each_state(scheme.lamp_counts(), [&](const std::vector<count_t>& d) {
            ++states;
            const auto v = displayed_minutes({d, std::nullopt}, scheme);
            EXPECT_LT(v, capacity(scheme));
            EXPECT_TRUE(seen.insert(v).second) << "duplicate value " << v;
        });
        EXPECT_EQ(states, capacity(scheme));
        EXPECT_EQ(seen.size(), capacity(scheme));
    }
}

TEST(Validate, BuiltInsAreOk) {
    EXPECT_TRUE(validate(triangular_scheme()).ok());
    EXPECT_TRUE(validate(berlin_scheme()).ok());
    EXPECT_EQ(validate(triangular_scheme()).to_string(), "ok");
}

TEST(Validate, RecurrenceBreachNamesRowPair) {
    RowScheme s{"bad", 1, 720, {{1, 360}, {2, 100}, {3, 30}, {4, 6}, {5, 1}}};
    auto report = validate(s);
    ASSERT_FALSE(report.ok());
    std::vector<std::size_t> breaches;
    for (const auto& v : report.violations)
        if (v.kind == ViolationKind::recurrence_breach) breaches.push_back(*v.row);
    // 360 != 3 x 100 is the pair (0,1); 100 != 4 x 30 is the pair (1,2)
    EXPECT_EQ(breaches, (std::vector<std::size_t>{0, 1}));
    EXPECT_NE(report.to_string().find("rows[1] and rows[2]"), std::string::npos);
    EXPECT_NE(report.to_string().find("= 120"), std::string::npos);
}

TEST(Validate, CapacityShortfall) {
    auto units = derive_units({1, 2}, 1);
    RowScheme s{"small", 1, 720, {{1, units[0]}, {2, units[1]}}};
    auto report = validate(s);
    ASSERT_EQ(report.violations.size(), 1u);
    EXPECT_EQ(report.violations[0].kind, ViolationKind::capacity_shortfall);
    EXPECT_NE(report.to_string().find("capacity 6"), std::string::npos);
}

TEST(Validate, ReportsEveryProblem) {
    RowScheme s{"mess", 0, 100, {{0, 4}, {3, 2}}};
    auto r = validate(s);
    EXPECT_TRUE(r.has(ViolationKind::zero_base_unit));
    EXPECT_TRUE(r.has(ViolationKind::unsupported_cycle));
    EXPECT_TRUE(r.has(ViolationKind::zero_lamps));
    EXPECT_TRUE(r.has(ViolationKind::recurrence_breach));
    EXPECT_TRUE(r.has(ViolationKind::non_unit_bottom));
    EXPECT_TRUE(validate(RowScheme{"empty", 1, 720, {}}).has(ViolationKind::empty_rows));
}

TEST(Validate, SurplusCapacityIsLegal) {
    EXPECT_GT(capacity(berlin_scheme()), static_cast<count_t>(minutes_per_day));
    EXPECT_TRUE(validate(berlin_scheme()).ok());
}

TEST(TimeOfDay, ParseAndFormat) {
    EXPECT_EQ(parse_time("04:49"), hm(4, 49));
    EXPECT_EQ(parse_time("4:49"), hm(4, 49));
    EXPECT_EQ(parse_time("23:59:59"), hm(23, 59));
    EXPECT_EQ(to_string(hm(4, 9)), "04:09");
    for (const char* bad : {"24:00", "12:60", "", "1200", "12:5", "ab:cd", "12:00:60", "12:00:00:00", "-1:00",
                            "12:"})
        EXPECT_THROW(parse_time(bad), parse_error) << bad;
    EXPECT_THROW(TimeOfDay(1440), invalid_argument);
    EXPECT_THROW(TimeOfDay(-1), invalid_argument);
}

TEST(Catalog, BuiltInsAndAliases) {
    SchemeCatalog cat;
    EXPECT_EQ(cat.at("triangular"), triangular_scheme());
    EXPECT_EQ(cat.at("triangular-12h"), triangular_scheme());
    EXPECT_EQ(cat.at("berlin"), berlin_scheme());
    EXPECT_EQ(cat.find("nope"), nullptr);
    EXPECT_THROW(cat.at("nope"), invalid_scheme);
    EXPECT_THROW(cat.add(triangular_scheme()), invalid_scheme);
    EXPECT_THROW(cat.add(RowScheme{"bad", 1, 720, {{1, 1}}}), invalid_scheme);
    cat.add(make_scheme("hex", {5, 11, 11}, 1, 720));
    EXPECT_TRUE(cat.contains("hex"));
    EXPECT_EQ(cat.names().size(), 3u);
}
