#pragma once

// Lamp-row clock schemes as mixed-radix numeral systems.
//
// A scheme is an ordered list of lamp rows, top row first. Each row is one
// digit position: a row of m lamps shows the m+1 values 0..m (number of lit
// lamps), and every lamp in it is worth the row's unit value. Unit values obey
//
//     unit[k-1] == (lamps[k] + 1) * unit[k],   unit[last] == 1
//
// so place values are products of the lower radices and every value below the
// scheme's capacity has exactly one digit vector.

#include <algorithm>
#include <array>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lampclock/errors.hpp"

namespace lampclock {

using count_t = std::uint64_t;

inline constexpr int minutes_per_day = 1440;
inline constexpr int minutes_per_half_day = 720;

namespace detail {

inline bool checked_mul(count_t a, count_t b, count_t& out) noexcept {
    return !__builtin_mul_overflow(a, b, &out);
}

} // namespace detail

struct RowSpec {
    count_t lamp_count = 1;
    count_t unit_value = 1; // in base units

    friend bool operator==(const RowSpec&, const RowSpec&) = default;
};

// Plain value type. Any combination of fields can be expressed so that
// validate() can report on it; encode/decode refuse invalid schemes.
struct RowScheme {
    std::string name;
    count_t base_unit_minutes = 1;
    count_t cycle_minutes = minutes_per_day;
    std::vector<RowSpec> rows;

    std::vector<count_t> lamp_counts() const {
        std::vector<count_t> out;
        out.reserve(rows.size());
        for (const auto& r : rows) out.push_back(r.lamp_count);
        return out;
    }

    count_t total_lamps() const {
        count_t n = 0;
        for (const auto& r : rows) n += r.lamp_count;
        return n;
    }

    bool uses_meridiem() const noexcept { return cycle_minutes == minutes_per_half_day; }

    friend bool operator==(const RowScheme&, const RowScheme&) = default;
};

// Minutes since midnight, always in [0, 1440).
class TimeOfDay {
public:
    constexpr TimeOfDay() = default;

    explicit TimeOfDay(int minutes_since_midnight) : minutes_(minutes_since_midnight) {
        if (minutes_since_midnight < 0 || minutes_since_midnight >= minutes_per_day)
            throw invalid_argument("time of day out of range: " +
                                   std::to_string(minutes_since_midnight) + " minutes");
    }

    static TimeOfDay from_hm(int hours, int minutes) {
        if (hours < 0 || hours >= 24 || minutes < 0 || minutes >= 60)
            throw invalid_argument("time of day out of range: " + std::to_string(hours) + "h " +
                                   std::to_string(minutes) + "min");
        return TimeOfDay(hours * 60 + minutes);
    }

    constexpr int minutes_since_midnight() const noexcept { return minutes_; }
    constexpr int hour() const noexcept { return minutes_ / 60; }
    constexpr int minute() const noexcept { return minutes_ % 60; }

    friend constexpr auto operator<=>(TimeOfDay, TimeOfDay) = default;

private:
    int minutes_ = 0;
};

// "HH:MM", zero padded.
inline std::string to_string(TimeOfDay t) {
    std::string s(5, '0');
    s[0] = static_cast<char>('0' + t.hour() / 10);
    s[1] = static_cast<char>('0' + t.hour() % 10);
    s[2] = ':';
    s[3] = static_cast<char>('0' + t.minute() / 10);
    s[4] = static_cast<char>('0' + t.minute() % 10);
    return s;
}

// Accepts H:MM, HH:MM and HH:MM:SS. Seconds are validated, then dropped.
inline TimeOfDay parse_time(std::string_view text) {
    auto fail = [&]() -> parse_error {
        return parse_error("invalid time '" + std::string(text) + "', expected HH:MM");
    };

    std::array<int, 3> fields{0, 0, 0};
    std::size_t n_fields = 0;
    std::size_t pos = 0;
    while (true) {
        if (n_fields == fields.size()) throw fail();
        std::size_t end = text.find(':', pos);
        std::string_view part = text.substr(pos, end == std::string_view::npos ? end : end - pos);
        if (part.empty() || part.size() > 2) throw fail();
        if (n_fields > 0 && part.size() != 2) throw fail();
        for (char c : part)
            if (c < '0' || c > '9') throw fail();
        int value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc{} || ptr != part.data() + part.size()) throw fail();
        fields[n_fields++] = value;
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    if (n_fields < 2) throw fail();
    const int hh = fields[0], mm = fields[1], ss = fields[2];
    if (hh >= 24 || mm >= 60 || ss >= 60)
        throw parse_error("time '" + std::string(text) + "' out of range (00:00 to 23:59)");
    return TimeOfDay(hh * 60 + mm);
}

enum class Meridiem { AM, PM };

inline std::string_view to_string(Meridiem m) noexcept { return m == Meridiem::AM ? "AM" : "PM"; }

struct DisplayState {
    std::vector<count_t> digits; // lit lamps per row, top row first
    std::optional<Meridiem> meridiem;

    friend bool operator==(const DisplayState&, const DisplayState&) = default;
};

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind {
    empty_rows,
    zero_base_unit,
    unsupported_cycle,
    zero_lamps,
    zero_unit,
    recurrence_breach,
    non_unit_bottom,
    capacity_overflow,
    capacity_shortfall,
};

struct Violation {
    ViolationKind kind;
    // For per-row problems the 0-based row index; for recurrence breaches the
    // upper row of the pair (the lower one is row + 1).
    std::optional<std::size_t> row;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }

    bool has(ViolationKind kind) const noexcept {
        for (const auto& v : violations)
            if (v.kind == kind) return true;
        return false;
    }

    std::string to_string() const {
        if (ok()) return "ok";
        std::string out;
        for (const auto& v : violations) {
            out += "violation: ";
            out += v.message;
            out += '\n';
        }
        return out;
    }
};

// Unit values (top row first) for the given lamp counts, bottom row worth
// base_unit.
inline std::vector<count_t> derive_units(std::span<const count_t> lamp_counts, count_t base_unit = 1) {
    if (lamp_counts.empty()) throw invalid_scheme("scheme has no rows");
    if (base_unit < 1) throw invalid_scheme("base unit must be positive");
    for (std::size_t k = 0; k < lamp_counts.size(); ++k)
        if (lamp_counts[k] < 1)
            throw invalid_scheme("row " + std::to_string(k) + " has no lamps");

    std::vector<count_t> units(lamp_counts.size());
    units.back() = base_unit;
    for (std::size_t k = lamp_counts.size() - 1; k > 0; --k) {
        if (lamp_counts[k] == UINT64_MAX || !detail::checked_mul(lamp_counts[k] + 1, units[k], units[k - 1]))
            throw invalid_scheme("unit value of row " + std::to_string(k - 1) + " overflows");
    }
    return units;
}

inline std::vector<count_t> derive_units(std::initializer_list<count_t> lamp_counts, count_t base_unit = 1) {
    return derive_units(std::span<const count_t>(lamp_counts.begin(), lamp_counts.size()), base_unit);
}

namespace detail {

inline std::optional<count_t> capacity_of(std::span<const RowSpec> rows) noexcept {
    count_t c = 1;
    for (const auto& r : rows)
        if (r.lamp_count == UINT64_MAX || !checked_mul(c, r.lamp_count + 1, c)) return std::nullopt;
    return c;
}

} // namespace detail

inline ValidationReport validate(const RowScheme& scheme) {
    ValidationReport report;
    auto add = [&](ViolationKind kind, std::optional<std::size_t> row, std::string msg) {
        report.violations.push_back({kind, row, std::move(msg)});
    };

    if (scheme.base_unit_minutes < 1)
        add(ViolationKind::zero_base_unit, std::nullopt, "base_unit_minutes must be at least 1");
    if (scheme.cycle_minutes != minutes_per_half_day && scheme.cycle_minutes != minutes_per_day)
        add(ViolationKind::unsupported_cycle, std::nullopt,
            "cycle_minutes is " + std::to_string(scheme.cycle_minutes) + ", must be 720 or 1440");
    if (scheme.rows.empty()) {
        add(ViolationKind::empty_rows, std::nullopt, "scheme has no rows");
        return report;
    }

    const auto& rows = scheme.rows;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k].lamp_count < 1)
            add(ViolationKind::zero_lamps, k, "rows[" + std::to_string(k) + "] has no lamps");
        if (rows[k].unit_value < 1)
            add(ViolationKind::zero_unit, k, "rows[" + std::to_string(k) + "] has unit value 0");
    }
    for (std::size_t k = 1; k < rows.size(); ++k) {
        count_t expected = 0;
        bool fits = rows[k].lamp_count != UINT64_MAX &&
                    detail::checked_mul(rows[k].lamp_count + 1, rows[k].unit_value, expected);
        if (!fits || rows[k - 1].unit_value != expected) {
            std::ostringstream msg;
            msg << "recurrence breach between rows[" << k - 1 << "] and rows[" << k << "]: unit "
                << rows[k - 1].unit_value << " != (" << rows[k].lamp_count << "+1) x "
                << rows[k].unit_value;
            if (fits) msg << " = " << expected;
            add(ViolationKind::recurrence_breach, k - 1, msg.str());
        }
    }
    if (rows.back().unit_value != 1)
        add(ViolationKind::non_unit_bottom, rows.size() - 1,
            "bottom row unit value is " + std::to_string(rows.back().unit_value) + ", must be 1");

    auto cap = detail::capacity_of(rows);
    count_t covered = 0;
    if (!cap || !detail::checked_mul(*cap, std::max<count_t>(scheme.base_unit_minutes, 1), covered)) {
        add(ViolationKind::capacity_overflow, std::nullopt, "capacity does not fit in 64 bits");
    } else if (covered < scheme.cycle_minutes) {
        add(ViolationKind::capacity_shortfall, std::nullopt,
            "capacity " + std::to_string(*cap) + " x base unit " +
                std::to_string(scheme.base_unit_minutes) + " < cycle " +
                std::to_string(scheme.cycle_minutes) + " minutes");
    }
    return report;
}

inline void require_valid(const RowScheme& scheme) {
    auto report = validate(scheme);
    if (!report.ok())
        throw invalid_scheme("scheme '" + scheme.name + "' is invalid:\n" + report.to_string());
}

// Number of distinct display states: product of (lamps + 1) over rows.
inline count_t capacity(const RowScheme& scheme) {
    require_valid(scheme);
    return *detail::capacity_of(scheme.rows);
}

// Builds a scheme with derived units and validates it.
inline RowScheme make_scheme(std::string name, std::span<const count_t> lamp_counts,
                             count_t base_unit_minutes = 1, count_t cycle_minutes = minutes_per_day) {
    auto units = derive_units(lamp_counts, 1);
    RowScheme scheme{std::move(name), base_unit_minutes, cycle_minutes, {}};
    scheme.rows.reserve(units.size());
    for (std::size_t k = 0; k < units.size(); ++k) scheme.rows.push_back({lamp_counts[k], units[k]});
    require_valid(scheme);
    return scheme;
}

inline RowScheme make_scheme(std::string name, std::initializer_list<count_t> lamp_counts,
                             count_t base_unit_minutes = 1, count_t cycle_minutes = minutes_per_day) {
    return make_scheme(std::move(name), std::span<const count_t>(lamp_counts.begin(), lamp_counts.size()),
                       base_unit_minutes, cycle_minutes);
}

// 1, 2, 3, 4, 5 lamps worth 6h, 2h, 30min, 6min, 1min; am/pm carried by the
// meridiem flag.
inline RowScheme triangular_scheme() {
    return make_scheme("triangular-12h", {1, 2, 3, 4, 5}, 1, minutes_per_half_day);
}

// 4, 4, 11, 4 lamps worth 5h, 1h, 5min, 1min.
inline RowScheme berlin_scheme() {
    return make_scheme("berlin-24h", {4, 4, 11, 4}, 1, minutes_per_day);
}

// ---------------------------------------------------------------------------
// Encoding

inline DisplayState encode(TimeOfDay time, const RowScheme& scheme) {
    require_valid(scheme);

    DisplayState state;
    count_t minutes = static_cast<count_t>(time.minutes_since_midnight());
    if (scheme.uses_meridiem()) {
        state.meridiem = minutes < minutes_per_half_day ? Meridiem::AM : Meridiem::PM;
        minutes %= minutes_per_half_day;
    }

    count_t remainder = minutes / scheme.base_unit_minutes;
    state.digits.reserve(scheme.rows.size());
    for (const auto& row : scheme.rows) {
        state.digits.push_back(remainder / row.unit_value);
        remainder %= row.unit_value;
    }
    return state;
}

// Row count, per-row bounds and meridiem presence. Does not check the cycle.
inline void check_state_structure(const DisplayState& state, const RowScheme& scheme) {
    if (state.digits.size() != scheme.rows.size())
        throw invalid_state("state has " + std::to_string(state.digits.size()) + " rows, scheme '" +
                            scheme.name + "' has " + std::to_string(scheme.rows.size()));
    for (std::size_t k = 0; k < state.digits.size(); ++k)
        if (state.digits[k] > scheme.rows[k].lamp_count)
            throw invalid_state("rows[" + std::to_string(k) + "] has " + std::to_string(state.digits[k]) +
                                " lit lamps but only " + std::to_string(scheme.rows[k].lamp_count) +
                                " lamps");
    if (scheme.uses_meridiem() && !state.meridiem)
        throw invalid_state("scheme '" + scheme.name + "' covers 12 hours and needs an am/pm flag");
    if (!scheme.uses_meridiem() && state.meridiem)
        throw invalid_state("scheme '" + scheme.name + "' covers 24 hours and takes no am/pm flag");
}

// Minutes shown by the lit lamps alone, ignoring the meridiem and the cycle.
// May exceed the cycle for schemes with surplus capacity (Berlin all-on is
// 1499).
inline count_t displayed_minutes(const DisplayState& state, const RowScheme& scheme) {
    require_valid(scheme);
    DisplayState bare{state.digits, scheme.uses_meridiem() ? std::optional(Meridiem::AM) : std::nullopt};
    check_state_structure(bare, scheme);
    count_t units = 0;
    // digits <= lamps keeps the sum below capacity, which validate() bounds
    for (std::size_t k = 0; k < state.digits.size(); ++k) units += state.digits[k] * scheme.rows[k].unit_value;
    return units * scheme.base_unit_minutes;
}

// Sum of lit lamp values plus 12h for PM. Throws invalid_state for digits out
// of range, a missing or unexpected meridiem, or a value past the cycle.
inline TimeOfDay decode(const DisplayState& state, const RowScheme& scheme) {
    check_state_structure(state, scheme);
    count_t minutes = displayed_minutes(state, scheme);
    if (minutes >= scheme.cycle_minutes)
        throw invalid_state("state shows " + std::to_string(minutes) + " minutes, past the cycle of " +
                            std::to_string(scheme.cycle_minutes));
    if (state.meridiem == Meridiem::PM) minutes += minutes_per_half_day;
    return TimeOfDay(static_cast<int>(minutes));
}

// Every lamp lit.
inline DisplayState all_on(const RowScheme& scheme, std::optional<Meridiem> meridiem = std::nullopt) {
    DisplayState s{scheme.lamp_counts(), meridiem};
    if (scheme.uses_meridiem() && !meridiem) s.meridiem = Meridiem::AM;
    return s;
}

} // namespace lampclock
