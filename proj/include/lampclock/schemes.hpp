#pragma once

// Lamp layouts that realize a given number of display states.
//
// A row of m lamps contributes a factor m+1 to the state count, so the
// layouts for N states are exactly the ordered factorizations of N into
// factors >= 2 (factor f becomes a row of f-1 lamps). Order matters: the top
// row is the most significant digit.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lampclock/codec.hpp"

namespace lampclock {

enum class ShapeClass { triangular, rectangular, irregular };

inline std::string_view to_string(ShapeClass c) noexcept {
    switch (c) {
    case ShapeClass::triangular: return "TRIANGULAR";
    case ShapeClass::rectangular: return "RECTANGULAR";
    case ShapeClass::irregular: return "IRREGULAR";
    }
    return "IRREGULAR";
}

// [1, 2, ..., n] is triangular; two or more equal rows are rectangular.
// [1] counts as triangular, not rectangular.
inline ShapeClass classify(const std::vector<count_t>& lamp_counts) noexcept {
    bool triangular = !lamp_counts.empty();
    for (std::size_t k = 0; k < lamp_counts.size() && triangular; ++k)
        triangular = lamp_counts[k] == k + 1;
    if (triangular) return ShapeClass::triangular;

    if (lamp_counts.size() >= 2) {
        bool equal = true;
        for (auto c : lamp_counts) equal = equal && c == lamp_counts.front();
        if (equal) return ShapeClass::rectangular;
    }
    return ShapeClass::irregular;
}

struct SchemeShape {
    std::vector<count_t> lamp_counts;
    ShapeClass classification = ShapeClass::irregular;
    count_t total_lamps = 0;

    static SchemeShape from_lamps(std::vector<count_t> lamps) {
        SchemeShape s;
        for (auto c : lamps) s.total_lamps += c;
        s.classification = classify(lamps);
        s.lamp_counts = std::move(lamps);
        return s;
    }

    friend bool operator==(const SchemeShape&, const SchemeShape&) = default;
};

// "[1,2,3,4,5]"
inline std::string format_lamps(const std::vector<count_t>& lamps) {
    std::string out = "[";
    for (std::size_t k = 0; k < lamps.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(lamps[k]);
    }
    return out + "]";
}

inline constexpr count_t max_target_states = 1'000'000'000;
inline constexpr std::size_t default_shape_limit = 100'000;

namespace detail {

inline void check_target(count_t target_states) {
    if (target_states < 2)
        throw invalid_argument("target state count must be at least 2, got " + std::to_string(target_states));
    if (target_states > max_target_states)
        throw invalid_argument("target state count must be at most 10^9, got " + std::to_string(target_states));
}

// Depth-first over factors in ascending order, which yields the
// factorizations in lexicographic order of their lamp counts.
class ShapeEnumerator {
public:
    ShapeEnumerator(std::optional<ShapeClass> filter, std::size_t limit, count_t target)
        : filter_(filter), limit_(limit), target_(target) {}

    void run(count_t remaining) {
        if (remaining == 1) {
            if (++visited_ > limit_)
                throw enumeration_overflow("more than " + std::to_string(limit_) + " shapes realize " +
                                           std::to_string(target_) + " states");
            auto shape = SchemeShape::from_lamps(prefix_);
            if (!filter_ || shape.classification == *filter_) out_.push_back(std::move(shape));
            return;
        }
        for (count_t f = 2; f * f <= remaining; ++f) {
            if (remaining % f) continue;
            descend(f, remaining);
        }
        // large divisors, ascending: the cofactors of the small ones, then remaining itself
        std::vector<count_t> large;
        for (count_t f = 2; f * f <= remaining; ++f)
            if (remaining % f == 0 && f * f != remaining) large.push_back(remaining / f);
        for (auto it = large.rbegin(); it != large.rend(); ++it) descend(*it, remaining);
        descend(remaining, remaining);
    }

    std::vector<SchemeShape> take() { return std::move(out_); }

private:
    void descend(count_t factor, count_t remaining) {
        prefix_.push_back(factor - 1);
        run(remaining / factor);
        prefix_.pop_back();
    }

    std::optional<ShapeClass> filter_;
    std::size_t limit_;
    count_t target_;
    std::size_t visited_ = 0;
    std::vector<count_t> prefix_;
    std::vector<SchemeShape> out_;
};

} // namespace detail

// Every ordered factorization of target_states into factors >= 2, as lamp
// rows, in lexicographic order of lamp counts. The limit bounds the number
// of factorizations visited (before filtering); exceeding it throws
// enumeration_overflow.
inline std::vector<SchemeShape> enumerate_shapes(count_t target_states,
                                                 std::optional<ShapeClass> filter = std::nullopt,
                                                 std::size_t limit = default_shape_limit) {
    detail::check_target(target_states);
    detail::ShapeEnumerator e(filter, limit, target_states);
    e.run(target_states);
    return e.take();
}

// n if target_states == (n+1)! for some n >= 1.
inline std::optional<std::size_t> is_triangular_feasible(count_t target_states) {
    detail::check_target(target_states);
    count_t factorial = 1;
    for (count_t k = 2;; ++k) {
        factorial *= k;
        if (factorial == target_states) return static_cast<std::size_t>(k - 1);
        if (factorial > target_states) return std::nullopt;
    }
}

inline RowScheme shape_to_scheme(const SchemeShape& shape, count_t base_unit_minutes, count_t cycle_minutes,
                                 std::optional<std::string> name = std::nullopt) {
    std::string n = name ? *name : "rows-" + format_lamps(shape.lamp_counts);
    return make_scheme(std::move(n), shape.lamp_counts, base_unit_minutes, cycle_minutes);
}

} // namespace lampclock
