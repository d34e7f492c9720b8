#pragma once

// Display state serialization: ANSI terminal art, SVG, bit strings, JSON.
//
// Lit lamps are always drawn leftmost-contiguous in their row. A row with d
// lit lamps out of m is "1"*d + "0"*(m-d) in bit form, so the gapped
// patterns a real lamp row could show are not representable.

#include <array>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lampclock/codec.hpp"

namespace lampclock {

enum class Format { ansi, svg, bits, json };
enum class Layout { triangle_centered, left_aligned, berlin_blocks };

struct RenderSpec {
    Format format = Format::ansi;
    std::string lit_glyph = "●";
    std::string unlit_glyph = "○";
    std::string am_color = "green";
    std::string pm_color = "red";
    // Unset picks berlin_blocks for the 4/4/11/4 layout, triangle_centered
    // otherwise.
    std::optional<Layout> layout{};
    // ANSI only. The CLI turns this off for pipes and NO_COLOR.
    bool color = true;
};

inline std::optional<Format> parse_format(std::string_view s) {
    if (s == "ansi") return Format::ansi;
    if (s == "svg") return Format::svg;
    if (s == "bits") return Format::bits;
    if (s == "json") return Format::json;
    return std::nullopt;
}

inline std::optional<Layout> parse_layout(std::string_view s) {
    if (s == "triangle" || s == "triangle-centered") return Layout::triangle_centered;
    if (s == "left" || s == "left-aligned") return Layout::left_aligned;
    if (s == "berlin" || s == "berlin-blocks") return Layout::berlin_blocks;
    return std::nullopt;
}

namespace detail {

// Number of code points in a UTF-8 string, or nullopt if malformed.
inline std::optional<std::size_t> utf8_length(std::string_view s) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < s.size();) {
        auto c = static_cast<unsigned char>(s[i]);
        std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : (c >> 3) == 0x1E ? 4 : 0;
        if (len == 0 || i + len > s.size()) return std::nullopt;
        for (std::size_t j = 1; j < len; ++j)
            if ((static_cast<unsigned char>(s[i + j]) & 0xC0) != 0x80) return std::nullopt;
        i += len;
        ++n;
    }
    return n;
}

inline bool is_single_visible_glyph(std::string_view g) {
    auto len = utf8_length(g);
    if (!len || *len != 1) return false;
    auto c = static_cast<unsigned char>(g[0]);
    return c >= 0x80 || (c > 0x20 && c != 0x7F);
}

inline std::optional<int> ansi_color_code(std::string_view name) {
    static constexpr std::array<std::string_view, 8> names{"black", "red",     "green", "yellow",
                                                           "blue",  "magenta", "cyan",  "white"};
    for (std::size_t k = 0; k < names.size(); ++k)
        if (names[k] == name) return 30 + static_cast<int>(k);
    return std::nullopt;
}

// Color names and #rgb values only; they go into XML attributes verbatim.
inline bool is_svg_color(std::string_view c) {
    if (c.empty()) return false;
    for (char ch : c)
        if (!((ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '#'))
            return false;
    return true;
}

inline count_t widest_row(const RowScheme& scheme) {
    count_t w = 0;
    for (const auto& r : scheme.rows) w = std::max(w, r.lamp_count);
    return w;
}

inline bool is_berlin_shape(const RowScheme& scheme) {
    return scheme.lamp_counts() == std::vector<count_t>{4, 4, 11, 4};
}

// Lit color for one lamp, or nullopt for the format's neutral color. The
// every-third accent in the third Berlin row is styling only.
inline std::optional<std::string> lit_color(const DisplayState& state, Layout layout, const RenderSpec& spec,
                                            std::size_t row, std::size_t lamp) {
    if (state.meridiem) return *state.meridiem == Meridiem::AM ? spec.am_color : spec.pm_color;
    if (layout == Layout::berlin_blocks) {
        if (row < 2) return "red";
        if (row == 2 && (lamp + 1) % 3 == 0) return "red";
        return "yellow";
    }
    return std::nullopt;
}

inline std::string format_number(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
}

} // namespace detail

inline Layout resolve_layout(const RowScheme& scheme, const RenderSpec& spec) {
    if (spec.layout) return *spec.layout;
    return detail::is_berlin_shape(scheme) ? Layout::berlin_blocks : Layout::triangle_centered;
}

inline void check_render_spec(const RenderSpec& spec, const RowScheme& scheme) {
    if (resolve_layout(scheme, spec) == Layout::berlin_blocks && scheme.rows.size() != 4)
        throw invalid_render("berlin block layout needs a 4-row scheme, '" + scheme.name + "' has " +
                             std::to_string(scheme.rows.size()));
    if (spec.format == Format::ansi) {
        if (!detail::is_single_visible_glyph(spec.lit_glyph))
            throw invalid_render("lit glyph must be one visible character");
        if (!detail::is_single_visible_glyph(spec.unlit_glyph))
            throw invalid_render("unlit glyph must be one visible character");
        if (spec.color) {
            if (!detail::ansi_color_code(spec.am_color))
                throw invalid_render("unknown terminal color '" + spec.am_color + "'");
            if (!detail::ansi_color_code(spec.pm_color))
                throw invalid_render("unknown terminal color '" + spec.pm_color + "'");
        }
    }
    if (spec.format == Format::svg) {
        if (!detail::is_svg_color(spec.am_color)) throw invalid_render("bad color '" + spec.am_color + "'");
        if (!detail::is_svg_color(spec.pm_color)) throw invalid_render("bad color '" + spec.pm_color + "'");
    }
}

// "0/11/100/1110/10000" for 04:49 on the triangular scheme.
inline std::string render_bits(const DisplayState& state, const RowScheme& scheme) {
    check_state_structure(state, scheme);
    std::string out;
    for (std::size_t k = 0; k < scheme.rows.size(); ++k) {
        if (k) out += '/';
        out.append(state.digits[k], '1');
        out.append(scheme.rows[k].lamp_count - state.digits[k], '0');
    }
    return out;
}

// Inverse of render_bits. The meridiem is passed through unchecked since the
// bit form does not carry it.
inline DisplayState parse_bits(std::string_view text, const RowScheme& scheme,
                               std::optional<Meridiem> meridiem = std::nullopt) {
    std::vector<std::string_view> parts;
    for (std::size_t pos = 0;;) {
        auto slash = text.find('/', pos);
        parts.push_back(text.substr(pos, slash == std::string_view::npos ? slash : slash - pos));
        if (slash == std::string_view::npos) break;
        pos = slash + 1;
    }
    if (parts.size() != scheme.rows.size())
        throw parse_error("expected " + std::to_string(scheme.rows.size()) + " rows separated by '/', got " +
                          std::to_string(parts.size()));

    DisplayState state{{}, meridiem};
    state.digits.reserve(parts.size());
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto row = parts[k];
        if (row.size() != scheme.rows[k].lamp_count)
            throw parse_error("row " + std::to_string(k + 1) + ": expected " +
                              std::to_string(scheme.rows[k].lamp_count) + " lamps, got " +
                              std::to_string(row.size()));
        count_t lit = 0;
        bool seen_off = false;
        for (char c : row) {
            if (c == '1') {
                if (seen_off) throw monotone_fill_error(k + 1);
                ++lit;
            } else if (c == '0') {
                seen_off = true;
            } else {
                throw parse_error("row " + std::to_string(k + 1) + ": unexpected character '" +
                                  std::string(1, c) + "', expected 0 or 1");
            }
        }
        state.digits.push_back(lit);
    }
    return state;
}

// {"scheme":...,"digits":[...],"meridiem":"AM"|"PM"|null,"time":"HH:MM"}.
// Throws invalid_state for states past the cycle, which show no time of day.
inline std::string render_json(const DisplayState& state, const RowScheme& scheme) {
    const auto time = decode(state, scheme);
    nlohmann::ordered_json doc;
    doc["scheme"] = scheme.name;
    doc["digits"] = state.digits;
    doc["meridiem"] = state.meridiem ? nlohmann::ordered_json(std::string(to_string(*state.meridiem)))
                                     : nlohmann::ordered_json(nullptr);
    doc["time"] = to_string(time);
    return doc.dump();
}

inline std::string render_ansi(const DisplayState& state, const RowScheme& scheme, const RenderSpec& spec) {
    check_state_structure(state, scheme);
    check_render_spec(spec, scheme);
    const Layout layout = resolve_layout(scheme, spec);
    const count_t widest = detail::widest_row(scheme);

    auto glyph = [&](std::size_t row, std::size_t lamp, bool lit) {
        if (!lit) return spec.unlit_glyph;
        auto color = detail::lit_color(state, layout, spec, row, lamp);
        if (!spec.color || !color) return spec.lit_glyph;
        return "\x1b[" + std::to_string(*detail::ansi_color_code(*color)) + "m" + spec.lit_glyph + "\x1b[0m";
    };

    std::string out;
    for (std::size_t k = 0; k < scheme.rows.size(); ++k) {
        const count_t lamps = scheme.rows[k].lamp_count;
        std::string line;
        // cell: columns per lamp; lead: blank columns before the first cell
        count_t cell = 2, lead = 0;
        if (layout == Layout::triangle_centered) {
            lead = widest - lamps;
        } else if (layout == Layout::berlin_blocks) {
            cell = std::max<count_t>(2, 2 * widest / lamps);
            lead = (2 * widest - cell * lamps) / 2;
        }
        line.append(lead, ' ');
        for (std::size_t i = 0; i < lamps; ++i) {
            const count_t before = (cell - 1) / 2;
            line.append(before, ' ');
            line += glyph(k, i, i < state.digits[k]);
            if (i + 1 < lamps) line.append(cell - 1 - before, ' ');
        }
        out += line;
        out += '\n';
    }
    return out;
}

// Standalone SVG 1.1: one circle per lamp (triangle layouts) or one rect
// per lamp (berlin blocks) on a 40-unit lamp pitch, rows top-down.
inline std::string render_svg(const DisplayState& state, const RowScheme& scheme, const RenderSpec& spec) {
    check_state_structure(state, scheme);
    check_render_spec(spec, scheme);
    constexpr double pitch = 40.0;
    const Layout layout = resolve_layout(scheme, spec);
    const auto widest = static_cast<double>(detail::widest_row(scheme));
    const double width = pitch * widest;
    const double height = pitch * static_cast<double>(scheme.rows.size());
    using detail::format_number;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << format_number(width)
       << "\" height=\"" << format_number(height) << "\" viewBox=\"0 0 " << format_number(width) << ' '
       << format_number(height) << "\">\n";
    for (std::size_t k = 0; k < scheme.rows.size(); ++k) {
        const auto lamps = static_cast<double>(scheme.rows[k].lamp_count);
        const double top = pitch * static_cast<double>(k);
        for (std::size_t i = 0; i < scheme.rows[k].lamp_count; ++i) {
            const bool lit = i < state.digits[k];
            const std::string fill =
                lit ? detail::lit_color(state, layout, spec, k, i).value_or("black") : "lightgray";
            if (layout == Layout::berlin_blocks) {
                const double cell = width / lamps;
                os << "  <rect x=\"" << format_number(cell * static_cast<double>(i) + 2) << "\" y=\""
                   << format_number(top + 4) << "\" width=\"" << format_number(cell - 4) << "\" height=\""
                   << format_number(pitch - 8) << "\" fill=\"" << fill << "\"/>\n";
            } else {
                const double offset = layout == Layout::triangle_centered ? (widest - lamps) * pitch / 2 : 0.0;
                os << "  <circle cx=\"" << format_number(offset + pitch * static_cast<double>(i) + pitch / 2)
                   << "\" cy=\"" << format_number(top + pitch / 2) << "\" r=\"" << format_number(pitch * 0.4)
                   << "\" fill=\"" << fill << "\"/>\n";
            }
        }
    }
    os << "</svg>\n";
    return os.str();
}

inline std::string render(const DisplayState& state, const RowScheme& scheme, const RenderSpec& spec = {}) {
    check_render_spec(spec, scheme);
    switch (spec.format) {
    case Format::ansi: return render_ansi(state, scheme, spec);
    case Format::svg: return render_svg(state, scheme, spec);
    case Format::bits: return render_bits(state, scheme);
    case Format::json: return render_json(state, scheme);
    }
    throw invalid_render("unknown format");
}

} // namespace lampclock
