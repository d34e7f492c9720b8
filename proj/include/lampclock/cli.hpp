#pragma once

// Command implementations behind the lampclock tool. Each command writes to
// the context's streams and returns the process exit status:
//   0 success, 2 bad input (time, bits, arguments), 3 bad scheme.

#include <atomic>
#include <chrono>
#include <cstddef>
#include <filesystem>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "lampclock/catalog.hpp"
#include "lampclock/codec.hpp"
#include "lampclock/render.hpp"
#include "lampclock/scheme_io.hpp"
#include "lampclock/schemes.hpp"
#include "lampclock/time_source.hpp"

namespace lampclock::cli {

enum exit_code : int { exit_ok = 0, exit_input_error = 2, exit_scheme_error = 3 };

enum class ColorMode { automatic, always, never };

inline std::optional<ColorMode> parse_color_mode(std::string_view s) {
    if (s == "auto") return ColorMode::automatic;
    if (s == "always") return ColorMode::always;
    if (s == "never") return ColorMode::never;
    return std::nullopt;
}

struct CliConfig {
    std::string scheme_selector = "triangular";
    Format format = Format::ansi;
    std::optional<std::string> time_override;
    unsigned tick_interval_seconds = 1;
    ColorMode color_mode = ColorMode::automatic;
    std::optional<Layout> layout;
    std::string lit_glyph = RenderSpec{}.lit_glyph;
    std::string unlit_glyph = RenderSpec{}.unlit_glyph;
    std::string am_color = RenderSpec{}.am_color;
    std::string pm_color = RenderSpec{}.pm_color;
    std::optional<Meridiem> meridiem;     // decode
    std::optional<std::size_t> max_frames; // tick; unset runs until interrupted
};

struct TickStats {
    std::size_t frames = 0;
    std::size_t encodes = 0;
};

// Everything a command touches outside its arguments.
struct Context {
    std::ostream& out;
    std::ostream& err;
    TimeSource& clock;
    Sleeper& sleeper;
    const std::atomic<bool>& stop;
    bool out_is_terminal = false;
    bool no_color_env = false;
    SchemeCatalog catalog{};
    TickStats* tick_stats = nullptr;
};

inline bool use_color(ColorMode mode, const Context& ctx) {
    switch (mode) {
    case ColorMode::always: return true;
    case ColorMode::never: return false;
    case ColorMode::automatic: return ctx.out_is_terminal && !ctx.no_color_env;
    }
    return false;
}

inline RenderSpec make_render_spec(const CliConfig& config, const Context& ctx) {
    RenderSpec spec;
    spec.format = config.format;
    spec.layout = config.layout;
    spec.lit_glyph = config.lit_glyph;
    spec.unlit_glyph = config.unlit_glyph;
    spec.am_color = config.am_color;
    spec.pm_color = config.pm_color;
    spec.color = use_color(config.color_mode, ctx);
    return spec;
}

// Built-in name, else a scheme file path. Invalid files get their full
// validation report on err.
inline std::optional<RowScheme> resolve_scheme(const CliConfig& config, Context& ctx) {
    if (const auto* s = ctx.catalog.find(config.scheme_selector)) return *s;
    try {
        const std::filesystem::path path(config.scheme_selector);
        if (!std::filesystem::exists(path)) {
            ctx.err << "error: '" << config.scheme_selector << "' is neither a built-in scheme nor a file\n";
            return std::nullopt;
        }
        auto scheme = parse_scheme_json_unchecked(read_scheme_file_text(path));
        auto report = validate(scheme);
        if (!report.ok()) {
            ctx.err << "error: scheme '" << scheme.name << "' is invalid\n" << report.to_string();
            return std::nullopt;
        }
        return scheme;
    } catch (const std::exception& e) {
        ctx.err << "error: " << e.what() << '\n';
        return std::nullopt;
    }
}

namespace detail {

inline void write_document(std::ostream& out, const std::string& doc) {
    out << doc;
    if (doc.empty() || doc.back() != '\n') out << '\n';
}

} // namespace detail

inline int cmd_show(const CliConfig& config, Context& ctx) {
    auto scheme = resolve_scheme(config, ctx);
    if (!scheme) return exit_scheme_error;
    try {
        const TimeOfDay t = config.time_override ? parse_time(*config.time_override) : ctx.clock.now();
        detail::write_document(ctx.out, render(encode(t, *scheme), *scheme, make_render_spec(config, ctx)));
        return exit_ok;
    } catch (const error& e) {
        ctx.err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
}

// Polls the clock every tick interval and redraws. Encoding and rendering
// happen only when the minute changes; unchanged minutes repeat the frame.
inline int cmd_tick(const CliConfig& config, Context& ctx) {
    auto scheme = resolve_scheme(config, ctx);
    if (!scheme) return exit_scheme_error;

    std::optional<FixedTimeSource> fixed;
    RenderSpec spec;
    try {
        if (config.time_override) fixed.emplace(parse_time(*config.time_override));
        if (config.tick_interval_seconds < 1) throw invalid_argument("tick interval must be at least 1 second");
        spec = make_render_spec(config, ctx);
        check_render_spec(spec, *scheme);
    } catch (const error& e) {
        ctx.err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
    TimeSource& clock = fixed ? static_cast<TimeSource&>(*fixed) : ctx.clock;

    // full-screen redraw only for ANSI art on a terminal; otherwise one
    // document per line/frame so pipes stay parseable
    const bool redraw = config.format == Format::ansi && ctx.out_is_terminal;
    TickStats stats;

    std::optional<TimeOfDay> shown;
    std::string frame;
    if (redraw) ctx.out << "\x1b[?25l";
    while (!ctx.stop.load()) {
        const TimeOfDay t = clock.now();
        if (!shown || *shown != t) {
            frame = render(encode(t, *scheme), *scheme, spec);
            shown = t;
            ++stats.encodes;
        }
        if (redraw) ctx.out << "\x1b[H\x1b[2J";
        detail::write_document(ctx.out, frame);
        ctx.out.flush();
        ++stats.frames;
        if (config.max_frames && stats.frames >= *config.max_frames) break;
        ctx.sleeper.sleep_for(std::chrono::seconds(config.tick_interval_seconds), ctx.stop);
    }
    if (redraw) ctx.out << "\x1b[?25h" << std::flush;
    if (ctx.tick_stats) *ctx.tick_stats = stats;
    return exit_ok;
}

inline int cmd_decode(std::string_view bits, const CliConfig& config, Context& ctx) {
    auto scheme = resolve_scheme(config, ctx);
    if (!scheme) return exit_scheme_error;
    if (scheme->uses_meridiem() && !config.meridiem) {
        ctx.err << "error: scheme '" << scheme->name << "' covers 12 hours; pass --am or --pm\n";
        return exit_input_error;
    }
    if (!scheme->uses_meridiem() && config.meridiem) {
        ctx.err << "error: scheme '" << scheme->name << "' covers 24 hours; --am/--pm do not apply\n";
        return exit_input_error;
    }
    try {
        ctx.out << to_string(decode(parse_bits(bits, *scheme, config.meridiem), *scheme)) << '\n';
        return exit_ok;
    } catch (const error& e) {
        ctx.err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
}

// One line per shape: "[1,2,3,4,5] TRIANGULAR 15".
inline int cmd_schemes(count_t target_states, std::optional<ShapeClass> filter, std::size_t limit, Context& ctx) {
    try {
        for (const auto& shape : enumerate_shapes(target_states, filter, limit))
            ctx.out << format_lamps(shape.lamp_counts) << ' ' << to_string(shape.classification) << ' '
                    << shape.total_lamps << '\n';
        return exit_ok;
    } catch (const error& e) {
        ctx.err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
}

inline int cmd_validate(const CliConfig& config, Context& ctx) {
    auto scheme = resolve_scheme(config, ctx);
    if (!scheme) return exit_scheme_error;
    ctx.out << scheme->name << ": ok (" << scheme->rows.size() << " rows, capacity " << capacity(*scheme)
            << ", cycle " << scheme->cycle_minutes << " min)\n";
    return exit_ok;
}

} // namespace lampclock::cli
