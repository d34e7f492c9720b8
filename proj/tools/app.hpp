#pragma once

// Argument parsing for the lampclock tool. Kept apart from main() so tests
// can drive the full command line.

#include <algorithm>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lampclock/cli.hpp"

namespace lampclock::cli {

inline int run_app(std::vector<std::string> args, Context& ctx) {
    CLI::App app{"Lamp-row clock displays: encode, decode, render and enumerate clock schemes", "lampclock"};
    app.fallthrough();
    app.require_subcommand(1);

    CliConfig config;
    std::string format = "ansi", color = "auto", layout;
    app.add_option("--scheme", config.scheme_selector, "built-in scheme (triangular, berlin) or scheme JSON file")
        ->capture_default_str();
    app.add_option("--format", format, "ansi, svg, bits or json")->capture_default_str();
    app.add_option("--color", color, "auto, always or never")->capture_default_str();
    app.add_option("--time", config.time_override, "HH:MM to show instead of the local time");
    app.add_option("--layout", layout, "triangle, left or berlin");
    app.add_option("--lit", config.lit_glyph, "glyph for a lit lamp");
    app.add_option("--unlit", config.unlit_glyph, "glyph for an unlit lamp");
    app.add_option("--am-color", config.am_color, "lit color before noon");
    app.add_option("--pm-color", config.pm_color, "lit color after noon");

    auto* show = app.add_subcommand("show", "render the current (or --time) minute");
    auto* tick = app.add_subcommand("tick", "redraw the clock until interrupted");
    tick->add_option("--interval", config.tick_interval_seconds, "seconds between polls")->capture_default_str();
    tick->add_option("--frames", config.max_frames, "stop after this many frames");

    auto* decode_cmd = app.add_subcommand("decode", "read a bit string back as HH:MM");
    std::string bits;
    decode_cmd->add_option("bits", bits, "rows of 0/1 joined by '/'")->required();
    auto* am = decode_cmd->add_flag("--am", "the display shows an am time");
    auto* pm = decode_cmd->add_flag("--pm", "the display shows a pm time");
    am->excludes(pm);

    auto* schemes_cmd = app.add_subcommand("schemes", "list lamp layouts with a given number of states");
    count_t target = 0;
    std::size_t limit = default_shape_limit;
    schemes_cmd->add_option("states", target, "number of display states")->required();
    schemes_cmd->add_option("--limit", limit, "maximum number of layouts to visit")->capture_default_str();
    auto* tri = schemes_cmd->add_flag("--triangular", "only [1,2,...,n] layouts");
    auto* rect = schemes_cmd->add_flag("--rectangular", "only layouts with equal rows");
    auto* irr = schemes_cmd->add_flag("--irregular", "only the remaining layouts");
    tri->excludes(rect)->excludes(irr);
    rect->excludes(irr);

    auto* validate_cmd = app.add_subcommand("validate", "check the --scheme for consistency");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            ctx.out << app.help();
            return exit_ok;
        }
        ctx.err << "error: " << e.what() << "\nRun with --help for usage.\n";
        return exit_input_error;
    }

    auto fmt = parse_format(format);
    auto mode = parse_color_mode(color);
    auto lay = layout.empty() ? std::optional<Layout>{} : parse_layout(layout);
    if (!fmt || !mode || (!layout.empty() && !lay)) {
        ctx.err << "error: " << (!fmt ? "unknown --format '" + format + "'"
                                 : !mode ? "unknown --color '" + color + "'"
                                         : "unknown --layout '" + layout + "'")
                << '\n';
        return exit_input_error;
    }
    config.format = *fmt;
    config.color_mode = *mode;
    config.layout = lay;
    if (*am) config.meridiem = Meridiem::AM;
    if (*pm) config.meridiem = Meridiem::PM;

    if (show->parsed()) return cmd_show(config, ctx);
    if (tick->parsed()) return cmd_tick(config, ctx);
    if (decode_cmd->parsed()) return cmd_decode(bits, config, ctx);
    if (validate_cmd->parsed()) return cmd_validate(config, ctx);
    std::optional<ShapeClass> filter;
    if (*tri) filter = ShapeClass::triangular;
    if (*rect) filter = ShapeClass::rectangular;
    if (*irr) filter = ShapeClass::irregular;
    return cmd_schemes(target, filter, limit, ctx);
}

} // namespace lampclock::cli
