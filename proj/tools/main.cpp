#include <unistd.h>

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <iostream>

#include "app.hpp"

namespace {

std::atomic<bool> g_stop{false};

extern "C" void on_signal(int) { g_stop.store(true); }

} // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);

    lampclock::SystemTimeSource clock;
    lampclock::SystemSleeper sleeper;
    const char* no_color = std::getenv("NO_COLOR");
    lampclock::cli::Context ctx{
        .out = std::cout,
        .err = std::cerr,
        .clock = clock,
        .sleeper = sleeper,
        .stop = g_stop,
        .out_is_terminal = ::isatty(STDOUT_FILENO) != 0,
        .no_color_env = no_color != nullptr && *no_color != '\0',
    };
    return lampclock::cli::run_app({argv + 1, argv + argc}, ctx);
}
