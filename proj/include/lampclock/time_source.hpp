#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <thread>
#include <utility>
#include <vector>

#include "lampclock/codec.hpp"

namespace lampclock {

// Where the current wall-clock minute comes from.
class TimeSource {
public:
    virtual ~TimeSource() = default;
    virtual TimeOfDay now() = 0;
};

// Local time, seconds truncated.
class SystemTimeSource final : public TimeSource {
public:
    TimeOfDay now() override {
        const std::time_t t = std::time(nullptr);
        std::tm local{};
        localtime_r(&t, &local);
        return TimeOfDay::from_hm(local.tm_hour, local.tm_min);
    }
};

class FixedTimeSource final : public TimeSource {
public:
    explicit FixedTimeSource(TimeOfDay t) : time_(t) {}
    TimeOfDay now() override { return time_; }

private:
    TimeOfDay time_;
};

// Replays a script, one entry per call; repeats the last entry once exhausted.
class ScriptedTimeSource final : public TimeSource {
public:
    explicit ScriptedTimeSource(std::vector<TimeOfDay> script) : script_(std::move(script)) {
        if (script_.empty()) throw invalid_argument("time script is empty");
    }

    TimeOfDay now() override {
        const auto& t = script_[std::min(next_, script_.size() - 1)];
        ++next_;
        return t;
    }

    std::size_t calls() const noexcept { return next_; }

private:
    std::vector<TimeOfDay> script_;
    std::size_t next_ = 0;
};

class Sleeper {
public:
    virtual ~Sleeper() = default;
    // Returns early once stop is set.
    virtual void sleep_for(std::chrono::seconds d, const std::atomic<bool>& stop) = 0;
};

class SystemSleeper final : public Sleeper {
public:
    void sleep_for(std::chrono::seconds d, const std::atomic<bool>& stop) override {
        using namespace std::chrono;
        constexpr auto slice = milliseconds(50);
        const auto deadline = steady_clock::now() + d;
        while (!stop.load() && steady_clock::now() < deadline)
            std::this_thread::sleep_for(std::min<steady_clock::duration>(slice, deadline - steady_clock::now()));
    }
};

// Records requested sleeps without sleeping.
class RecordingSleeper final : public Sleeper {
public:
    void sleep_for(std::chrono::seconds d, const std::atomic<bool>&) override { calls.push_back(d); }

    std::vector<std::chrono::seconds> calls;
};

} // namespace lampclock
