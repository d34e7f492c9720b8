#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lampclock {

// Base of every error thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A scheme breaks one of its structural invariants.
class invalid_scheme : public error {
public:
    using error::error;
};

// A display state does not fit its scheme.
class invalid_state : public error {
public:
    using error::error;
};

class invalid_argument : public error {
public:
    using error::error;
};

class invalid_render : public error {
public:
    using error::error;
};

// Malformed textual input (times, bit strings).
class parse_error : public error {
public:
    using error::error;
};

// A bit row with a lit lamp to the right of an unlit one. Row is 1-based.
class monotone_fill_error : public parse_error {
public:
    explicit monotone_fill_error(std::size_t row)
        : parse_error("row " + std::to_string(row) +
                      ": lit lamp right of an unlit lamp (lit lamps must be left-contiguous)"),
          row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

class enumeration_overflow : public error {
public:
    using error::error;
};

} // namespace lampclock
