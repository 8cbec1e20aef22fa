#pragma once

#include <stdexcept>
#include <string>

namespace bisym {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated operation precondition, including reads outside a truncation.
struct domain_error : error {
    using error::error;
};

// A t-exponent left the active window where the contract forbids dropping it
// (regrading, coefficient injection).
struct window_error : error {
    using error::error;
};

// Syntax error with a source position (1-based line / column).
struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& what, int line_, int column_)
        : error(what + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

} // namespace bisym
