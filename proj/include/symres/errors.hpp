#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symres {

/// Base class of everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two values living in different ring contexts were combined.
struct ring_mismatch_error : error {
    using error::error;
};

/// Checked integer arithmetic overflowed (exponents, rationals).
struct overflow_error : error {
    using error::error;
};

/// An operation was asked of an input outside its domain
/// (zero/unit ideal where a proper nonzero one is required,
/// out-of-range parameter, ...).
struct domain_error : error {
    using error::error;
};

/// Lexical or syntax error with a 1-based source position.
struct parse_error : error {
    std::size_t line;
    std::size_t column;

    parse_error(const std::string& msg, std::size_t line_, std::size_t column_)
        : error("parse error at " + std::to_string(line_) + ":" +
                std::to_string(column_) + ": " + msg),
          line(line_),
          column(column_) {}
};

} // namespace symres
