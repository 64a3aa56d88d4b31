#pragma once

#include <stdexcept>
#include <string>

namespace qch {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/* Syntax error in an expression string; `pos` is a 0-based byte offset. */
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), pos(pos) {}
    std::size_t pos;
};

/* Division by a zero polynomial / rational function. */
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

/* A substitution made a denominator vanish identically (a genuine pole,
 * not a removable one: cancellation happens before substitution). */
struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

/* Invalid argument ranges, shape mismatches, out-of-range legs, ... */
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/* Internal consistency failure (a contract the engine must uphold broke). */
struct EngineError : Error {
    explicit EngineError(const std::string& msg) : Error(msg) {}
};

} // namespace qch
