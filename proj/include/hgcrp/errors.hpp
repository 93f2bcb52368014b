#pragma once

#include <stdexcept>
#include <string>

namespace hgcrp {

// Checked 64-bit rational arithmetic ran out of range.
class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text; message carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg) {}
};

// A domain invariant does not hold (bad instance, bad partition, bad move).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Exhaustive enumeration was asked to exceed its configured budget.
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

// A welfare ratio has a zero denominator.
class UnboundedError : public std::runtime_error {
public:
    explicit UnboundedError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hgcrp
