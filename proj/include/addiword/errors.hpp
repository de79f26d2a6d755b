#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace addiword {

struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

// A finite prefix admitted no witness of the requested size.
struct NotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A binary square lies inside a single 1-run and decodes to nothing.
struct NoZeroCrossing : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace addiword
