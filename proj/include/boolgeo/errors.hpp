#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace boolgeo {

// Operands come from boolean algebras of different rank.
class rank_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured size limit (rank, variable count, enumeration size) was exceeded.
class limit_exceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

// The operation needs a nonempty solution set.
class inconsistent_system : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Textual input could not be read. Line and column are 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::size_t line, std::size_t column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          message_(message),
          line_(line),
          column_(column) {}

    // The description without the position prefix.
    const std::string& message() const noexcept { return message_; }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace boolgeo
