#pragma once

#include <stdexcept>
#include <string>

namespace gridlink {

enum class ErrorKind {
  duplicate_entry,
  out_of_range,
  odd_length,
  too_short,
  length_mismatch,
  index_out_of_range,
  half_sum_not_integer,
  cyclic_chain,
  entry_out_of_range,
  invalid_argument,
  order_mismatch,
  too_many_symbols,
  odd_order,
  odd_moment_nonzero,
  too_large,
  cross_check_mismatch,
  parse_error,
  io_error,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

// Raised by the text readers; line and column are 1-based.
class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorKind::parse_error,
              "line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace gridlink
