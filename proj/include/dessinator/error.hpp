#pragma once

#include <stdexcept>
#include <string>

namespace dessinator {

// Precondition violations and invalid arguments.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Malformed textual input; carries a 1-based line/column position.
class parse_error : public error {
 public:
  parse_error(int line, int column, const std::string& message)
      : error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column),
        message_(message) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

}  // namespace dessinator
