#pragma once

#include <stdexcept>
#include <string>

namespace tabcompare {

/// Input could not be turned into a valid score. `line`/`column` are 1-based;
/// both are 0 when the location is a document path rather than a text position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::string message, std::string snippet = {})
      : std::runtime_error(format(line, column, message)),
        line_(line),
        column_(column),
        message_(std::move(message)),
        snippet_(std::move(snippet)) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }
  const std::string& snippet() const { return snippet_; }

 private:
  static std::string format(int line, int column, const std::string& message) {
    if (line <= 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  int line_;
  int column_;
  std::string message_;
  std::string snippet_;
};

/// Run options do not fit the supplied scores (too few versions, bad track index, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tabcompare
