#pragma once

#include <stdexcept>
#include <string>

namespace astvec {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed AST document, corpus record, checkpoint or embedding file.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Non-finite loss or parameter during training.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// An error tied to a position in C source text.
class SourceError : public Error {
 public:
  SourceError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const noexcept { return message_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

class LexError : public SourceError {
 public:
  using SourceError::SourceError;
};

class ParseError : public SourceError {
 public:
  ParseError(const std::string& message, int line, int column, std::string expected)
      : SourceError(expected.empty() ? message : message + " (expected " + expected + ")",
                    line, column),
        expected_(std::move(expected)) {}

  /// Human-readable description of the tokens that would have been accepted.
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::string expected_;
};

}  // namespace astvec
