#pragma once

#include <stdexcept>
#include <string>

namespace osfol {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown sort, ill-formed hierarchy, or uninhabited sort.
class SortHierarchyError : public Error {
 public:
  using Error::Error;
};

/// Ill-sorted term/atom, undeclared symbol, arity mismatch.
class SortError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace osfol
