#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minpsc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally invalid input: bad vertex ids, self-loops, parallel edges,
/// nonpositive weights where positive ones are required.
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

class DisconnectedInstance : public Error {
 public:
  using Error::Error;
};

/// An edge selection does not connect all vertices.
class DisconnectedSelection : public Error {
 public:
  using Error::Error;
};

/// Base for every "input exceeds a configured size guard" condition.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

class TooManyColors : public GuardExceeded {
 public:
  using GuardExceeded::GuardExceeded;
};

class InstanceTooLarge : public GuardExceeded {
 public:
  using GuardExceeded::GuardExceeded;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class CorruptTable : public Error {
 public:
  using Error::Error;
};

class InconsistentLog : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class PathTooShort : public Error {
 public:
  using Error::Error;
};

class NotACycle : public Error {
 public:
  using Error::Error;
};

class UncoveredElement : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class DisconnectedResult : public Error {
 public:
  using Error::Error;
};

}  // namespace minpsc
