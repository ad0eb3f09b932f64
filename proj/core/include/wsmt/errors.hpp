#pragma once

#include <stdexcept>
#include <string>

namespace wsmt {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DegenerateAngleError : public Error {
 public:
  explicit DegenerateAngleError(const std::string& what) : Error(what) {}
};

class DegenerateTriangleError : public Error {
 public:
  explicit DegenerateTriangleError(const std::string& what) : Error(what) {}
};

class DuplicateTerminalError : public Error {
 public:
  explicit DuplicateTerminalError(const std::string& what, int line = -1)
      : Error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class InfeasiblePlaneTreeError : public Error {
 public:
  explicit InfeasiblePlaneTreeError(const std::string& what) : Error(what) {}
};

class CapExceededError : public Error {
 public:
  explicit CapExceededError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line) : Error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class WeightError : public Error {
 public:
  WeightError(const std::string& what, int line) : Error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace wsmt
