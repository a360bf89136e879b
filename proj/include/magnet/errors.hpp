#pragma once

#include <stdexcept>
#include <string>

namespace magnet {

// Shapes, indices or partitions that do not fit together.
class StructuralError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A scalar argument outside its admissible range.
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// API called in the wrong order or with incompatible artifacts.
class UsageError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// det F <= 0 somewhere. `element` is -1 when no element context exists.
class ElementInversionError : public std::runtime_error {
public:
  explicit ElementInversionError(const std::string &what, long element = -1)
      : std::runtime_error(what), element_(element) {}
  long element() const noexcept { return element_; }

private:
  long element_;
};

class SolverError : public std::runtime_error {
public:
  SolverError(const std::string &what, double last_residual)
      : std::runtime_error(what), last_residual_(last_residual) {}
  double last_residual() const noexcept { return last_residual_; }

private:
  double last_residual_;
};

class TrainingError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class GenerationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, long line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  long line() const noexcept { return line_; }

private:
  long line_;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace magnet
