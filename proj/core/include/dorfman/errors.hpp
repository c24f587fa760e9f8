#pragma once

#include <stdexcept>
#include <string>

namespace dorfman {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ConstantColumn : public Error {
 public:
  explicit ConstantColumn(int column)
      : Error("column " + std::to_string(column) + " has zero scale"),
        column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

class NonPositiveDiagonal : public Error {
 public:
  explicit NonPositiveDiagonal(int index)
      : Error("diagonal entry " + std::to_string(index) + " is not positive"),
        index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

class EigenFailure : public Error {
 public:
  explicit EigenFailure(const std::string& what) : Error(what) {}
};

class NotSPD : public Error {
 public:
  explicit NotSPD(const std::string& what) : Error(what) {}
};

// Iterative solver ran out of iterations. The thrower attaches the last
// iterate where that is useful (see glasso).
class NoConvergence : public Error {
 public:
  explicit NoConvergence(const std::string& what, double gap = 0.0)
      : Error(what), gap_(gap) {}
  double gap() const { return gap_; }

 private:
  double gap_;
};

class DegenerateVariance : public Error {
 public:
  explicit DegenerateVariance(const std::string& what) : Error(what) {}
};

class LengthMismatch : public Error {
 public:
  explicit LengthMismatch(const std::string& what) : Error(what) {}
};

class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

class NonFiniteValue : public Error {
 public:
  NonFiniteValue(long row, long col)
      : Error("non-finite value at row " + std::to_string(row) + ", column " +
              std::to_string(col)),
        row_(row),
        col_(col) {}
  long row() const { return row_; }
  long col() const { return col_; }

 private:
  long row_, col_;
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable '" + name + "' in groups file"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class InvalidDesign : public Error {
 public:
  explicit InvalidDesign(const std::string& what) : Error(what) {}
};

class EmptyAfterFilter : public Error {
 public:
  explicit EmptyAfterFilter(const std::string& what) : Error(what) {}
};

class AllGroupsFailed : public Error {
 public:
  explicit AllGroupsFailed(const std::string& what) : Error(what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace dorfman
