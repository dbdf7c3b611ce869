#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latbounds {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class EmptySet : public Error {
 public:
  EmptySet() : Error("treatment set is empty") {}
};

class NotClosed : public Error {
 public:
  NotClosed(std::string a, std::string b, std::string missing)
      : Error("treatment set is not a lattice: " + missing + " (meet or join of " + a + " and " + b +
              ") is missing"),
        a_(std::move(a)),
        b_(std::move(b)),
        missing_(std::move(missing)) {}
  const std::string& a() const { return a_; }
  const std::string& b() const { return b_; }
  const std::string& missing() const { return missing_; }

 private:
  std::string a_, b_, missing_;
};

class PairNotOrdered : public Error {
 public:
  using Error::Error;
};

class SameTreatment : public Error {
 public:
  using Error::Error;
};

class EmptyCell : public Error {
 public:
  using Error::Error;
};

class EmptyDataset : public Error {
 public:
  EmptyDataset() : Error("dataset has no rows") {}
};

class QOutOfRange : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t points, std::size_t grid)
      : Error("oracle budget exceeded: |T|=" + std::to_string(points) + " (max 10), |G|=" +
              std::to_string(grid) + " (max 8)"),
        points_(points),
        grid_(grid) {}
  std::size_t points() const { return points_; }
  std::size_t grid() const { return grid_; }

 private:
  std::size_t points_, grid_;
};

class ConfigError : public Error {
 public:
  ConfigError(const std::string& msg, int line = -1, int column = -1)
      : Error(line >= 0 ? "config:" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg
                        : "config: " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace latbounds
