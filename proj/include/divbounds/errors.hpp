#pragma once

#include <stdexcept>
#include <string>

namespace divbounds {

/// Base class for all library errors. Malformed inputs raise exceptions;
/// infinite results are returned as +infinity, never thrown.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class EmptyDistributionError : public Error {
public:
  EmptyDistributionError() : Error("distribution must contain at least one entry") {}
};

class NegativeMassError : public Error {
public:
  NegativeMassError(std::size_t index, double value)
      : Error("negative probability mass " + std::to_string(value) + " at index " +
              std::to_string(index)) {}
};

class NotNormalizedError : public Error {
public:
  explicit NotNormalizedError(double sum)
      : Error("probabilities sum to " + std::to_string(sum) + ", expected 1"), sum_(sum) {}
  double sum() const { return sum_; }

private:
  double sum_;
};

class SupportMismatchError : public Error {
public:
  SupportMismatchError(std::size_t n, std::size_t m)
      : Error("support sizes differ (" + std::to_string(n) + " vs " + std::to_string(m) +
              ") and padding is disabled") {}
};

class EpsilonOutOfRangeError : public Error {
public:
  EpsilonOutOfRangeError(double epsilon, const std::string& domain)
      : Error("epsilon " + std::to_string(epsilon) + " outside " + domain) {}
};

class ParameterOutOfRangeError : public Error {
public:
  using Error::Error;
};

class LambdaOutOfRangeError : public Error {
public:
  explicit LambdaOutOfRangeError(double lambda)
      : Error("Renyi order " + std::to_string(lambda) + " outside (0,1)") {}
};

class NotSymmetricError : public Error {
public:
  explicit NotSymmetricError(const std::string& name)
      : Error("f-divergence '" + name + "' is not symmetric") {}
};

class KraftViolationError : public Error {
public:
  explicit KraftViolationError(double kraft_sum)
      : Error("Kraft sum " + std::to_string(kraft_sum) + " exceeds 1; not uniquely decodable"),
        kraft_sum_(kraft_sum) {}
  double kraft_sum() const { return kraft_sum_; }

private:
  double kraft_sum_;
};

class ZeroMassSymbolError : public Error {
public:
  explicit ZeroMassSymbolError(std::size_t index)
      : Error("symbol " + std::to_string(index) + " has zero probability") {}
};

class UnknownMeasureError : public Error {
public:
  explicit UnknownMeasureError(const std::string& measure)
      : Error("unknown measure '" + measure + "'") {}
};

class ParseError : public Error {
public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace divbounds
