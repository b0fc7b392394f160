#pragma once

#include <stdexcept>

namespace vertexenergy {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- argument / contract errors ---

class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

class SelfLoopError : public Error {
 public:
  using Error::Error;
};

class BadParametersError : public Error {
 public:
  using Error::Error;
};

class InvalidLcfError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class NotPlausiblyTransitiveError : public Error {
 public:
  using Error::Error;
};

class AmbiguousClusteringError : public Error {
 public:
  using Error::Error;
};

// --- graph6 parsing errors ---

class ParseError : public Error {
 public:
  using Error::Error;
};

class BadHeaderError : public ParseError {
 public:
  using ParseError::ParseError;
};

class TrailingDataError : public ParseError {
 public:
  using ParseError::ParseError;
};

class UnsupportedOrderError : public ParseError {
 public:
  using ParseError::ParseError;
};

// --- numerical errors ---

class NumericError : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailureError : public NumericError {
 public:
  using NumericError::NumericError;
};

class IllConditionedError : public NumericError {
 public:
  using NumericError::NumericError;
};

class WalkOverflowError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace vertexenergy
