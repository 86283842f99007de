#pragma once

#include <stdexcept>
#include <string>

namespace weylwalks {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input (weights, model names, grids).
class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configured cap (length, series order, jet order) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Failures inside the asymptotic pipeline.
class PipelineError : public Error {
 public:
  using Error::Error;
};

class InconsistencyError : public PipelineError {
 public:
  using PipelineError::PipelineError;
};

class OrderExhaustedError : public PipelineError {
 public:
  using PipelineError::PipelineError;
};

class UnhandledRegimeError : public PipelineError {
 public:
  using PipelineError::PipelineError;
};

class DegenerateError : public PipelineError {
 public:
  using PipelineError::PipelineError;
};

}  // namespace weylwalks
