#pragma once

#include <stdexcept>
#include <string>

namespace kforce {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidVertexError : Error {
  using Error::Error;
};

struct EmptyGraphError : Error {
  using Error::Error;
};

struct EmptySetError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct BudgetExceededError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace kforce
