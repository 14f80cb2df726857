#pragma once

#include <stdexcept>
#include <string>

namespace svar {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a precondition (wrong dimensions, foreign algebra, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

class MalformedPresentation : public Error {
 public:
  using Error::Error;
};

class InfiniteDimensional : public Error {
 public:
  using Error::Error;
};

class LiftFailed : public Error {
 public:
  using Error::Error;
};

class NotAChainMap : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of budget; the answer is "unknown", not "no".
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class SearchBudgetExceeded : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

class DegreeBudgetExceeded : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

class UnknownWithinBudget : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

class ParameterSearchFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace svar
