#pragma once

#include <stdexcept>
#include <string>

namespace dba {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Denominator vanishes at the requested point (after full cancellation).
class PoleError : public Error {
 public:
  using Error::Error;
};

// Series requested around a point where the denominator is zero.
class NotExpandable : public Error {
 public:
  using Error::Error;
};

class UnsupportedPole : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ConnectivityError : public Error {
 public:
  using Error::Error;
};

class NotADuplicate : public Error {
 public:
  using Error::Error;
};

// Two independent constructions of the same object disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace dba
