#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pf {

// Index of an element inside a finite Space.
using Elem = std::uint32_t;

inline constexpr Elem kNoElem = 0xffffffffu;

// Sparse probability mass function: (element, mass) pairs, masses >= 0.
using Pmf = std::vector<std::pair<Elem, double>>;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class PolicyUndefinedError : public Error {
 public:
  using Error::Error;
};

// Raised when a pmf places mass where the reference pmf has none.
class SupportMismatchError : public Error {
 public:
  using Error::Error;
};

class MetricMissingError : public Error {
 public:
  using Error::Error;
};

// A sensed label contradicts one already recorded (grid map filters).
class InconsistentSensingError : public Error {
 public:
  using Error::Error;
};

class InvalidParamsError : public Error {
 public:
  using Error::Error;
};

// A bounded-window realization of a conceptually unbounded space was left.
class WindowError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace pf
