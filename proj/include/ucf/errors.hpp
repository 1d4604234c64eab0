#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ucf {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (cycle notation, JSON group descriptions, ...).
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Group enumeration exceeded the configured element cap.  Carries the number
// of elements found before the cap was hit so callers can report progress.
class CapExceededError : public Error {
public:
  CapExceededError(const std::string& what, std::uint64_t partial)
      : Error(what), partial_count(partial) {}
  std::uint64_t partial_count;
};

// An exhaustive enumeration (product tuples, search tree) would exceed the
// configured work budget.
class BudgetExceededError : public Error {
public:
  explicit BudgetExceededError(const std::string& what) : Error(what) {}
};

// A precondition of an operation does not hold (wrong degree, subgroup not
// normal, group not abelian, ...).
class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

// A randomized search ran out of retries without finding its target.
class SearchError : public Error {
public:
  explicit SearchError(const std::string& what) : Error(what) {}
};

// Problems with the stored factorization database (missing entry, entry that
// fails re-verification, unusable realization).
class DbError : public Error {
public:
  explicit DbError(const std::string& what) : Error(what) {}
};

}  // namespace ucf
