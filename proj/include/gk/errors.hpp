#ifndef GK_ERRORS_HPP
#define GK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gk {

/// Malformed textual input (group tokens, data files).
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input whose parameters violate a family constraint.
class ConstraintError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The requested operation has no implementation for this family.
class UnsupportedError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A computation exceeded its resource budget.
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Tabulated data missing or rejected by the loader.
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace gk

#endif
