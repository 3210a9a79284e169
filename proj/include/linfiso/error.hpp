#ifndef LINFISO_ERROR_HPP
#define LINFISO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace linfiso {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Points, sets or index lists whose lengths do not match the signature.
class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// A value outside the domain of an operation: a negative coordinate at a
/// natural-type index, an index out of range, a wrong coordinate type.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Checked integer arithmetic left the representable range.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// The projection-sum formula (and corner peeling) need a set compressed in
/// every coordinate.
class NotCompressed : public Error {
public:
  using Error::Error;
};

/// An exhaustive search would enumerate more candidates than allowed.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace linfiso

#endif
