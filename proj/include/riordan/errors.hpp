#ifndef RIORDAN_ERRORS_HPP
#define RIORDAN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace riordan {

/// Base class for every failure the library reports.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Truncation mismatch, or a coefficient beyond the retained precision
/// was requested.
struct PrecisionError : Error {
  using Error::Error;
};

/// Reciprocal (or division) of a series whose constant term is zero.
struct NotAUnitError : Error {
  using Error::Error;
};

/// Composition a(f) where f has a nonzero constant term.
struct CompositionError : Error {
  using Error::Error;
};

/// Compositional inverse requested for a series outside F1.
struct NotInvertibleError : Error {
  using Error::Error;
};

/// A series does not have the required exponent support (parity,
/// residue class mod k, or minimum order).
struct SupportError : Error {
  using Error::Error;
};

/// Aeration step k = 0.
struct InvalidStepError : Error {
  using Error::Error;
};

/// No exact rational k-th root exists (or the order is not divisible
/// by k); callers must use a root-free code path instead.
struct RootError : Error {
  using Error::Error;
};

/// Array construction rejected: a generating function is outside the
/// required subgroup. The message names the offending function.
struct ArrayError : Error {
  using Error::Error;
};

/// Two k-Riordan arrays of different arity were combined.
struct ArityError : Error {
  using Error::Error;
};

/// A 1-based multiplier position outside the valid range.
struct PositionError : Error {
  using Error::Error;
};

/// Expression syntax error. Carries the 1-based character position and
/// the set of tokens that would have been accepted there.
struct ParseError : Error {
  std::size_t position;
  std::vector<std::string> expected;

  ParseError(std::size_t pos, std::vector<std::string> exp, const std::string& msg)
      : Error(msg), position(pos), expected(std::move(exp)) {}
};

}  // namespace riordan

#endif  // RIORDAN_ERRORS_HPP
