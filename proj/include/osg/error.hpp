//
// osg - finite ordered semigroups
//
// Exception type shared by every module. Each error carries a kind and the
// witnessing elements that caused it, so callers (and the CLI) can report
// the exact violation.

#ifndef OSG_ERROR_HPP_
#define OSG_ERROR_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <utility>    // for move
#include <vector>     // for vector

namespace osg {

  enum class ErrorKind {
    BadTable,
    NotAssociative,
    NotPartialOrder,
    NotCompatible,
    NotClosed,
    NotAnIdeal,
    NoZero,
    UnsupportedKind,
    NotACongruence,
    NotSemilattice,
    NotCompleteSemilattice,
    Parse
  };

  inline char const* to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::BadTable:
        return "BadTable";
      case ErrorKind::NotAssociative:
        return "NotAssociative";
      case ErrorKind::NotPartialOrder:
        return "NotPartialOrder";
      case ErrorKind::NotCompatible:
        return "NotCompatible";
      case ErrorKind::NotClosed:
        return "NotClosed";
      case ErrorKind::NotAnIdeal:
        return "NotAnIdeal";
      case ErrorKind::NoZero:
        return "NoZero";
      case ErrorKind::UnsupportedKind:
        return "UnsupportedKind";
      case ErrorKind::NotACongruence:
        return "NotACongruence";
      case ErrorKind::NotSemilattice:
        return "NotSemilattice";
      case ErrorKind::NotCompleteSemilattice:
        return "NotCompleteSemilattice";
      case ErrorKind::Parse:
        return "ParseError";
    }
    return "Unknown";
  }

  //! Raised by every operation whose precondition or validity check fails.
  //!
  //! `witness()` holds the violating elements in the order documented by the
  //! throwing function; `detail()` a short qualifier such as the failed
  //! partial-order axiom or the side of a translation.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind                kind,
          std::string const&       message,
          std::vector<std::size_t> witness = {},
          std::string              detail  = {})
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          _kind(kind),
          _witness(std::move(witness)),
          _detail(std::move(detail)) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

    std::vector<std::size_t> const& witness() const noexcept {
      return _witness;
    }

    std::string const& detail() const noexcept {
      return _detail;
    }

   private:
    ErrorKind                _kind;
    std::vector<std::size_t> _witness;
    std::string              _detail;
  };

  //! Input-format error with the offending 1-based line number.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& message)
        : Error(ErrorKind::Parse,
                "line " + std::to_string(line) + ": " + message,
                {line}),
          _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

}  // namespace osg

#endif  // OSG_ERROR_HPP_
