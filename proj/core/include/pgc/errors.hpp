#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pgc {

// Base class for everything this library throws.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (decimal literals, certificate files).
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// Argument outside the mathematical domain of an operation
// (division by an interval containing zero, log of a non-positive
// number, exp outside its validity window, ...).
struct DomainError : Error {
  using Error::Error;
};

// A denominator enclosure contains zero while evaluating an expression.
struct PoleError : DomainError {
  using DomainError::DomainError;
};

// Sign of a polynomial could not be decided within the subdivision budget.
struct IndeterminateSignError : Error {
  using Error::Error;
};

// Root bracketing: the seed endpoints evaluate to the same side of the target.
struct NoSignChangeError : Error {
  using Error::Error;
};

// An enclosure is too wide to decide a strict comparison; the caller
// should retry with a higher degree or tighter budget.
struct PrecisionError : Error {
  using Error::Error;
};

// API misuse (wrong function class, bad flag value, ...).
struct UsageError : Error {
  using Error::Error;
};

// A certificate failed to replay; `path` names the first failing node.
struct CertificateError : Error {
  CertificateError(const std::string& what, std::string path)
      : Error(what + " [node " + path + "]"), path(std::move(path)) {}
  std::string path;
};

}  // namespace pgc
