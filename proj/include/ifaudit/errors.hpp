#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "ifaudit/types.hpp"

namespace ifaudit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An indicator denominator evaluated to zero.
///
/// `year` names the offending publication year when one can be singled out
/// (AoR needs every window year to be non-empty). `journal` and `phase` are
/// filled in by callers that evaluate more than one journal or scenario phase.
class ZeroDenominator : public Error {
 public:
  explicit ZeroDenominator(std::optional<Year> year = std::nullopt,
                           std::string journal = {}, std::string phase = {});

  const std::optional<Year>& year() const noexcept { return year_; }
  const std::string& journal() const noexcept { return journal_; }
  const std::string& phase() const noexcept { return phase_; }

  ZeroDenominator with_context(std::string journal, std::string phase) const;

 private:
  std::optional<Year> year_;
  std::string journal_;
  std::string phase_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class InvalidTargetYear : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed input row. `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string reason);
  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace ifaudit
