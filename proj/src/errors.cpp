#include "ifaudit/errors.hpp"

namespace ifaudit {
namespace {

std::string zero_denominator_message(const std::optional<Year>& year, const std::string& journal,
                                     const std::string& phase) {
  std::string msg = "zero denominator";
  if (year) msg += " (no publications in " + std::to_string(*year) + ")";
  if (!journal.empty()) msg += " for journal '" + journal + "'";
  if (!phase.empty()) msg += " " + phase;
  return msg;
}

}  // namespace

ZeroDenominator::ZeroDenominator(std::optional<Year> year, std::string journal, std::string phase)
    : Error(zero_denominator_message(year, journal, phase)),
      year_(year),
      journal_(std::move(journal)),
      phase_(std::move(phase)) {}

ZeroDenominator ZeroDenominator::with_context(std::string journal, std::string phase) const {
  return ZeroDenominator(year_, std::move(journal), std::move(phase));
}

ParseError::ParseError(std::size_t line, std::string reason)
    : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(std::move(reason)) {}

}  // namespace ifaudit
