#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "ifaudit/indicators.hpp"

namespace ifaudit {

/// Two journals, one indicator, and one injection applied to both of them.
struct PairScenario {
  JournalData left;
  JournalData right;
  IndicatorSpec spec;
  Injection injection;
};

enum class VerdictTag { Preserved, Reversed, TieBefore, TieAfter };

std::string_view to_string(VerdictTag tag) noexcept;

/// Outcome of a Z-consistency check. `before` and `after` hold the
/// (left, right) indicator values without and with the injection.
///
/// TieBefore: the values were equal to begin with, so there is no strict
/// ordering to preserve. TieAfter: strict before, equal after. Reversed:
/// strict before, strict opposite after.
struct Verdict {
  VerdictTag tag;
  std::pair<Ratio, Ratio> before;
  std::pair<Ratio, Ratio> after;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Classifies a (before, after) pair of value pairs. No tolerance.
VerdictTag classify(const std::pair<Ratio, Ratio>& before,
                    const std::pair<Ratio, Ratio>& after) noexcept;

/// Evaluates the scenario's indicator on both journals with and without the
/// injection. ZeroDenominator is rethrown tagged with journal id and phase.
Verdict check_z_consistency(const PairScenario& scenario);

struct ReversalWitness {
  PairScenario scenario;
  Verdict verdict;
};

/// Recomputes the witness from its raw data and checks that it reverses.
bool reverify(const ReversalWitness& witness);

/// Smallest k in 1..k_max such that k uncited publications added to
/// `target_year` of both journals reverses their order.
///
/// Requires a strict ordering without injection (PreconditionViolated) and a
/// target year that feeds the denominator of `spec` (InvalidTargetYear).
std::optional<Count> min_reversal_k(const JournalData& left, const JournalData& right,
                                    const IndicatorSpec& spec, Year target_year,
                                    Count k_max);

/// For RoA journals with identical per-year publication counts no common
/// uncited injection can reverse the order: with equal denominators the order
/// is decided by the citation totals alone. This evaluates the scenario and
/// enforces that as a postcondition (a Reversed outcome is a logic_error).
///
/// Throws PreconditionViolated for a non-RoA spec, for differing window
/// publication counts, or when the two journals tie before injection.
Verdict equal_pubs_preserved(const JournalData& left, const JournalData& right,
                             const IndicatorSpec& spec, const Injection& injection);

}  // namespace ifaudit
