#include "ifaudit/consistency.hpp"

#include <algorithm>
#include <stdexcept>

#include "ifaudit/errors.hpp"

namespace ifaudit {
namespace {

Ratio evaluate(const JournalData& data, const IndicatorSpec& spec, const char* phase) {
  try {
    return compute(data, spec);
  } catch (const ZeroDenominator& e) {
    throw e.with_context(data.id(), phase);
  }
}

std::pair<Ratio, Ratio> evaluate_pair(const JournalData& left, const JournalData& right,
                                      const IndicatorSpec& spec, const char* phase) {
  return {evaluate(left, spec, phase), evaluate(right, spec, phase)};
}

}  // namespace

std::string_view to_string(VerdictTag tag) noexcept {
  switch (tag) {
    case VerdictTag::Preserved:
      return "PRESERVED";
    case VerdictTag::Reversed:
      return "REVERSED";
    case VerdictTag::TieBefore:
      return "TIE_BEFORE";
    case VerdictTag::TieAfter:
      return "TIE_AFTER";
  }
  return "UNKNOWN";
}

VerdictTag classify(const std::pair<Ratio, Ratio>& before,
                    const std::pair<Ratio, Ratio>& after) noexcept {
  const auto b = before.first <=> before.second;
  if (b == 0) return VerdictTag::TieBefore;
  const auto a = after.first <=> after.second;
  if (a == 0) return VerdictTag::TieAfter;
  return (a < 0) == (b < 0) ? VerdictTag::Preserved : VerdictTag::Reversed;
}

Verdict check_z_consistency(const PairScenario& scenario) {
  const auto before = evaluate_pair(scenario.left, scenario.right, scenario.spec, "before injection");
  const auto after = evaluate_pair(apply_injection(scenario.left, scenario.injection),
                                   apply_injection(scenario.right, scenario.injection),
                                   scenario.spec, "after injection");
  return Verdict{classify(before, after), before, after};
}

bool reverify(const ReversalWitness& witness) {
  const Verdict fresh = check_z_consistency(witness.scenario);
  return fresh.tag == VerdictTag::Reversed && fresh == witness.verdict;
}

std::optional<Count> min_reversal_k(const JournalData& left, const JournalData& right,
                                    const IndicatorSpec& spec, Year target_year,
                                    Count k_max) {
  const auto years = denominator_years(spec);
  if (std::find(years.begin(), years.end(), target_year) == years.end()) {
    throw InvalidTargetYear("year " + std::to_string(target_year) +
                            " is not a denominator year of the indicator");
  }
  const auto before = evaluate_pair(left, right, spec, "before injection");
  if (before.first == before.second) {
    throw PreconditionViolated("journals tie before injection; no strict ordering to reverse");
  }
  for (Count k = 1; k <= k_max; ++k) {
    const Injection inj = Injection::single(target_year, k);
    const auto after = evaluate_pair(apply_injection(left, inj), apply_injection(right, inj),
                                     spec, "after injection");
    if (classify(before, after) == VerdictTag::Reversed) return k;
  }
  return std::nullopt;
}

Verdict equal_pubs_preserved(const JournalData& left, const JournalData& right,
                             const IndicatorSpec& spec, const Injection& injection) {
  if (spec.kind != IndicatorKind::SyncRoa) {
    throw PreconditionViolated("equal-publication guarantee applies to the RoA indicator only");
  }
  for (const Year y : denominator_years(spec)) {
    if (left.pubs(y) != right.pubs(y)) {
      throw PreconditionViolated("publication counts differ in " + std::to_string(y));
    }
  }
  const Verdict verdict = check_z_consistency(PairScenario{left, right, spec, injection});
  if (verdict.tag == VerdictTag::TieBefore) {
    throw PreconditionViolated("journals tie before injection; no strict ordering to preserve");
  }
  if (verdict.tag != VerdictTag::Preserved) {
    throw std::logic_error("equal-publication RoA pair lost its ordering: " +
                           std::string(to_string(verdict.tag)));
  }
  return verdict;
}

}  // namespace ifaudit
