#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ifaudit/journal.hpp"

namespace ifaudit::reference {

/// Year Y used when the published worked examples are instantiated.
inline constexpr Year kYear = 2010;

/// Two-year synchronous RoA example. J: PUB 10/10, CIT 30/30.
/// J': PUB 30/30, CIT 60/60. A common +25 reverses the order.
std::pair<JournalData, JournalData> roa_pair(Year y = kYear);

/// Three-year diachronous example (s = 0). J: PUB(Y) 20, CIT 10/20/30.
/// J': PUB(Y) 60, CIT 20/40/60.
std::pair<JournalData, JournalData> diachronous_pair(Year y = kYear);

/// Two-year synchronous AoR example. PUB(Y-1) 30 and PUB(Y-2) 20 for both;
/// J: CIT 10/80, J': CIT 120/10. A common +10 at Y-1 reverses the order.
std::pair<JournalData, JournalData> aor_pair(Year y = kYear);

/// One line of the worked-example checklist.
struct ReferenceCheck {
  std::string label;
  /// Computed value, rendered "num/den" or a verdict tag.
  std::string exact;
  /// Decimal rendering at two places, or the verdict tag again.
  std::string shown;
  std::string expected;
  bool passed = false;
};

/// Recomputes every published value of the three worked examples (indicator
/// values before and after the common injection, their two-place decimals,
/// and the REVERSED verdicts).
std::vector<ReferenceCheck> run_reference_checks(Year y = kYear);

}  // namespace ifaudit::reference
