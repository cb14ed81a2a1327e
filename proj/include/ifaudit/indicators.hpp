#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ifaudit/journal.hpp"
#include "ifaudit/ratio.hpp"

namespace ifaudit {

enum class IndicatorKind { SyncRoa, SyncAor, Diachronous };

std::string_view to_string(IndicatorKind kind) noexcept;
/// Accepts "sync-roa", "sync-aor", "diachronous". Throws InvalidArgument.
IndicatorKind parse_indicator_kind(std::string_view text);

/// Which indicator to evaluate. Build through `make` so that the window is
/// validated and `s` is normalized to 0 for the synchronous kinds.
struct IndicatorSpec {
  IndicatorKind kind = IndicatorKind::SyncRoa;
  int n = 2;
  Year target_year = 0;
  int s = 0;

  static IndicatorSpec make(IndicatorKind kind, int n, Year target_year, int s = 0);
  static IndicatorSpec sync_roa(Year y, int n) { return make(IndicatorKind::SyncRoa, n, y); }
  static IndicatorSpec sync_aor(Year y, int n) { return make(IndicatorKind::SyncAor, n, y); }
  static IndicatorSpec diachronous(Year y, int n, int s) {
    return make(IndicatorKind::Diachronous, n, y, s);
  }

  friend bool operator==(const IndicatorSpec&, const IndicatorSpec&) = default;
};

/// Years whose publication counts form the denominator: Y-1..Y-n for the
/// synchronous kinds, {Y} for the diachronous one.
std::vector<Year> denominator_years(const IndicatorSpec& spec);

/// Citation cells read by the numerator, in window order.
std::vector<CitationKey> numerator_keys(const IndicatorSpec& spec);

/// Sum of CIT(Y, Y-i) over sum of PUB(Y-i), i = 1..n.
Ratio sync_if_roa(const JournalData& data, Year y, int n);

/// Mean over i = 1..n of CIT(Y, Y-i) / PUB(Y-i). Every window year needs
/// publications; the first empty one is reported in ZeroDenominator::year().
Ratio sync_if_aor(const JournalData& data, Year y, int n);

/// Sum of CIT(Y+i, Y) for i = s..s+n-1, over PUB(Y).
Ratio diachronous_imp(const JournalData& data, Year y, int n, int s);

Ratio compute(const JournalData& data, const IndicatorSpec& spec);

}  // namespace ifaudit
