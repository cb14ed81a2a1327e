#include "ifaudit/indicators.hpp"

#include "ifaudit/errors.hpp"

namespace ifaudit {
namespace {

Count checked_add(Count a, Count b) {
  Count out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("count sum overflow");
  return out;
}

void require_window(int n) {
  if (n < 1) throw InvalidArgument("window length n must be >= 1");
}

}  // namespace

std::string_view to_string(IndicatorKind kind) noexcept {
  switch (kind) {
    case IndicatorKind::SyncRoa:
      return "sync-roa";
    case IndicatorKind::SyncAor:
      return "sync-aor";
    case IndicatorKind::Diachronous:
      return "diachronous";
  }
  return "unknown";
}

IndicatorKind parse_indicator_kind(std::string_view text) {
  if (text == "sync-roa") return IndicatorKind::SyncRoa;
  if (text == "sync-aor") return IndicatorKind::SyncAor;
  if (text == "diachronous") return IndicatorKind::Diachronous;
  throw InvalidArgument("unknown indicator kind '" + std::string(text) + "'");
}

IndicatorSpec IndicatorSpec::make(IndicatorKind kind, int n, Year target_year, int s) {
  require_window(n);
  if (s != 0 && s != 1) throw InvalidArgument("s must be 0 or 1");
  return IndicatorSpec{kind, n, target_year, kind == IndicatorKind::Diachronous ? s : 0};
}

std::vector<Year> denominator_years(const IndicatorSpec& spec) {
  if (spec.kind == IndicatorKind::Diachronous) return {spec.target_year};
  std::vector<Year> years;
  years.reserve(static_cast<std::size_t>(spec.n));
  for (int i = 1; i <= spec.n; ++i) years.push_back(spec.target_year - i);
  return years;
}

std::vector<CitationKey> numerator_keys(const IndicatorSpec& spec) {
  std::vector<CitationKey> keys;
  keys.reserve(static_cast<std::size_t>(spec.n));
  if (spec.kind == IndicatorKind::Diachronous) {
    for (int i = spec.s; i <= spec.s + spec.n - 1; ++i) {
      keys.push_back({spec.target_year + i, spec.target_year});
    }
  } else {
    for (int i = 1; i <= spec.n; ++i) keys.push_back({spec.target_year, spec.target_year - i});
  }
  return keys;
}

Ratio sync_if_roa(const JournalData& data, Year y, int n) {
  require_window(n);
  Count cits = 0;
  Count pubs = 0;
  for (int i = 1; i <= n; ++i) {
    cits = checked_add(cits, data.cits(y, y - i));
    pubs = checked_add(pubs, data.pubs(y - i));
  }
  if (pubs == 0) throw ZeroDenominator();
  return Ratio(cits, pubs);
}

Ratio sync_if_aor(const JournalData& data, Year y, int n) {
  require_window(n);
  Ratio sum;
  for (int i = 1; i <= n; ++i) {
    const Count pubs = data.pubs(y - i);
    if (pubs == 0) throw ZeroDenominator(y - i);
    sum = sum + Ratio(data.cits(y, y - i), pubs);
  }
  return sum / n;
}

Ratio diachronous_imp(const JournalData& data, Year y, int n, int s) {
  require_window(n);
  if (s != 0 && s != 1) throw InvalidArgument("s must be 0 or 1");
  const Count pubs = data.pubs(y);
  if (pubs == 0) throw ZeroDenominator(y);
  Count cits = 0;
  for (int i = s; i <= s + n - 1; ++i) cits = checked_add(cits, data.cits(y + i, y));
  return Ratio(cits, pubs);
}

Ratio compute(const JournalData& data, const IndicatorSpec& spec) {
  switch (spec.kind) {
    case IndicatorKind::SyncRoa:
      return sync_if_roa(data, spec.target_year, spec.n);
    case IndicatorKind::SyncAor:
      return sync_if_aor(data, spec.target_year, spec.n);
    case IndicatorKind::Diachronous:
      return diachronous_imp(data, spec.target_year, spec.n, spec.s);
  }
  throw InvalidArgument("unknown indicator kind");
}

}  // namespace ifaudit
