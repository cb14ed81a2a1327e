#include "ifaudit/journal.hpp"

#include "ifaudit/errors.hpp"

namespace ifaudit {

JournalData& JournalData::set_pubs(Year year, Count count) {
  if (count < 0) {
    throw ValidationError("negative publication count for journal '" + id_ + "' in " +
                          std::to_string(year));
  }
  pubs_[year] = count;
  return *this;
}

JournalData& JournalData::set_cits(Year citing, Year cited, Count count) {
  if (count < 0) {
    throw ValidationError("negative citation count for journal '" + id_ + "'");
  }
  if (citing < cited) {
    throw ValidationError("citing year " + std::to_string(citing) + " precedes cited year " +
                          std::to_string(cited) + " for journal '" + id_ + "'");
  }
  cits_[CitationKey{citing, cited}] = count;
  return *this;
}

Count JournalData::pubs(Year year) const noexcept {
  const auto it = pubs_.find(year);
  return it == pubs_.end() ? 0 : it->second;
}

Count JournalData::cits(Year citing, Year cited) const noexcept {
  const auto it = cits_.find(CitationKey{citing, cited});
  return it == cits_.end() ? 0 : it->second;
}

Injection::Injection(std::vector<Addition> additions) : additions_(std::move(additions)) {
  for (const auto& a : additions_) {
    if (a.k <= 0) throw InvalidArgument("injection sizes must be positive");
  }
}

Count Injection::total() const noexcept {
  Count sum = 0;
  for (const auto& a : additions_) sum += a.k;
  return sum;
}

JournalData apply_injection(const JournalData& data, const Injection& injection) {
  JournalData out = data;
  for (const auto& [year, k] : injection.additions()) {
    Count updated = 0;
    if (__builtin_add_overflow(out.pubs(year), k, &updated)) {
      throw OverflowError("publication count overflow");
    }
    out.set_pubs(year, updated);
  }
  return out;
}

}  // namespace ifaudit
