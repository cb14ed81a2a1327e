#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ifaudit/types.hpp"

namespace ifaudit {

/// Key of the publication-citation matrix: (citing year, cited year).
struct CitationKey {
  Year citing;
  Year cited;
  friend auto operator<=>(const CitationKey&, const CitationKey&) = default;
};

/// Publication and citation counts of one journal.
///
/// Absent keys read as zero. Counts are never negative and a citation key
/// never has citing < cited; both are enforced on every write.
class JournalData {
 public:
  JournalData() = default;
  explicit JournalData(std::string id) : id_(std::move(id)) {}

  const std::string& id() const noexcept { return id_; }

  /// Overwrites PUB(year).
  JournalData& set_pubs(Year year, Count count);
  /// Overwrites CIT(citing, cited).
  JournalData& set_cits(Year citing, Year cited, Count count);

  Count pubs(Year year) const noexcept;
  Count cits(Year citing, Year cited) const noexcept;

  const std::map<Year, Count>& pub_table() const noexcept { return pubs_; }
  const std::map<CitationKey, Count>& cit_table() const noexcept { return cits_; }

  friend bool operator==(const JournalData&, const JournalData&) = default;

 private:
  std::string id_;
  std::map<Year, Count> pubs_;
  std::map<CitationKey, Count> cits_;
};

inline Count pub_count(const JournalData& data, Year year) noexcept {
  return data.pubs(year);
}

inline Count cit_count(const JournalData& data, Year citing, Year cited) noexcept {
  return data.cits(citing, cited);
}

/// A batch of uncited publications. Repeated years accumulate.
struct Addition {
  Year year;
  Count k;
  friend bool operator==(const Addition&, const Addition&) = default;
};

class Injection {
 public:
  Injection() = default;
  /// Throws InvalidArgument unless every k > 0.
  explicit Injection(std::vector<Addition> additions);

  static Injection single(Year year, Count k) { return Injection({{year, k}}); }

  const std::vector<Addition>& additions() const noexcept { return additions_; }
  bool empty() const noexcept { return additions_.empty(); }
  Count total() const noexcept;

  friend bool operator==(const Injection&, const Injection&) = default;

 private:
  std::vector<Addition> additions_;
};

/// Returns a copy of `data` with every addition applied to its publication
/// counts. Citations are untouched.
JournalData apply_injection(const JournalData& data, const Injection& injection);

}  // namespace ifaudit
