#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ifaudit/indicators.hpp"

namespace ifaudit {

struct Corpus {
  std::map<std::string, JournalData> journals;
  std::string provenance;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

/// Reads the two CSV extracts:
///   journal,year,pubs
///   journal,citing_year,cited_year,count
/// A completely empty stream is an empty table. Duplicate keys, negative
/// counts and citing < cited are ValidationErrors; malformed rows are
/// ParseErrors carrying the 1-based line number.
Corpus load_corpus(std::istream& pubs_csv, std::istream& cits_csv,
                   std::string provenance = {});
Corpus load_corpus_files(const std::filesystem::path& pubs_csv,
                         const std::filesystem::path& cits_csv);

/// Canonical JSON with sorted keys; identical corpora serialize to identical
/// bytes.
std::string to_json(const Corpus& corpus);
Corpus corpus_from_json(std::string_view text);

struct RankingEntry {
  std::string journal_id;
  Ratio value;
  int rank = 1;
  std::vector<std::string> tied_with;
  friend bool operator==(const RankingEntry&, const RankingEntry&) = default;
};

struct SkippedJournal {
  std::string journal_id;
  std::string reason;
  friend bool operator==(const SkippedJournal&, const SkippedJournal&) = default;
};

struct Ranking {
  std::vector<RankingEntry> entries;
  std::vector<SkippedJournal> skipped;
  friend bool operator==(const Ranking&, const Ranking&) = default;
};

enum class RankMode {
  /// Any journal that cannot be evaluated aborts the ranking.
  Strict,
  /// Such journals are listed in Ranking::skipped instead.
  Skip,
};

/// Descending by value with competition ranks (1, 1, 3); ties ordered by id.
Ranking rank(const Corpus& corpus, const IndicatorSpec& spec,
             RankMode mode = RankMode::Strict);

struct SensitivityRow {
  std::string upper_id;
  std::string lower_id;
  /// Denominator year -> smallest reversing k, absent when none <= k_max.
  std::map<Year, std::optional<Count>> per_year_min_k;
  Count k_max = 0;
  friend bool operator==(const SensitivityRow&, const SensitivityRow&) = default;
};

/// One row per adjacent pair of the ranking whose values differ strictly.
/// Every reported k is replayed through check_z_consistency before it is
/// returned.
std::vector<SensitivityRow> sensitivity_report(const Corpus& corpus, const IndicatorSpec& spec,
                                               Count k_max,
                                               RankMode mode = RankMode::Strict);

}  // namespace ifaudit
