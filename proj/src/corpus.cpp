#include "ifaudit/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <set>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "ifaudit/consistency.hpp"
#include "ifaudit/errors.hpp"

namespace ifaudit {
namespace {

using json = nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// RFC 4180 fields on a single line; quoted fields may contain commas and "".
std::vector<std::string> split_csv(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::size_t i = 0;
  while (true) {
    std::string field;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i < line.size() && line[i] == '"') {
      ++i;
      bool closed = false;
      while (i < line.size()) {
        if (line[i] == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            field.push_back('"');
            i += 2;
            continue;
          }
          ++i;
          closed = true;
          break;
        }
        field.push_back(line[i++]);
      }
      if (!closed) throw ParseError(line_no, "unterminated quoted field");
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      if (i < line.size() && line[i] != ',') throw ParseError(line_no, "text after closing quote");
    } else {
      const auto comma = line.find(',', i);
      const auto stop = comma == std::string_view::npos ? line.size() : comma;
      field = std::string(trim(line.substr(i, stop - i)));
      i = stop;
    }
    fields.push_back(std::move(field));
    if (i >= line.size()) break;
    ++i;  // comma
  }
  return fields;
}

template <typename Int>
Int parse_int(const std::string& text, std::size_t line_no, const char* what) {
  Int value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError(line_no, std::string("invalid ") + what + " '" + text + "'");
  }
  return value;
}

void read_rows(std::istream& in, const std::vector<std::string>& header,
               const std::function<void(const std::vector<std::string>&, std::size_t)>& row) {
  std::string line;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    if (trim(view).empty()) continue;
    auto fields = split_csv(view, line_no);
    if (!seen_header) {
      if (fields != header) {
        std::string expected;
        for (const auto& h : header) expected += (expected.empty() ? "" : ",") + h;
        throw ParseError(line_no, "expected header '" + expected + "'");
      }
      seen_header = true;
      continue;
    }
    if (fields.size() != header.size()) {
      throw ParseError(line_no, "expected " + std::to_string(header.size()) + " fields, got " +
                                    std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw ValidationError("line " + std::to_string(line_no) + ": empty journal id");
    row(fields, line_no);
  }
}

void read_table(std::istream& in, const std::vector<std::string>& header, const char* table,
                const std::function<void(const std::vector<std::string>&, std::size_t)>& row) {
  try {
    read_rows(in, header, row);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), std::string(table) + ": " + e.reason());
  } catch (const ValidationError& e) {
    throw ValidationError(std::string(table) + ": " + e.what());
  }
}

JournalData& journal_for(Corpus& corpus, const std::string& id) {
  return corpus.journals.try_emplace(id, JournalData(id)).first->second;
}

std::string at_line(std::size_t line_no, const std::string& msg) {
  return "line " + std::to_string(line_no) + ": " + msg;
}

}  // namespace

Corpus load_corpus(std::istream& pubs_csv, std::istream& cits_csv, std::string provenance) {
  Corpus corpus;
  corpus.provenance = std::move(provenance);

  std::set<std::pair<std::string, Year>> seen_pubs;
  read_table(pubs_csv, {"journal", "year", "pubs"}, "publications",
             [&](const std::vector<std::string>& f, std::size_t line_no) {
               const auto year = parse_int<Year>(f[1], line_no, "year");
               const auto count = parse_int<Count>(f[2], line_no, "publication count");
               if (!seen_pubs.emplace(f[0], year).second) {
                 throw ValidationError(at_line(line_no, "duplicate publication row for ('" + f[0] +
                                                            "', " + f[1] + ")"));
               }
               try {
                 journal_for(corpus, f[0]).set_pubs(year, count);
               } catch (const ValidationError& e) {
                 throw ValidationError(at_line(line_no, e.what()));
               }
             });

  std::set<std::tuple<std::string, Year, Year>> seen_cits;
  read_table(cits_csv, {"journal", "citing_year", "cited_year", "count"}, "citations",
             [&](const std::vector<std::string>& f, std::size_t line_no) {
               const auto citing = parse_int<Year>(f[1], line_no, "citing year");
               const auto cited = parse_int<Year>(f[2], line_no, "cited year");
               const auto count = parse_int<Count>(f[3], line_no, "citation count");
               if (!seen_cits.emplace(f[0], citing, cited).second) {
                 throw ValidationError(at_line(line_no, "duplicate citation row for ('" + f[0] +
                                                            "', " + f[1] + ", " + f[2] + ")"));
               }
               try {
                 journal_for(corpus, f[0]).set_cits(citing, cited, count);
               } catch (const ValidationError& e) {
                 throw ValidationError(at_line(line_no, e.what()));
               }
             });
  return corpus;
}

Corpus load_corpus_files(const std::filesystem::path& pubs_csv,
                         const std::filesystem::path& cits_csv) {
  std::ifstream pubs(pubs_csv);
  if (!pubs) throw Error("cannot open " + pubs_csv.string());
  std::ifstream cits(cits_csv);
  if (!cits) throw Error("cannot open " + cits_csv.string());
  return load_corpus(pubs, cits, pubs_csv.string() + " + " + cits_csv.string());
}

std::string to_json(const Corpus& corpus) {
  json journals = json::object();
  for (const auto& [id, data] : corpus.journals) {
    json pubs = json::object();
    for (const auto& [year, count] : data.pub_table()) pubs[std::to_string(year)] = count;
    json cits = json::array();
    for (const auto& [key, count] : data.cit_table()) {
      cits.push_back({{"citing", key.citing}, {"cited", key.cited}, {"count", count}});
    }
    journals[id] = {{"pubs", std::move(pubs)}, {"cits", std::move(cits)}};
  }
  json doc = {{"journals", std::move(journals)}};
  if (!corpus.provenance.empty()) doc["provenance"] = corpus.provenance;
  return doc.dump(2) + "\n";
}

Corpus corpus_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + upto, '\n'));
    throw ParseError(line, "invalid JSON");
  }
  Corpus corpus;
  try {
    if (!doc.is_object() || !doc.contains("journals") || !doc["journals"].is_object()) {
      throw ValidationError("corpus JSON needs a \"journals\" object");
    }
    if (doc.contains("provenance")) corpus.provenance = doc["provenance"].get<std::string>();
    for (const auto& [id, body] : doc["journals"].items()) {
      if (id.empty()) throw ValidationError("empty journal id");
      JournalData data(id);
      if (body.contains("pubs")) {
        for (const auto& [year, count] : body.at("pubs").items()) {
          std::size_t used = 0;
          const int y = std::stoi(year, &used);
          if (used != year.size()) throw ValidationError("invalid year key '" + year + "'");
          data.set_pubs(y, count.get<Count>());
        }
      }
      if (body.contains("cits")) {
        std::set<CitationKey> seen;
        for (const auto& c : body.at("cits")) {
          const CitationKey key{c.at("citing").get<Year>(), c.at("cited").get<Year>()};
          if (!seen.insert(key).second) throw ValidationError("duplicate citation key in '" + id + "'");
          data.set_cits(key.citing, key.cited, c.at("count").get<Count>());
        }
      }
      corpus.journals.emplace(id, std::move(data));
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed corpus JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ValidationError("malformed year key in corpus JSON");
  } catch (const std::out_of_range&) {
    throw ValidationError("year key out of range in corpus JSON");
  }
  return corpus;
}

Ranking rank(const Corpus& corpus, const IndicatorSpec& spec, RankMode mode) {
  Ranking out;
  for (const auto& [id, data] : corpus.journals) {
    try {
      out.entries.push_back(RankingEntry{id, compute(data, spec), 1, {}});
    } catch (const ZeroDenominator& e) {
      if (mode == RankMode::Strict) throw e.with_context(id, {});
      out.skipped.push_back({id, e.what()});
    }
  }
  std::stable_sort(out.entries.begin(), out.entries.end(), [](const auto& a, const auto& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.journal_id < b.journal_id;
  });
  for (std::size_t i = 0; i < out.entries.size();) {
    std::size_t j = i;
    while (j < out.entries.size() && out.entries[j].value == out.entries[i].value) ++j;
    for (std::size_t a = i; a < j; ++a) {
      out.entries[a].rank = static_cast<int>(i) + 1;
      for (std::size_t b = i; b < j; ++b) {
        if (a != b) out.entries[a].tied_with.push_back(out.entries[b].journal_id);
      }
    }
    i = j;
  }
  return out;
}

std::vector<SensitivityRow> sensitivity_report(const Corpus& corpus, const IndicatorSpec& spec,
                                               Count k_max, RankMode mode) {
  const Ranking ranking = rank(corpus, spec, mode);
  const auto years = denominator_years(spec);
  std::vector<SensitivityRow> rows;
  for (std::size_t i = 0; i + 1 < ranking.entries.size(); ++i) {
    const auto& upper = ranking.entries[i];
    const auto& lower = ranking.entries[i + 1];
    if (upper.value == lower.value) continue;
    const JournalData& u = corpus.journals.at(upper.journal_id);
    const JournalData& l = corpus.journals.at(lower.journal_id);
    SensitivityRow row{upper.journal_id, lower.journal_id, {}, k_max};
    for (const Year y : years) {
      const auto k = min_reversal_k(u, l, spec, y, k_max);
      if (k) {
        const Verdict v = check_z_consistency(PairScenario{u, l, spec, Injection::single(y, *k)});
        if (v.tag != VerdictTag::Reversed) {
          throw std::logic_error("sensitivity minimum failed to re-verify");
        }
      }
      row.per_year_min_k.emplace(y, k);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ifaudit
