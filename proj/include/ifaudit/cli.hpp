#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ifaudit/indicators.hpp"

namespace ifaudit::cli {

enum class Command { Compute, Rank, Sensitivity, Mine, VerifyPaper };
enum class OutputFormat { Tsv, Json };

struct CliConfig {
  Command command = Command::VerifyPaper;
  std::string pubs_path;
  std::string cits_path;
  IndicatorKind kind = IndicatorKind::SyncRoa;
  int n = 2;
  std::optional<Year> year;
  int s = 0;
  Count k_max = 100;
  OutputFormat format = OutputFormat::Tsv;
  int places = 2;
  bool strict = false;
  // mine
  Count pub_max = 4;
  Count cit_max = 8;
  std::size_t limit = 10;
  unsigned threads = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

struct ParseOutcome {
  std::optional<CliConfig> config;
  /// Set when parsing finished the invocation (help, usage error).
  int exit_code = kExitOk;
};

/// Parses argv (args[0] is the program name). Help and usage text go to
/// `out`/`err` respectively.
ParseOutcome parse_args(const std::vector<std::string>& args, std::ostream& out,
                        std::ostream& err);

int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ifaudit::cli
