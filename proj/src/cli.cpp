#include "ifaudit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "ifaudit/consistency.hpp"
#include "ifaudit/corpus.hpp"
#include "ifaudit/errors.hpp"
#include "ifaudit/miner.hpp"
#include "ifaudit/reference_data.hpp"

namespace ifaudit::cli {
namespace {

using json = nlohmann::json;

IndicatorSpec spec_of(const CliConfig& c) {
  return IndicatorSpec::make(c.kind, c.n, c.year.value_or(reference::kYear), c.s);
}

json spec_json(const IndicatorSpec& spec) {
  return {{"kind", std::string(to_string(spec.kind))},
          {"n", spec.n},
          {"year", spec.target_year},
          {"s", spec.s}};
}

json value_json(const Ratio& r, int places) {
  return {{"exact", r.str()}, {"decimal", to_decimal(r, places)}};
}

void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

Corpus load_inputs(const CliConfig& c) { return load_corpus_files(c.pubs_path, c.cits_path); }

int cmd_compute(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const Corpus corpus = load_inputs(c);
  const IndicatorSpec spec = spec_of(c);
  json results = json::array();
  std::vector<std::string> failures;
  if (c.format == OutputFormat::Tsv) out << "journal\texact\tdecimal\n";
  for (const auto& [id, data] : corpus.journals) {
    try {
      const Ratio value = compute(data, spec);
      if (c.format == OutputFormat::Tsv) {
        out << id << '\t' << value.str() << '\t' << to_decimal(value, c.places) << '\n';
      } else {
        json row = value_json(value, c.places);
        row["journal"] = id;
        results.push_back(std::move(row));
      }
    } catch (const ZeroDenominator& e) {
      failures.push_back(e.with_context(id, {}).what());
    }
  }
  if (c.format == OutputFormat::Json) {
    emit_json(out, {{"indicator", spec_json(spec)}, {"results", results}});
  }
  for (const auto& f : failures) err << "error: " << f << "\n";
  return failures.empty() ? kExitOk : kExitDataError;
}

int cmd_rank(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const Corpus corpus = load_inputs(c);
  const IndicatorSpec spec = spec_of(c);
  const Ranking ranking = rank(corpus, spec, c.strict ? RankMode::Strict : RankMode::Skip);
  for (const auto& s : ranking.skipped) {
    err << "warning: skipped journal '" << s.journal_id << "': " << s.reason << "\n";
  }
  if (c.format == OutputFormat::Tsv) {
    out << "rank\tjournal\texact\tdecimal\ttied_with\n";
    for (const auto& e : ranking.entries) {
      out << e.rank << '\t' << e.journal_id << '\t' << e.value.str() << '\t'
          << to_decimal(e.value, c.places) << '\t'
          << (e.tied_with.empty() ? "-" : join(e.tied_with, ",")) << '\n';
    }
    return kExitOk;
  }
  json entries = json::array();
  for (const auto& e : ranking.entries) {
    json row = value_json(e.value, c.places);
    row["rank"] = e.rank;
    row["journal"] = e.journal_id;
    row["tied_with"] = e.tied_with;
    entries.push_back(std::move(row));
  }
  json skipped = json::array();
  for (const auto& s : ranking.skipped) skipped.push_back({{"journal", s.journal_id}, {"reason", s.reason}});
  emit_json(out, {{"indicator", spec_json(spec)}, {"ranking", entries}, {"skipped", skipped}});
  return kExitOk;
}

int cmd_sensitivity(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const Corpus corpus = load_inputs(c);
  const IndicatorSpec spec = spec_of(c);
  const RankMode mode = c.strict ? RankMode::Strict : RankMode::Skip;
  for (const auto& s : rank(corpus, spec, mode).skipped) {
    err << "warning: skipped journal '" << s.journal_id << "': " << s.reason << "\n";
  }
  const auto rows = sensitivity_report(corpus, spec, c.k_max, mode);
  if (c.format == OutputFormat::Tsv) {
    out << "upper\tlower\tyear\tmin_k\tk_max\n";
    for (const auto& row : rows) {
      for (const auto& [year, k] : row.per_year_min_k) {
        out << row.upper_id << '\t' << row.lower_id << '\t' << year << '\t'
            << (k ? std::to_string(*k) : "-") << '\t' << row.k_max << '\n';
      }
    }
    return kExitOk;
  }
  json arr = json::array();
  for (const auto& row : rows) {
    json per_year = json::object();
    for (const auto& [year, k] : row.per_year_min_k) {
      per_year[std::to_string(year)] = k ? json(*k) : json(nullptr);
    }
    arr.push_back({{"upper", row.upper_id},
                   {"lower", row.lower_id},
                   {"min_k", per_year},
                   {"k_max", row.k_max}});
  }
  emit_json(out, {{"indicator", spec_json(spec)}, {"rows", arr}});
  return kExitOk;
}

std::vector<std::string> window_pubs(const JournalData& j, const IndicatorSpec& spec) {
  std::vector<std::string> out;
  for (const Year y : denominator_years(spec)) out.push_back(std::to_string(j.pubs(y)));
  return out;
}

std::vector<std::string> window_cits(const JournalData& j, const IndicatorSpec& spec) {
  std::vector<std::string> out;
  for (const auto& k : numerator_keys(spec)) out.push_back(std::to_string(j.cits(k.citing, k.cited)));
  return out;
}

int cmd_mine(const CliConfig& c, std::ostream& out, std::ostream&) {
  SearchBounds bounds;
  bounds.n = c.n;
  bounds.pub_max = c.pub_max;
  bounds.cit_max = c.cit_max;
  bounds.k_max = c.k_max;
  bounds.target_year = c.year.value_or(reference::kYear);
  bounds.s = c.s;
  const IndicatorSpec spec = bounds.spec(c.kind);
  const auto witnesses = mine_counterexamples(c.kind, bounds, MineOptions{c.limit, c.threads});

  std::vector<std::string> years;
  for (const Year y : denominator_years(spec)) years.push_back(std::to_string(y));
  std::vector<std::string> cells;
  for (const auto& k : numerator_keys(spec)) {
    cells.push_back(std::to_string(k.citing) + "<-" + std::to_string(k.cited));
  }

  if (c.format == OutputFormat::Tsv) {
    out << "# publication years: " << join(years, ",") << "\n"
        << "# citation cells (citing<-cited): " << join(cells, ",") << "\n"
        << "left_pubs\tleft_cits\tright_pubs\tright_cits\tinject_year\tk"
           "\tbefore_left\tbefore_left_dec\tbefore_right\tbefore_right_dec"
           "\tafter_left\tafter_left_dec\tafter_right\tafter_right_dec\n";
    for (const auto& w : witnesses) {
      const auto& sc = w.scenario;
      const auto& add = sc.injection.additions().front();
      out << join(window_pubs(sc.left, spec), ",") << '\t' << join(window_cits(sc.left, spec), ",")
          << '\t' << join(window_pubs(sc.right, spec), ",") << '\t'
          << join(window_cits(sc.right, spec), ",") << '\t' << add.year << '\t' << add.k;
      for (const Ratio& r : {w.verdict.before.first, w.verdict.before.second, w.verdict.after.first,
                             w.verdict.after.second}) {
        out << '\t' << r.str() << '\t' << to_decimal(r, c.places);
      }
      out << '\n';
    }
    return kExitOk;
  }
  json arr = json::array();
  for (const auto& w : witnesses) {
    const auto& sc = w.scenario;
    const auto& add = sc.injection.additions().front();
    arr.push_back({{"left", {{"pubs", window_pubs(sc.left, spec)}, {"cits", window_cits(sc.left, spec)}}},
                   {"right", {{"pubs", window_pubs(sc.right, spec)}, {"cits", window_cits(sc.right, spec)}}},
                   {"injection", {{"year", add.year}, {"k", add.k}}},
                   {"before", {value_json(w.verdict.before.first, c.places),
                               value_json(w.verdict.before.second, c.places)}},
                   {"after", {value_json(w.verdict.after.first, c.places),
                              value_json(w.verdict.after.second, c.places)}},
                   {"verdict", std::string(to_string(w.verdict.tag))}});
  }
  emit_json(out, {{"indicator", spec_json(spec)},
                  {"publication_years", years},
                  {"citation_cells", cells},
                  {"witnesses", arr}});
  return kExitOk;
}

int cmd_verify_paper(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const auto checks = reference::run_reference_checks(c.year.value_or(reference::kYear));
  std::size_t failed = 0;
  if (c.format == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& ch : checks) {
      arr.push_back({{"check", ch.label},
                     {"exact", ch.exact},
                     {"shown", ch.shown},
                     {"expected", ch.expected},
                     {"passed", ch.passed}});
      failed += ch.passed ? 0 : 1;
    }
    emit_json(out, {{"checks", arr}, {"failed", failed}});
  } else {
    for (const auto& ch : checks) {
      out << (ch.passed ? "ok  " : "FAIL") << '\t' << ch.label << '\t' << ch.exact << '\t' << ch.shown
          << "\texpected " << ch.expected << '\n';
      failed += ch.passed ? 0 : 1;
    }
    out << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
  }
  if (failed != 0) {
    err << "error: " << failed << " worked-example check(s) failed\n";
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace

ParseOutcome parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact journal impact factors and Z-consistency audits", "ifaudit"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::string kind = "sync-roa";
  std::string format = "tsv";
  int year = 0;

  auto* compute_cmd = app.add_subcommand("compute", "Evaluate one indicator for every journal");
  auto* rank_cmd = app.add_subcommand("rank", "Rank journals by an indicator");
  auto* sens_cmd = app.add_subcommand("sensitivity",
                                      "Smallest common uncited injection that flips adjacent ranks");
  auto* mine_cmd = app.add_subcommand("mine", "Search a bounded box for ordering reversals");
  auto* verify_cmd = app.add_subcommand("verify-paper", "Recompute the published worked examples");

  const std::vector<std::string> kinds{"sync-roa", "sync-aor", "diachronous"};
  const std::vector<std::string> formats{"tsv", "json"};

  auto add_common = [&](CLI::App* sub, bool corpus_input, bool needs_year) {
    if (corpus_input) {
      sub->add_option("--pubs", cfg.pubs_path, "Publications CSV (journal,year,pubs)")
          ->required();
      sub->add_option("--cits", cfg.cits_path,
                      "Citations CSV (journal,citing_year,cited_year,count)")
          ->required();
    }
    sub->add_option("--kind", kind, "Indicator kind")->check(CLI::IsMember(kinds))->capture_default_str();
    sub->add_option("-n", cfg.n, "Window length")->check(CLI::Range(1, 1000))->capture_default_str();
    auto* y = sub->add_option("--year", year, "Target year Y");
    if (needs_year) y->required();
    sub->add_option("-s", cfg.s, "Diachronous start offset")->check(CLI::IsMember({0, 1}))->capture_default_str();
    sub->add_option("--k-max", cfg.k_max, "Largest injection size to try")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
    sub->add_option("--places", cfg.places, "Decimal places")->check(CLI::Range(0, 30))->capture_default_str();
  };
  add_common(compute_cmd, true, true);
  add_common(rank_cmd, true, true);
  add_common(sens_cmd, true, true);
  add_common(mine_cmd, false, false);
  verify_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
  verify_cmd->add_option("--year", year, "Year to instantiate Y with");

  rank_cmd->add_flag("--strict", cfg.strict, "Fail instead of skipping journals that cannot be evaluated");
  sens_cmd->add_flag("--strict", cfg.strict, "Fail instead of skipping journals that cannot be evaluated");
  mine_cmd->add_option("--pub-max", cfg.pub_max, "Largest publication count per year")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  mine_cmd->add_option("--cit-max", cfg.cit_max, "Largest citation count per cell")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  mine_cmd->add_option("--limit", cfg.limit, "Maximum number of witnesses")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  mine_cmd->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return {std::nullopt, kExitOk};
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return {std::nullopt, kExitOk};
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return {std::nullopt, kExitUsage};
  }

  if (compute_cmd->parsed()) cfg.command = Command::Compute;
  else if (rank_cmd->parsed()) cfg.command = Command::Rank;
  else if (sens_cmd->parsed()) cfg.command = Command::Sensitivity;
  else if (mine_cmd->parsed()) cfg.command = Command::Mine;
  else cfg.command = Command::VerifyPaper;

  cfg.kind = parse_indicator_kind(kind);
  cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Tsv;
  for (const auto* sub : {compute_cmd, rank_cmd, sens_cmd, mine_cmd, verify_cmd}) {
    if (sub->parsed() && sub->count("--year") > 0) cfg.year = year;
  }
  return {cfg, kExitOk};
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Compute:
        return cmd_compute(config, out, err);
      case Command::Rank:
        return cmd_rank(config, out, err);
      case Command::Sensitivity:
        return cmd_sensitivity(config, out, err);
      case Command::Mine:
        return cmd_mine(config, out, err);
      case Command::VerifyPaper:
        return cmd_verify_paper(config, out, err);
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitUsage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const ParseOutcome parsed = parse_args(args, out, err);
  if (!parsed.config) return parsed.exit_code;
  return run(*parsed.config, out, err);
}

}  // namespace ifaudit::cli
