// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            run every criterion
//   acceptance --only N   run criterion N

#include <algorithm>
#include <array>
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ifaudit/cli.hpp"
#include "ifaudit/consistency.hpp"
#include "ifaudit/corpus.hpp"
#include "ifaudit/miner.hpp"
#include "ifaudit/reference_data.hpp"

using namespace ifaudit;

namespace {

constexpr Year Y = reference::kYear;

struct Outcome {
  bool passed = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void expect_budget(Outcome& o, Clock::time_point start, double budget_ms) {
  const double ms = elapsed_ms(start);
  std::ostringstream msg;
  msg << "runtime " << ms << " ms exceeds " << budget_ms << " ms";
  o.expect(ms < budget_ms, msg.str());
}

std::string show(const Ratio& r) { return r.str() + " (" + to_decimal(r, 2) + ")"; }

Outcome table_check(const std::pair<JournalData, JournalData>& pair, const IndicatorSpec& spec,
                    const Injection& injection, const std::array<Ratio, 4>& expected,
                    const std::array<const char*, 4>& shown) {
  Outcome o;
  const auto start = Clock::now();
  const Verdict v = check_z_consistency({pair.first, pair.second, spec, injection});
  const double ms = elapsed_ms(start);
  const std::array<Ratio, 4> got{v.before.first, v.before.second, v.after.first, v.after.second};
  for (std::size_t i = 0; i < 4; ++i) {
    o.expect(got[i] == expected[i], "value " + std::to_string(i) + " = " + show(got[i]) +
                                        ", expected " + expected[i].str());
    o.expect(to_decimal(got[i], 2) == shown[i],
             "decimal " + to_decimal(got[i], 2) + ", expected " + shown[i]);
  }
  o.expect(v.tag == VerdictTag::Reversed, std::string("verdict ") + std::string(to_string(v.tag)));
  o.expect(ms < 1.0, "runtime " + std::to_string(ms) + " ms exceeds 1 ms");
  return o;
}

Outcome criterion_1() {
  return table_check(reference::roa_pair(), IndicatorSpec::sync_roa(Y, 2), Injection::single(Y - 1, 25),
                     {Ratio(3, 1), Ratio(2, 1), Ratio(4, 3), Ratio(24, 17)}, {"3.00", "2.00", "1.33", "1.41"});
}

Outcome criterion_2() {
  return table_check(reference::diachronous_pair(), IndicatorSpec::diachronous(Y, 3, 0),
                     Injection::single(Y, 25), {Ratio(3, 1), Ratio(2, 1), Ratio(4, 3), Ratio(24, 17)},
                     {"3.00", "2.00", "1.33", "1.41"});
}

Outcome criterion_3() {
  return table_check(reference::aor_pair(), IndicatorSpec::sync_aor(Y, 2), Injection::single(Y - 1, 10),
                     {Ratio(13, 6), Ratio(9, 4), Ratio(17, 8), Ratio(7, 4)}, {"2.17", "2.25", "2.13", "1.75"});
}

JournalData window_journal(std::string id, const std::vector<Count>& pubs, const std::vector<Count>& cits) {
  JournalData j(std::move(id));
  for (std::size_t i = 0; i < pubs.size(); ++i) {
    const Year cited = Y - static_cast<Year>(i) - 1;
    j.set_pubs(cited, pubs[i]).set_cits(Y, cited, cits[i]);
  }
  return j;
}

Outcome criterion_4() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(2011);
  std::uniform_int_distribution<int> window(1, 5);
  std::uniform_int_distribution<Count> pub(1, 50), cit(0, 200), kdist(1, 50);
  std::uniform_int_distribution<int> parts(1, 3);
  int strict = 0;
  int reversed = 0;
  while (strict < 10000) {
    const int n = window(rng);
    std::vector<Count> pubs(n), lc(n), rc(n);
    for (int i = 0; i < n; ++i) {
      pubs[i] = pub(rng);
      lc[i] = cit(rng);
      rc[i] = cit(rng);
    }
    const auto spec = IndicatorSpec::sync_roa(Y, n);
    const JournalData l = window_journal("J", pubs, lc);
    const JournalData r = window_journal("J'", pubs, rc);
    if (compute(l, spec) == compute(r, spec)) continue;
    std::uniform_int_distribution<int> slot(1, n);
    std::vector<Addition> adds;
    for (int a = parts(rng); a > 0; --a) adds.push_back({Y - slot(rng), kdist(rng)});
    ++strict;
    try {
      const Verdict v = equal_pubs_preserved(l, r, spec, Injection(adds));
      if (v.tag == VerdictTag::Reversed) ++reversed;
    } catch (const std::logic_error&) {
      ++reversed;
    }
  }
  o.expect(reversed == 0, std::to_string(reversed) + " randomized reversals");

  // Exhaustive: shared pubs 1..3, cits 0..5, n = 2, every injection with
  // 0..3 added to each window year (not both zero).
  const auto spec = IndicatorSpec::sync_roa(Y, 2);
  long long cases = 0;
  for (Count p1 = 1; p1 <= 3; ++p1)
    for (Count p2 = 1; p2 <= 3; ++p2)
      for (Count a1 = 0; a1 <= 5; ++a1)
        for (Count a2 = 0; a2 <= 5; ++a2)
          for (Count b1 = 0; b1 <= 5; ++b1)
            for (Count b2 = 0; b2 <= 5; ++b2) {
              const JournalData l = window_journal("J", {p1, p2}, {a1, a2});
              const JournalData r = window_journal("J'", {p1, p2}, {b1, b2});
              for (Count k1 = 0; k1 <= 3; ++k1)
                for (Count k2 = 0; k2 <= 3; ++k2) {
                  if (k1 + k2 == 0) continue;
                  std::vector<Addition> adds;
                  if (k1 > 0) adds.push_back({Y - 1, k1});
                  if (k2 > 0) adds.push_back({Y - 2, k2});
                  const Verdict v = check_z_consistency({l, r, spec, Injection(adds)});
                  ++cases;
                  if (v.tag == VerdictTag::Reversed) ++reversed;
                }
            }
  o.expect(reversed == 0, std::to_string(reversed) + " exhaustive reversals");
  SearchBounds b;
  b.n = 2;
  b.pub_max = 3;
  b.cit_max = 5;
  b.k_max = 3;
  b.target_year = Y;
  b.equal_pubs = true;
  o.expect(mine_counterexamples(IndicatorKind::SyncRoa, b, {1000, 0}).empty(),
           "miner found an equal-publication RoA witness");
  expect_budget(o, start, 10000.0);
  o.detail = o.passed ? std::to_string(strict) + " random + " + std::to_string(cases) + " exhaustive cases"
                      : o.detail;
  return o;
}

Outcome criterion_5() {
  Outcome o;
  const auto start = Clock::now();
  long long cases = 0;
  for (int n : {2, 3}) {
    std::vector<Count> cits(static_cast<std::size_t>(n), 0);
    for (Count p = 1; p <= 5; ++p) {
      std::fill(cits.begin(), cits.end(), 0);
      while (true) {
        const JournalData j = window_journal("J", std::vector<Count>(static_cast<std::size_t>(n), p), cits);
        ++cases;
        if (sync_if_roa(j, Y, n) != sync_if_aor(j, Y, n)) o.expect(false, "mismatch at p=" + std::to_string(p));
        std::size_t i = 0;
        while (i < cits.size() && cits[i] == 10) cits[i++] = 0;
        if (i == cits.size()) break;
        ++cits[i];
      }
    }
  }
  expect_budget(o, start, 5000.0);
  if (o.passed) o.detail = std::to_string(cases) + " cases";
  return o;
}

std::string fingerprint(const std::vector<ReversalWitness>& ws) {
  std::ostringstream s;
  for (const auto& w : ws) {
    for (const auto* j : {&w.scenario.left, &w.scenario.right}) {
      for (const auto& [y, c] : j->pub_table()) s << y << ':' << c << ' ';
      for (const auto& [k, c] : j->cit_table()) s << k.citing << '<' << k.cited << ':' << c << ' ';
      s << '|';
    }
    for (const auto& a : w.scenario.injection.additions()) s << a.year << '+' << a.k;
    s << '\n';
  }
  return s.str();
}

Outcome criterion_6() {
  Outcome o;
  struct Run {
    IndicatorKind kind;
    Count pub_max, cit_max, k_max;
  };
  std::ostringstream summary;
  for (const Run& run : {Run{IndicatorKind::SyncRoa, 30, 60, 25}, Run{IndicatorKind::SyncAor, 4, 8, 4}}) {
    SearchBounds b;
    b.n = 2;
    b.pub_max = run.pub_max;
    b.cit_max = run.cit_max;
    b.k_max = run.k_max;
    b.target_year = Y;
    const auto start = Clock::now();
    const auto first = mine_counterexamples(run.kind, b, {10, 0});
    expect_budget(o, start, 60000.0);
    const auto second = mine_counterexamples(run.kind, b, {10, 1});
    const std::string name(to_string(run.kind));
    o.expect(!first.empty(), name + ": no witness");
    for (const auto& w : first) o.expect(reverify(w), name + ": witness failed to re-verify");
    o.expect(fingerprint(first) == fingerprint(second), name + ": runs differ");
    summary << name << ' ' << first.size() << " witnesses; ";
  }
  if (o.passed) o.detail = summary.str();
  return o;
}

Outcome criterion_7() {
  Outcome o;
  const auto start = Clock::now();
  const auto [j, jp] = reference::roa_pair();
  const auto spec = IndicatorSpec::sync_roa(Y, 2);
  const auto k = min_reversal_k(j, jp, spec, Y - 1, 100);
  o.expect(k == 21, "min k = " + (k ? std::to_string(*k) : std::string("none")));
  const Verdict v = check_z_consistency({j, jp, spec, Injection::single(Y - 1, 20)});
  o.expect(v.tag == VerdictTag::Preserved,
           "k = 20 gives " + std::string(to_string(v.tag)) + " (" + show(v.after.first) + " vs " +
               show(v.after.second) + "), expected PRESERVED");
  expect_budget(o, start, 1.0);
  return o;
}

Outcome criterion_8() {
  Outcome o;
  o.expect(to_decimal(Ratio(17, 8), 2) == "2.13", "17/8 -> " + to_decimal(Ratio(17, 8), 2));
  o.expect(to_decimal(Ratio(13, 6), 2) == "2.17", "13/6 -> " + to_decimal(Ratio(13, 6), 2));
  return o;
}

Outcome criterion_9() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> pub(0, 25), cit(0, 80);
  std::vector<std::string> pubs, cits;
  for (int j = 0; j < 30; ++j) {
    const std::string id = "J" + std::to_string(j);
    for (int y = 1; y <= 2; ++y) {
      pubs.push_back(id + "," + std::to_string(Y - y) + "," + std::to_string(pub(rng) + (j % 5 == 0 ? 0 : 1)));
      cits.push_back(id + "," + std::to_string(Y) + "," + std::to_string(Y - y) + "," + std::to_string(cit(rng) / 4 * 4));
    }
  }
  auto load = [&] {
    std::string p = "journal,year,pubs\n", c = "journal,citing_year,cited_year,count\n";
    for (const auto& r : pubs) p += r + "\n";
    for (const auto& r : cits) c += r + "\n";
    std::istringstream ps(p), cs(c);
    return load_corpus(ps, cs, "generated");
  };
  const Corpus corpus = load();
  const std::string text = to_json(corpus);
  const Corpus back = corpus_from_json(text);
  o.expect(back == corpus, "reloaded corpus differs");
  o.expect(to_json(back) == text, "JSON round trip not byte-identical");

  const auto spec = IndicatorSpec::sync_roa(Y, 2);
  const Ranking base = rank(corpus, spec, RankMode::Skip);
  int diffs = 0;
  for (int i = 0; i < 100; ++i) {
    std::shuffle(pubs.begin(), pubs.end(), rng);
    std::shuffle(cits.begin(), cits.end(), rng);
    if (!(rank(load(), spec, RankMode::Skip) == base)) ++diffs;
  }
  o.expect(diffs == 0, std::to_string(diffs) + " shuffles changed the ranking");
  expect_budget(o, start, 5000.0);
  return o;
}

Outcome criterion_10() {
  Outcome o;
  std::ostringstream out, err;
  const int code = cli::main_entry({"ifaudit", "verify-paper"}, out, err);
  o.expect(code == 0, "exit code " + std::to_string(code) + ": " + err.str());
  for (const char* v : {"3.00", "2.00", "1.33", "1.41", "2.17", "2.25", "2.13", "1.75"}) {
    o.expect(out.str().find(v) != std::string::npos, std::string("missing ") + v);
  }
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "RoA worked example (+25) reverses exactly", criterion_1},
      {2, "diachronous worked example (+25 at Y) reverses exactly", criterion_2},
      {3, "AoR worked example (+10 at Y-1) reverses exactly", criterion_3},
      {4, "equal publication vectors never reverse RoA", criterion_4},
      {5, "RoA equals AoR under constant publications", criterion_5},
      {6, "miner rediscovers self-verifying witnesses deterministically", criterion_6},
      {7, "minimal reversing k is 21 and k = 20 is PRESERVED", criterion_7},
      {8, "half-up rounding of 17/8 and 13/6", criterion_8},
      {9, "JSON round trip and ranking permutation invariance", criterion_9},
      {10, "verify-paper exits 0", criterion_10},
  };
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  int failed = 0;
  int ran = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = Outcome{false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.passed ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title;
    if (!o.detail.empty()) std::cout << "  -- " << o.detail;
    std::cout << "\n";
    failed += o.passed ? 0 : 1;
  }
  if (ran == 0) {
    std::cerr << "no such criterion\n";
    return 2;
  }
  std::cout << (ran - failed) << "/" << ran << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
