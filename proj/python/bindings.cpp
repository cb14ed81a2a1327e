#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "ifaudit/consistency.hpp"
#include "ifaudit/corpus.hpp"
#include "ifaudit/errors.hpp"
#include "ifaudit/miner.hpp"
#include "ifaudit/reference_data.hpp"

namespace py = pybind11;
using namespace ifaudit;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact journal impact factors and Z-consistency audits";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ZeroDenominator>(m, "ZeroDenominator", base.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<PreconditionViolated>(m, "PreconditionViolated", base.ptr());
  py::register_exception<InvalidTargetYear>(m, "InvalidTargetYear", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<OverflowError>(m, "OverflowError", base.ptr());

  py::class_<Ratio>(m, "Ratio")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("num"), py::arg("den") = 1)
      .def_property_readonly("num", &Ratio::num)
      .def_property_readonly("den", &Ratio::den)
      .def("to_decimal", [](const Ratio& r, int places) { return to_decimal(r, places); },
           py::arg("places") = 2)
      .def("__float__", &Ratio::to_double)
      .def("__str__", &Ratio::str)
      .def("__repr__", [](const Ratio& r) { return "Ratio(" + std::to_string(r.num()) + ", " + std::to_string(r.den()) + ")"; })
      .def("__eq__", [](const Ratio& a, const Ratio& b) { return a == b; })
      .def("__lt__", [](const Ratio& a, const Ratio& b) { return a < b; })
      .def("__le__", [](const Ratio& a, const Ratio& b) { return a <= b; })
      .def("__gt__", [](const Ratio& a, const Ratio& b) { return a > b; })
      .def("__ge__", [](const Ratio& a, const Ratio& b) { return a >= b; })
      .def("__hash__", [](const Ratio& r) { return py::hash(py::make_tuple(r.num(), r.den())); });

  py::class_<JournalData>(m, "JournalData")
      .def(py::init<std::string>(), py::arg("journal_id") = "")
      .def_property_readonly("journal_id", &JournalData::id)
      .def("set_pubs", &JournalData::set_pubs, py::arg("year"), py::arg("count"),
           py::return_value_policy::reference_internal)
      .def("set_cits", &JournalData::set_cits, py::arg("citing"), py::arg("cited"), py::arg("count"),
           py::return_value_policy::reference_internal)
      .def("pubs", &JournalData::pubs, py::arg("year"))
      .def("cits", &JournalData::cits, py::arg("citing"), py::arg("cited"))
      .def("__eq__", [](const JournalData& a, const JournalData& b) { return a == b; });

  py::enum_<IndicatorKind>(m, "IndicatorKind")
      .value("SYNC_ROA", IndicatorKind::SyncRoa)
      .value("SYNC_AOR", IndicatorKind::SyncAor)
      .value("DIACHRONOUS", IndicatorKind::Diachronous);

  py::class_<IndicatorSpec>(m, "IndicatorSpec")
      .def(py::init(&IndicatorSpec::make), py::arg("kind"), py::arg("n"), py::arg("year"), py::arg("s") = 0)
      .def_readonly("kind", &IndicatorSpec::kind)
      .def_readonly("n", &IndicatorSpec::n)
      .def_readonly("year", &IndicatorSpec::target_year)
      .def_readonly("s", &IndicatorSpec::s);

  py::class_<Injection>(m, "Injection")
      .def(py::init([](const std::vector<std::pair<Year, Count>>& adds) {
             std::vector<Addition> v;
             for (const auto& [y, k] : adds) v.push_back({y, k});
             return Injection(std::move(v));
           }),
           py::arg("additions") = std::vector<std::pair<Year, Count>>{})
      .def_property_readonly("additions", [](const Injection& inj) {
        std::vector<std::pair<Year, Count>> out;
        for (const auto& a : inj.additions()) out.emplace_back(a.year, a.k);
        return out;
      });

  m.def("sync_if_roa", &sync_if_roa, py::arg("data"), py::arg("year"), py::arg("n"));
  m.def("sync_if_aor", &sync_if_aor, py::arg("data"), py::arg("year"), py::arg("n"));
  m.def("diachronous_imp", &diachronous_imp, py::arg("data"), py::arg("year"), py::arg("n"), py::arg("s"));
  m.def("compute", &compute, py::arg("data"), py::arg("spec"));
  m.def("apply_injection", &apply_injection, py::arg("data"), py::arg("injection"));
  m.def("to_decimal", &to_decimal, py::arg("value"), py::arg("places") = 2);

  py::enum_<VerdictTag>(m, "VerdictTag")
      .value("PRESERVED", VerdictTag::Preserved)
      .value("REVERSED", VerdictTag::Reversed)
      .value("TIE_BEFORE", VerdictTag::TieBefore)
      .value("TIE_AFTER", VerdictTag::TieAfter);

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("tag", &Verdict::tag)
      .def_readonly("before", &Verdict::before)
      .def_readonly("after", &Verdict::after);

  py::class_<PairScenario>(m, "PairScenario")
      .def(py::init<JournalData, JournalData, IndicatorSpec, Injection>(), py::arg("left"),
           py::arg("right"), py::arg("spec"), py::arg("injection"))
      .def_readonly("left", &PairScenario::left)
      .def_readonly("right", &PairScenario::right)
      .def_readonly("spec", &PairScenario::spec)
      .def_readonly("injection", &PairScenario::injection);

  py::class_<ReversalWitness>(m, "ReversalWitness")
      .def_readonly("scenario", &ReversalWitness::scenario)
      .def_readonly("verdict", &ReversalWitness::verdict)
      .def("reverify", &reverify);

  m.def("check_z_consistency", &check_z_consistency, py::arg("scenario"));
  m.def("min_reversal_k", &min_reversal_k, py::arg("left"), py::arg("right"), py::arg("spec"),
        py::arg("target_year"), py::arg("k_max"));
  m.def("equal_pubs_preserved", &equal_pubs_preserved, py::arg("left"), py::arg("right"),
        py::arg("spec"), py::arg("injection"));

  m.def(
      "mine_counterexamples",
      [](IndicatorKind kind, int n, Count pub_max, Count cit_max, Count k_max, Year year, int s,
         bool equal_pubs, std::size_t limit, unsigned threads) {
        SearchBounds b{n, pub_max, cit_max, k_max, year, s, equal_pubs};
        py::gil_scoped_release release;
        return mine_counterexamples(kind, b, MineOptions{limit, threads});
      },
      py::arg("kind"), py::arg("n") = 2, py::arg("pub_max") = 4, py::arg("cit_max") = 8,
      py::arg("k_max") = 4, py::arg("year") = reference::kYear, py::arg("s") = 0,
      py::arg("equal_pubs") = false, py::arg("limit") = 10, py::arg("threads") = 0);

  py::class_<Corpus>(m, "Corpus")
      .def_readonly("journals", &Corpus::journals)
      .def_readonly("provenance", &Corpus::provenance)
      .def("to_json", [](const Corpus& c) { return to_json(c); })
      .def_static("from_json", [](const std::string& text) { return corpus_from_json(text); })
      .def("__eq__", [](const Corpus& a, const Corpus& b) { return a == b; });

  m.def("load_corpus", &load_corpus_files, py::arg("pubs_csv"), py::arg("cits_csv"));

  py::class_<RankingEntry>(m, "RankingEntry")
      .def_readonly("journal_id", &RankingEntry::journal_id)
      .def_readonly("value", &RankingEntry::value)
      .def_readonly("rank", &RankingEntry::rank)
      .def_readonly("tied_with", &RankingEntry::tied_with);

  py::class_<SensitivityRow>(m, "SensitivityRow")
      .def_readonly("upper_id", &SensitivityRow::upper_id)
      .def_readonly("lower_id", &SensitivityRow::lower_id)
      .def_readonly("per_year_min_k", &SensitivityRow::per_year_min_k)
      .def_readonly("k_max", &SensitivityRow::k_max);

  m.def(
      "rank",
      [](const Corpus& c, const IndicatorSpec& spec, bool strict) {
        const Ranking r = rank(c, spec, strict ? RankMode::Strict : RankMode::Skip);
        std::vector<std::pair<std::string, std::string>> skipped;
        for (const auto& s : r.skipped) skipped.emplace_back(s.journal_id, s.reason);
        return std::make_pair(r.entries, skipped);
      },
      py::arg("corpus"), py::arg("spec"), py::arg("strict") = true,
      "Returns (entries, skipped) where skipped lists (journal_id, reason).");
  m.def(
      "sensitivity_report",
      [](const Corpus& c, const IndicatorSpec& spec, Count k_max, bool strict) {
        return sensitivity_report(c, spec, k_max, strict ? RankMode::Strict : RankMode::Skip);
      },
      py::arg("corpus"), py::arg("spec"), py::arg("k_max") = 100, py::arg("strict") = true);

  m.def("reference_pairs", [] {
    return py::dict(py::arg("roa") = reference::roa_pair(),
                    py::arg("diachronous") = reference::diachronous_pair(),
                    py::arg("aor") = reference::aor_pair());
  });
  m.attr("REFERENCE_YEAR") = reference::kYear;
}
