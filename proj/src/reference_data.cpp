#include "ifaudit/reference_data.hpp"

#include <array>

#include "ifaudit/consistency.hpp"

namespace ifaudit::reference {

std::pair<JournalData, JournalData> roa_pair(Year y) {
  JournalData j("J");
  j.set_pubs(y - 1, 10).set_pubs(y - 2, 10).set_cits(y, y - 1, 30).set_cits(y, y - 2, 30);
  JournalData jp("J'");
  jp.set_pubs(y - 1, 30).set_pubs(y - 2, 30).set_cits(y, y - 1, 60).set_cits(y, y - 2, 60);
  return {j, jp};
}

std::pair<JournalData, JournalData> diachronous_pair(Year y) {
  JournalData j("J");
  j.set_pubs(y, 20).set_cits(y, y, 10).set_cits(y + 1, y, 20).set_cits(y + 2, y, 30);
  JournalData jp("J'");
  jp.set_pubs(y, 60).set_cits(y, y, 20).set_cits(y + 1, y, 40).set_cits(y + 2, y, 60);
  return {j, jp};
}

std::pair<JournalData, JournalData> aor_pair(Year y) {
  JournalData j("J");
  j.set_pubs(y - 1, 30).set_pubs(y - 2, 20).set_cits(y, y - 1, 10).set_cits(y, y - 2, 80);
  JournalData jp("J'");
  jp.set_pubs(y - 1, 30).set_pubs(y - 2, 20).set_cits(y, y - 1, 120).set_cits(y, y - 2, 10);
  return {j, jp};
}

}  // namespace ifaudit::reference

namespace ifaudit::reference {
namespace {

void add_value(std::vector<ReferenceCheck>& out, std::string label, const Ratio& value,
               const Ratio& expected, const std::string& expected_shown) {
  const std::string shown = to_decimal(value, 2);
  out.push_back({std::move(label), value.str(), shown,
                 expected.str() + " (" + expected_shown + ")",
                 value == expected && shown == expected_shown});
}

void add_scenario(std::vector<ReferenceCheck>& out, const std::string& name,
                  const std::pair<JournalData, JournalData>& pair, const IndicatorSpec& spec,
                  const Injection& injection, const std::array<Ratio, 4>& expected,
                  const std::array<const char*, 4>& shown, const std::string& inj_label) {
  const Verdict v = check_z_consistency(PairScenario{pair.first, pair.second, spec, injection});
  add_value(out, name + " J", v.before.first, expected[0], shown[0]);
  add_value(out, name + " J'", v.before.second, expected[1], shown[1]);
  add_value(out, name + " J " + inj_label, v.after.first, expected[2], shown[2]);
  add_value(out, name + " J' " + inj_label, v.after.second, expected[3], shown[3]);
  const std::string tag(to_string(v.tag));
  out.push_back({name + " verdict " + inj_label, tag, tag, "REVERSED", v.tag == VerdictTag::Reversed});
}

}  // namespace

std::vector<ReferenceCheck> run_reference_checks(Year y) {
  std::vector<ReferenceCheck> out;
  add_scenario(out, "sync-roa n=2", roa_pair(y), IndicatorSpec::sync_roa(y, 2),
               Injection::single(y - 1, 25),
               {Ratio(3, 1), Ratio(2, 1), Ratio(60, 45), Ratio(120, 85)},
               {"3.00", "2.00", "1.33", "1.41"}, "+25 uncited");
  add_scenario(out, "diachronous n=3 s=0", diachronous_pair(y), IndicatorSpec::diachronous(y, 3, 0),
               Injection::single(y, 25),
               {Ratio(3, 1), Ratio(2, 1), Ratio(60, 45), Ratio(120, 85)},
               {"3.00", "2.00", "1.33", "1.41"}, "+25 uncited");
  add_scenario(out, "sync-aor n=2", aor_pair(y), IndicatorSpec::sync_aor(y, 2),
               Injection::single(y - 1, 10),
               {Ratio(13, 6), Ratio(9, 4), Ratio(17, 8), Ratio(7, 4)},
               {"2.17", "2.25", "2.13", "1.75"}, "+10 uncited at Y-1");
  return out;
}

}  // namespace ifaudit::reference
