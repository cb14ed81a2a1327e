import pytest

import ifaudit as ia

Y = ia.REFERENCE_YEAR


def test_roa_example_reverses():
    j, jp = ia.reference_pairs()["roa"]
    spec = ia.IndicatorSpec(ia.IndicatorKind.SYNC_ROA, 2, Y)
    v = ia.check_z_consistency(ia.PairScenario(j, jp, spec, ia.Injection([(Y - 1, 25)])))
    assert v.tag == ia.VerdictTag.REVERSED
    assert v.before == (ia.Ratio(3), ia.Ratio(2))
    assert v.after == (ia.Ratio(4, 3), ia.Ratio(24, 17))
    assert v.after[0].to_decimal(2) == "1.33"
    assert ia.min_reversal_k(j, jp, spec, Y - 1, 100) == 21


def test_aor_values_and_rounding():
    j, jp = ia.reference_pairs()["aor"]
    assert str(ia.sync_if_aor(j, Y, 2)) == "13/6"
    diluted = ia.apply_injection(j, ia.Injection([(Y - 1, 10)]))
    assert ia.to_decimal(ia.sync_if_aor(diluted, Y, 2), 2) == "2.13"


def test_errors_are_python_exceptions():
    with pytest.raises(ia.ZeroDenominator):
        ia.sync_if_roa(ia.JournalData("empty"), Y, 2)
    with pytest.raises(ia.Error):
        ia.JournalData("x").set_cits(Y - 1, Y, 1)


def test_miner_witnesses_reverify():
    ws = ia.mine_counterexamples(ia.IndicatorKind.SYNC_AOR, pub_max=4, cit_max=8, k_max=4, limit=3)
    assert len(ws) == 3
    assert all(w.reverify() and w.verdict.tag == ia.VerdictTag.REVERSED for w in ws)
    assert not ia.mine_counterexamples(ia.IndicatorKind.SYNC_ROA, pub_max=3, cit_max=5, k_max=3,
                                       equal_pubs=True, limit=5)


def test_corpus_rank_and_roundtrip(tmp_path):
    pubs = tmp_path / "pubs.csv"
    cits = tmp_path / "cits.csv"
    pubs.write_text("journal,year,pubs\nJ,2009,10\nJ,2008,10\nJ',2009,30\nJ',2008,30\n")
    cits.write_text("journal,citing_year,cited_year,count\nJ,2010,2009,30\nJ,2010,2008,30\n"
                    "J',2010,2009,60\nJ',2010,2008,60\n")
    corpus = ia.load_corpus(str(pubs), str(cits))
    entries, skipped = ia.rank(corpus, ia.IndicatorSpec(ia.IndicatorKind.SYNC_ROA, 2, 2010))
    assert [(e.journal_id, e.rank) for e in entries] == [("J", 1), ("J'", 2)]
    assert skipped == []
    assert ia.Corpus.from_json(corpus.to_json()) == corpus
    rows = ia.sensitivity_report(corpus, ia.IndicatorSpec(ia.IndicatorKind.SYNC_ROA, 2, 2010), 100)
    assert rows[0].per_year_min_k == {2008: 21, 2009: 21}
