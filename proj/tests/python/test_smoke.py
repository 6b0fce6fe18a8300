import os
import subprocess
from fractions import Fraction

import pytest

import lcsurf


def test_presets_listed():
    assert set(lcsurf.preset_names()) == {"ex12_3", "ex12_3_w", "ex12_4", "ex12_5"}


def test_classify_example_12_3():
    s = lcsurf.Surface.preset("ex12_3")
    points = s.classify()["points"]
    assert [(p["members"], p["status"]) for p in points] == [
        (["C1'"], "lc_simple_elliptic"),
        (["C2'"], "lc_simple_elliptic"),
        (["l"], "dlt_rational"),
    ]
    assert points[0]["discrepancies"] == [Fraction(-1)]
    assert points[2]["discrepancies"] == [Fraction(0)]


def test_pullback_and_intersection_are_exact():
    doc = """
[curves]
E1 0 0
E2 0 0
C 0 0
D 0 0
[matrix]
-2 1 1 0
1 -3 0 1
1 0 -1 0
0 1 0 -1
[clusters]
E1 E2
"""
    s = lcsurf.Surface.from_document(doc)
    pb = s.pullback("C")
    assert pb["E1"] == Fraction(3, 5)
    assert pb["E2"] == Fraction(1, 5)
    assert s.intersect("C", "C") == Fraction(-1) + Fraction(3, 5)
    assert s.intersect({"C": Fraction(1, 2)}, "C") == s.intersect("C", "C") / 2
    assert s.classify()["points"][0]["discrepancies"] == [Fraction(-1, 5), Fraction(-2, 5)]


def test_mmp_and_contract():
    s = lcsurf.Surface.preset("ex12_5", rho=4)
    trace = s.mmp()
    assert trace["contracted"] == ["B1", "B2", "B3"]
    assert trace["endpoint"] == "minimal_nef_on_list"

    w = lcsurf.Surface.preset("ex12_3_w")
    assert w.mmp()["contracted"] == ["E1", "E2"]
    assert w.mmp(support=["E1"])["endpoint"] == "exhausted_candidates"
    cert, v = w.contract("E1")
    assert cert["self_int"] == -1 and cert["kdelta_deg"] == -1
    assert v.name == "ex12_3_w/E1"
    assert ["E1"] in v.clusters


def test_picard_and_nef():
    assert lcsurf.Surface.preset("ex12_3").picard()["rank"] == 0
    p = lcsurf.Surface.preset("ex12_4").picard()
    assert p["rank"] == 1
    assert p["generators"][0]["P"] == 1 and p["generators"][0]["E1"] == -1
    s = lcsurf.Surface.preset("ex12_4")
    assert s.nef_cone(["l"], tests=["l", "E1"])["is_zero"]
    assert not s.nef_cone(["l", "E1"], tests=["l", "E1"])["is_zero"]
    assert not s.nef_cone(["l", "E1"], tests=[])["is_zero"]
    assert lcsurf.Surface.preset("ex12_3_w").nef_report()["nef_on_list"] is False


def test_check_vanishing():
    w = lcsurf.Surface.preset("ex12_3_w")
    v = w.check_vanishing({"E1": 0})
    assert v["rows"][0]["quantity"] == 1 and v["holds"]
    strict = w.check_vanishing({"l": 0}, variant=1)
    assert not strict["holds"] and strict["conclusion"] == "no conclusion"


def test_document_round_trip():
    for name in lcsurf.preset_names():
        s = lcsurf.Surface.preset(name)
        again = lcsurf.Surface.from_document(s.to_document())
        assert again.to_document() == s.to_document()


def test_errors_carry_kind_and_line():
    with pytest.raises(lcsurf.LcsurfError) as e:
        lcsurf.Surface.from_document("[curves]\nA 0 0\nB 0 0\n[matrix]\n-2 1\n1\n")
    assert e.value.kind == "ParseError" and e.value.line == 6
    w = lcsurf.Surface.preset("ex12_3_w")
    with pytest.raises(lcsurf.LcsurfError) as e:
        w.contract("F")
    assert e.value.kind == "RejectNonNegativeSelfInt"
    with pytest.raises(lcsurf.LcsurfError) as e:
        lcsurf.Surface.preset("ex12_3").pullback("l")
    assert e.value.kind == "NotNonExceptional"


@pytest.mark.skipif("LCSURF_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_pipeline():
    cli = os.environ["LCSURF_CLI"]
    doc = subprocess.run([cli, "preset", "ex12_3"], check=True, capture_output=True, text=True).stdout
    out = subprocess.run([cli, "classify"], input=doc, check=True, capture_output=True, text=True).stdout
    assert out.splitlines()[1:4] == [
        "{C1'}\t(-1)\tlc_simple_elliptic\ttrue",
        "{C2'}\t(-1)\tlc_simple_elliptic\ttrue",
        "{l}\t(0)\tdlt_rational\ttrue",
    ]
    bad = subprocess.run([cli, "frobnicate"], capture_output=True, text=True)
    assert bad.returncode == 2 and bad.stderr.startswith("error: {")
