# tests/test_analyzer.py
from fractions import Fraction

from lxml import etree

from cones import Cone, equal
from core.config import Settings, TOverride
from services import QuotAnalyzer
from services.quot import HYPOTHESIS_FLAGS
from services.quot.quot_analyzer import FLAG_CONJECTURAL_T_REFUSED, FLAG_T_UNKNOWN
from services.quot.theorems import FLAG_USER_SUPPLIED_T, THEOREM_D2, THEOREM_GENUS0
from services.rendering import parse_report, render_svg, render_table, render_tikz, report_to_json, to_decimal_string
from services.rendering.report_formatter import report_to_table


def test_report_for_genus_two_length_two():
    analyzer = QuotAnalyzer(2, 2, n=2)
    report = analyzer.analyze()
    assert report["theorem"] == THEOREM_D2
    assert report["flags"] == []
    assert not QuotAnalyzer.needs_attention(report)
    expected = Cone([[1, 3, Fraction(-3, 4)], [0, 4, -1], [0, 0, 1]])
    assert equal(Cone.from_dict(report["exact"]), expected)
    assert report["picture"]["tau"] == "2/3"


def test_report_flags_unknown_t():
    report = QuotAnalyzer(7, 2, n=3).analyze()
    assert report["exact"] is None
    assert FLAG_T_UNKNOWN in report["flags"]
    assert QuotAnalyzer.needs_attention(report)


def test_report_refuses_unproven_t_without_opt_in():
    overrides = {7: TOverride(7, Fraction(7, 3), "user-supplied")}
    report = QuotAnalyzer(7, 2, n=3, settings=Settings(t_overrides=overrides)).analyze()
    assert report["exact"] is None
    assert FLAG_CONJECTURAL_T_REFUSED in report["flags"]

    allowed = Settings(t_overrides=overrides, allow_conjectural_t=True)
    report = QuotAnalyzer(7, 2, n=3, settings=allowed).analyze()
    assert report["conditional"] is True
    assert FLAG_USER_SUPPLIED_T in report["flags"]
    assert not HYPOTHESIS_FLAGS.intersection(report["flags"])


def test_genus_zero_report():
    report = QuotAnalyzer(0, 3, splitting=(-1, 2)).analyze()
    assert report["theorem"] == THEOREM_GENUS0
    assert report["upper"] == report["lower"] == report["exact"]
    assert equal(Cone.from_dict(report["exact"]), Cone([[1, 3], [0, 1]]))
    assert report["picture"] is None and report["boundary"] == []


def test_report_json_round_trip():
    for g, d, n in [(2, 2, 2), (1, 3, 1), (3, 4, 2), (2, 1, 3)]:
        report = QuotAnalyzer(g, d, n=n).analyze()
        assert parse_report(report_to_json(report)) == report
        assert "frame" in report_to_table(report)


def test_svg_is_deterministic_and_well_formed():
    picture = QuotAnalyzer(2, 5, n=2).picture
    first, second = render_svg(picture), render_svg(picture)
    assert first == second
    root = etree.fromstring(first.encode("utf-8"))
    ids = {el.get("id") for el in root.iter() if el.get("id")}
    assert {"upper", "lower", "legend", "point-A", "point-D", "point-E"} <= ids
    assert "tau = 2/3" in first


def test_svg_places_e_on_a_at_length_two():
    root = etree.fromstring(render_svg(QuotAnalyzer(2, 2, n=2).picture).encode("utf-8"))
    circles = {el.get("id"): (el.get("cx"), el.get("cy")) for el in root.iter("{http://www.w3.org/2000/svg}circle")}
    assert circles["point-E"] == circles["point-A"] == ("300.000000", "60.000000")


def test_text_renderers():
    picture = QuotAnalyzer(1, 3, n=2).picture
    assert "Δ_d/2 = L₀" in render_table(picture)
    tikz = render_tikz(picture)
    assert tikz.startswith("% nef cone cross-section")
    assert "\\coordinate (E)" in tikz


def test_decimal_rendering_rounds_half_even():
    assert to_decimal_string(Fraction(1, 3)) == "0.333333"
    assert to_decimal_string(Fraction(5, 10**7)) == "0.000000"
    assert to_decimal_string(Fraction(15, 10**7)) == "0.000002"
    assert to_decimal_string(Fraction(-1, 10**9)) == "0.000000"
