"""Catalog enumeration and the verification suites."""

import pytest

from fanolines.catalog import build_catalog
from fanolines.checks import (
    classify_by_s,
    golden_suite,
    run_suite,
    verify_classification,
    verify_family_lemmas,
    verify_next_to_maximal,
)
from fanolines.dsl import to_text
from fanolines.errors import ValidationError
from fanolines.terms import dim, is_fano, normalize


# ---------------------------------------------------------------------------
# catalog contents

# Hand enumeration for n_max = 2, deg_max = 2, frozen before the build:
# dimension 1: P(1), Q(1); dimension 2: P(2), the quadric surface (canonical
# product form), the remaining degree-(1,2) and (2,2) products of two lines,
# the intersection of two quadrics in P^4, the quintic del Pezzo surface,
# and the scroll P(O(2) + O(1)).
CATALOG_2_2 = {
    "P(1)", "Q(1)",
    "P(2)", "Prod(P(1):1,P(1):1)", "Prod(P(1):1,P(1):2)", "Prod(P(1):2,P(1):2)",
    "CI(2,2;4)", "LS(G(2,5),4)", "PB(2,1)",
}


def test_catalog_2_2_exact_contents():
    cat = build_catalog(2, 2)
    assert {to_text(v) for v in cat} == CATALOG_2_2


def test_catalog_3_3_contains_the_expected_members():
    cat = build_catalog(3, 3)
    names = {to_text(v) for v in cat}
    for expected in ("CI(3;4)", "CI(2,2;5)", "CI(2,3;5)", "CI(2,2,2;6)",
                     "LS(G(2,5),3)", "Q(3)", "P(3)", "PB(2,1,1)", "PB(3,2,2)",
                     "CI(3;3)"):
        assert expected in names
    # dimension cap and Fano filter
    assert all(1 <= dim(v) <= 3 for v in cat)
    assert all(is_fano(v) for v in cat)


def test_catalog_members_are_canonical_and_sorted():
    cat = build_catalog(8, 3)
    assert all(v == normalize(v) for v in cat)
    names = [to_text(v) for v in cat]
    assert names == sorted(names)
    # duplicates under canonicalisation are gone
    assert "G(3,5)" not in names and "G(2,5)" in names
    assert "LS(G(2,5),0)" not in names and "LS(G(2,5),1)" not in names
    assert "SG(2,5)" in names
    assert "CI(2;4)" not in names and "Q(3)" in names


def test_catalog_is_deterministic():
    assert build_catalog(7, 3) == build_catalog(7, 3)


def test_catalog_rejects_tiny_bounds():
    with pytest.raises(ValidationError):
        build_catalog(1, 4)
    with pytest.raises(ValidationError):
        build_catalog(5, 1)


def test_catalog_contains_no_non_fano_scrolls():
    names = {to_text(v) for v in build_catalog(4, 4)}
    assert "PB(3,1,1)" not in names  # covered by lines but not Fano
    assert "PB(2,1,1)" in names


# ---------------------------------------------------------------------------
# classification queries


def test_classify_dimension_seven():
    cat = build_catalog(15, 4)
    members = {to_text(v) for v in classify_by_s(cat, 7, 3)}
    assert members == {"Q(7)", "SG(2,6)"}


def test_classify_dimension_three():
    cat = build_catalog(15, 4)
    members = {to_text(v) for v in classify_by_s(cat, 3, 1)}
    assert members == {"Q(3)", "CI(3;4)", "CI(2,2;5)", "LS(G(2,5),3)"}


def test_classify_dimension_four_merges_isomorphic_presentations():
    cat = build_catalog(12, 4)
    members = {to_text(v) for v in classify_by_s(cat, 4, 2)}
    assert members == {"Q(4)"}  # G(2,4) is the same member after rewriting


def test_classify_is_stable_under_catalog_enlargement():
    for n, s in ((7, 3), (3, 1), (4, 2), (5, 2)):
        small = {to_text(v) for v in classify_by_s(build_catalog(10, 4), n, s)}
        large = {to_text(v) for v in classify_by_s(build_catalog(15, 4), n, s)}
        assert small == large


# ---------------------------------------------------------------------------
# suites


@pytest.fixture(scope="module")
def cat15():
    return build_catalog(15, 4)


def test_classification_suite_passes(cat15):
    rep = verify_classification(cat15)
    assert rep.ok, [f.line() for f in rep.failures]
    checks = {r.check for r in rep.records}
    assert checks == {"classify.s-above-half", "classify.s-half",
                      "classify.s-below-half", "classify.trace"}
    # conjecture flags mark exactly the deep symplectic members
    flagged = {r.term for r in rep.records
               if r.check == "classify.trace" and r.data.get("conjecture_used")}
    assert flagged == {"SG(2,6)", "SG(2,7)", "SG(2,8)", "SG(2,9)", "SG(2,10)"}


def test_next_to_maximal_suite_passes(cat15):
    rep = verify_next_to_maximal(cat15)
    assert rep.ok, [f.line() for f in rep.failures]
    assert any(r.check == "next-to-max.form" for r in rep.records)
    assert any(r.check == "next-to-max.fano-inequality" for r in rep.records)
    assert any(r.check == "next-to-max.list-ii-realizes" for r in rep.records)


def test_family_lemmas_suite_passes(cat15):
    rep = verify_family_lemmas(cat15)
    assert rep.ok, [f.line() for f in rep.failures]
    assert rep.counters["proper_linear_triggered"] == 0
    assert rep.counters["proper_linear_vacuous"] > 0
    checks = {r.check for r in rep.records}
    assert "families.nondegenerate" in checks
    assert "covering.half-dim-list" in checks
    assert "families.dimH-is-n-2" in checks


def test_golden_suite_passes():
    rep = golden_suite(40, 15)
    assert rep.ok, [f.line() for f in rep.failures]
    assert len(rep.records) == 2 * 40 + 2 * 14  # P/Q rows plus G/SG rows


def test_run_suite_dispatch():
    assert run_suite("golden", 10, 4).ok
    assert run_suite("thm1", 8, 3).ok
    assert run_suite("prop32", 8, 3).ok
    assert run_suite("lemmas", 8, 3).ok


def test_suites_catch_wrong_values(cat15):
    # Teeth check: a poisoned memo entry must surface as a recorded failure,
    # not vanish into a green report.
    from fanolines.chains import ChainEngine
    from fanolines.chains import SValue
    from fanolines.terms import Quadric, normalize

    eng = ChainEngine()
    eng._s_memo[normalize(Quadric(7))] = SValue("exact", 4)  # true value is 3
    rep = verify_classification(cat15, eng)
    assert not rep.ok
    assert any(r.term == "Q(7)" for r in rep.failures)

    # an engine whose memo contradicts its own chains must be reported as a
    # trace failure, never crash the sweep: Q(9) keeps its correct value but
    # the tower below it is cut, so no chain realizes the claimed invariant
    eng = ChainEngine()
    eng._s_memo[normalize(Quadric(9))] = SValue("exact", 4)
    eng._s_memo[normalize(Quadric(7))] = SValue("exact", 0)
    rep = verify_classification(cat15, eng)
    assert not rep.ok
    assert any(r.term == "Q(9)" and "aborted" in r.detail for r in rep.failures)


def test_report_serialization_shape(cat15):
    rep = verify_family_lemmas(cat15)
    doc = rep.as_dict()
    assert doc["suite"] == "lemmas"
    assert doc["failed"] == 0
    assert doc["passed"] == len([r for r in rep.records if r.passed])
    assert {r["check"] for r in doc["records"]} == {r.check for r in rep.records}
    text = rep.to_text()
    assert text.splitlines()[0].startswith("suite lemmas")
    # one line per record, order independent of insertion order
    assert len(text.splitlines()) == 1 + len(rep.records)
