"""Chain invariant, witness chains, trees, and covering bounds."""

import pytest

from fanolines.chains import (
    ChainEngine,
    SValue,
    covering_ls_bound,
    s_invariant,
    witness_chain,
)
from fanolines.dsl import parse_variety, to_text
from fanolines.errors import NotCoveredByLines
from fanolines.terms import (
    CompleteIntersection,
    Grassmann,
    LinearSectionG25,
    LinearSpace,
    Point,
    PolarizedProduct,
    Quadric,
    SympGrassmann,
    dim,
    normalize,
)


def exact(value):
    return SValue("exact", value)


# ---------------------------------------------------------------------------
# values


@pytest.mark.parametrize(
    "expr, expected",
    [
        ("P(5)", exact(5)),
        ("P(1)", exact(1)),
        ("pt", exact(0)),
        ("Q(2)", exact(1)),
        ("Q(7)", exact(3)),
        ("Q(40)", exact(20)),
        ("G(2,4)", exact(2)),
        ("G(2,6)", exact(4)),
        ("SG(2,5)", exact(2)),
        ("SG(2,7)", exact(4)),
        ("CI(2,2;7)", exact(1)),
        ("CI(3;4)", exact(1)),
        ("CI(2,2;5)", exact(1)),
        ("CI(2,2;4)", exact(0)),
        ("LS(G(2,5),3)", exact(1)),
        ("Prod(P(1):1,P(3):1)", exact(3)),
        ("Prod(P(1):2,P(3):1)", exact(3)),
        ("Prod(P(1):1,P(1):1,P(1):1)", exact(1)),
        ("PB(2,1,1)", exact(2)),
        ("PB(5,4,4,4)", exact(3)),
        ("Q(1)", exact(0)),
        ("LS(G(2,5),4)", exact(0)),
    ],
)
def test_s_values(expr, expected):
    assert s_invariant(parse_variety(expr)) == expected


def test_s_two_quadrics_in_p9_frozen_chain():
    # Hand-applied rewrite chain, frozen: CI(2,2;P^9) has families CI(2,2;P^6)
    # then CI(2,2;P^3), an elliptic curve not covered by lines.
    eng = ChainEngine()
    assert eng.s_invariant(CompleteIntersection((2, 2), 9)) == exact(2)
    assert eng.witness_chain(CompleteIntersection((2, 2), 9)) == [
        CompleteIntersection((2, 2), 9),
        CompleteIntersection((2, 2), 6),
        CompleteIntersection((2, 2), 3),
    ]


def test_s_lower_bounds_on_ruleless_terms():
    assert s_invariant(SympGrassmann(3, 7)) == SValue("at_least", 1)
    assert s_invariant(LinearSectionG25(2)) == SValue("at_least", 1)


def test_s_bounded_by_dim_with_equality_only_for_linear_spaces():
    for expr in ("P(6)", "Q(6)", "G(2,5)", "SG(2,6)", "CI(2,3;9)",
                 "Prod(P(2):1,P(3):1)", "PB(3,2,2)", "LS(G(2,5),3)"):
        term = parse_variety(expr)
        sv = s_invariant(term)
        assert sv.value <= dim(term)
        if sv.is_exact and sv.value == dim(term):
            assert isinstance(normalize(term), LinearSpace)


# ---------------------------------------------------------------------------
# witness chains


@pytest.mark.parametrize(
    "expr, chain",
    [
        ("Q(7)", ["Q(7)", "Q(5)", "Q(3)", "Q(1)"]),
        ("SG(2,6)", ["SG(2,6)", "PB(2,1,1)", "P(1)", "pt"]),
        ("G(2,6)", ["G(2,6)", "Prod(P(1):1,P(3):1)", "P(2)", "P(1)", "pt"]),
        ("P(3)", ["P(3)", "P(2)", "P(1)", "pt"]),
        ("CI(2,2;7)", ["CI(2,2;7)", "CI(2,2;4)"]),
        ("Q(2)", ["Q(2)", "pt"]),
    ],
)
def test_witness_chains(expr, chain):
    got = witness_chain(parse_variety(expr))
    assert [to_text(t) for t in got] == chain


def test_witness_chain_length_matches_exact_s():
    for expr in ("P(9)", "Q(11)", "G(2,7)", "SG(2,8)", "CI(2,2;9)",
                 "Prod(P(1):3,P(4):1)", "PB(2,1,1,1)"):
        term = parse_variety(expr)
        sv = s_invariant(term)
        assert sv.is_exact
        assert len(witness_chain(term)) - 1 == sv.value


def test_witness_chain_requires_coverage():
    with pytest.raises(NotCoveredByLines):
        witness_chain(Point())
    with pytest.raises(NotCoveredByLines):
        witness_chain(Quadric(1))


def test_witness_chain_stops_at_ruleless_terms():
    assert witness_chain(LinearSectionG25(2)) == [LinearSectionG25(2)]


# ---------------------------------------------------------------------------
# chain trees


def test_chain_tree_depth_equals_exact_s():
    eng = ChainEngine()
    for expr in ("Q(7)", "G(2,6)", "CI(2,2;7)", "Prod(P(2):1,P(3):1)", "SG(2,9)"):
        term = parse_variety(expr)
        tree = eng.chain_tree(term)
        assert tree.depth() == eng.s_invariant(term).value


def test_chain_tree_terminal_reasons():
    eng = ChainEngine()
    assert eng.chain_tree(Point()).terminal_reason == "is_point"
    assert eng.chain_tree(Quadric(1)).terminal_reason == "not_covered"
    assert eng.chain_tree(SympGrassmann(3, 7)).terminal_reason == "no_rule"
    tree = eng.chain_tree(Quadric(5))
    assert tree.terminal_reason is None
    assert len(tree.children) == 1
    # leaf of the quadric tower is the conic
    leaf = tree
    while leaf.children:
        leaf = leaf.children[0][1]
    assert leaf.node == Quadric(1)
    assert leaf.terminal_reason == "not_covered"


def test_product_tree_branches_per_degree_one_factor():
    eng = ChainEngine()
    tree = eng.chain_tree(PolarizedProduct(((2, 1), (3, 1))))
    assert len(tree.children) == 2
    assert {to_text(fam.variety) for fam, _ in tree.children} == {"P(1)", "P(2)"}


def test_realizing_chains_enumerate_every_maximal_branch():
    eng = ChainEngine()
    # both rulings of the quadric surface realize the invariant of G(2,4)
    chains = eng.realizing_chains(parse_variety("G(2,4)"))
    assert len(chains) == 2
    assert all(len(c) - 1 == eng.s_invariant(parse_variety("G(2,4)")).value
               for c in chains)
    # only the deeper factor of an asymmetric product realizes it
    chains = eng.realizing_chains(parse_variety("Prod(P(2):1,P(3):1)"))
    assert [[to_text(t) for t in c] for c in chains] == [
        ["Prod(P(2):1,P(3):1)", "P(2)", "P(1)", "pt"]
    ]


# ---------------------------------------------------------------------------
# covering bounds


@pytest.mark.parametrize(
    "expr, bound",
    [
        ("CI(2,2;7)", 2),  # strictly above the chain invariant
        ("Q(6)", 3),
        ("P(4)", 4),
        ("G(2,6)", 4),
        ("SG(2,6)", 3),
        ("pt", 0),
        ("CI(3;4)", 1),
    ],
)
def test_covering_bounds(expr, bound):
    got = covering_ls_bound(parse_variety(expr))
    assert got.kind == "at_least"
    assert got.value == bound


def test_covering_bound_dominates_s_over_a_catalog():
    from fanolines.catalog import build_catalog

    eng = ChainEngine()
    gap_witnessed = False
    for member in build_catalog(10, 4):
        s = eng.s_invariant(member).value
        bound = eng.covering_ls_bound(member).value
        assert bound >= s
        if bound > s:
            gap_witnessed = True
    assert gap_witnessed  # e.g. the intersection of two quadrics in P^7


# ---------------------------------------------------------------------------
# isomorphism consistency through independent rule paths


def test_cross_rule_grassmann_vs_quadric():
    left, right = Grassmann(2, 4), Quadric(4)
    assert ChainEngine().s_invariant(left) == ChainEngine().s_invariant(right) == exact(2)


def test_cross_rule_hyperplane_section_vs_symplectic():
    left, right = LinearSectionG25(1), SympGrassmann(2, 5)
    assert ChainEngine().s_invariant(left) == ChainEngine().s_invariant(right) == exact(2)


def test_memo_is_keyed_on_normal_forms():
    eng = ChainEngine()
    a = eng.s_invariant(Grassmann(2, 4))
    b = eng.s_invariant(Quadric(4))
    assert a is b  # the second call is a memo hit


def test_ruleless_branch_degrades_to_lower_bound(monkeypatch):
    # White box: inject a ruleless sibling whose dimension cap exceeds the
    # best exact branch; exactness must be given up.
    import fanolines.chains as chains_mod
    from fanolines.families import FamilyRecord, line_families as real_families

    parent = Quadric(9)

    def fake_families(v):
        if v == parent:
            return [FamilyRecord(Quadric(7), 8, 8),
                    FamilyRecord(LinearSectionG25(2), 8, 8)]
        return real_families(v)

    monkeypatch.setattr(chains_mod, "line_families", fake_families)
    sv = chains_mod.ChainEngine().s_invariant(parent)
    # exact branch gives 1 + 3 = 4; the ruleless one could reach 1 + 4 = 5
    assert sv == SValue("at_least", 4)


def test_ruleless_branch_below_the_cap_keeps_exactness(monkeypatch):
    # The cap rule: a ruleless branch cannot beat an exact branch that
    # already meets its dimension bound, so the result stays exact.
    import fanolines.chains as chains_mod
    from fanolines.errors import NoRule
    from fanolines.families import FamilyRecord, line_families as real_families

    parent = Quadric(9)
    ruleless = LinearSpace(3)  # not on the quadric tower, so only this
    # branch is affected by the injection

    def fake_families(v):
        if v == parent:
            return [FamilyRecord(Quadric(7), 8, 8), FamilyRecord(ruleless, 8, 8)]
        if v == ruleless:
            raise NoRule("injected")
        return real_families(v)

    monkeypatch.setattr(chains_mod, "line_families", fake_families)
    sv = chains_mod.ChainEngine().s_invariant(parent)
    # the ruleless branch is capped by 1 + dim = 4 = the exact branch value
    assert sv == SValue("exact", 4)


def test_concurrent_queries_agree_with_serial_ones():
    from concurrent.futures import ThreadPoolExecutor

    from fanolines.catalog import build_catalog

    members = build_catalog(9, 3).members
    serial = [ChainEngine().s_invariant(v) for v in members]
    shared = ChainEngine()
    with ThreadPoolExecutor(max_workers=8) as pool:
        concurrent = list(pool.map(shared.s_invariant, members))
    assert concurrent == serial


def test_s_invariant_under_normalize_with_fresh_engines():
    for expr in ("G(3,5)", "CI(2;7)", "Q(2)", "PB(2,2,2)", "LS(G(2,5),0)",
                 "LS(G(2,5),1)", "G(2,4)", "PB(1,1,1,1)"):
        term = parse_variety(expr)
        raw = ChainEngine().s_invariant(term)
        canon = ChainEngine().s_invariant(normalize(term))
        assert raw == canon
