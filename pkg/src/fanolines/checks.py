"""Verification suites over exhaustive catalogs.

Each suite checks an implication for every qualifying catalog member and
reports one record per member and check.  The suites verify that no member
VIOLATES a classification; completeness of the classification lists is a
mathematical fact outside any enumeration and is never claimed.
"""

from __future__ import annotations

from .catalog import Catalog
from .chains import ChainEngine, default_engine
from .dsl import to_text
from .errors import EngineError, NoRule, NotCoveredByLines
from .families import line_families
from .reports import SuiteReport
from .terms import (
    CompleteIntersection,
    Grassmann,
    LinearSectionG25,
    LinearSpace,
    PolarizedProduct,
    ProjBundleP1,
    Quadric,
    SympGrassmann,
    VarietyTerm,
    dim,
    family_dim,
    max_linear_in,
    normalize,
    picard_number,
)
from .trace import classification_trace


def classify_by_s(cat: Catalog, n: int, s: int,
                  engine: ChainEngine | None = None) -> list[VarietyTerm]:
    """Catalog members of dimension n, Picard number 1 and exact invariant s."""
    eng = engine or default_engine()
    out = []
    for v in cat:
        if dim(v) != n or picard_number(v) != 1:
            continue
        sv = eng.s_invariant(v)
        if sv.is_exact and sv.value == s:
            out.append(v)
    return out


# ---------------------------------------------------------------------------
# the classification by large chain invariant


def verify_classification(cat: Catalog, engine: ChainEngine | None = None) -> SuiteReport:
    """Classification sweep for members whose invariant is at least half the
    dimension.

    For every member with Picard number 1, dimension >= 2 and an exact
    invariant S: 2S > n forces a linear space; 2S = n forces a quadric or
    G(2, C^{m+2}); 2S = n-1 forces membership of the odd-dimensional list,
    and the case-analysis trace must reproduce the member's verdict letter.
    """
    eng = engine or default_engine()
    rep = SuiteReport("thm1", {"n_max": cat.n_max, "deg_max": cat.deg_max})
    for v in cat:
        n = dim(v)
        if n < 2:
            rep.bump("skipped_dim_lt_2")
            continue
        if picard_number(v) != 1:
            rep.bump("skipped_rho_ne_1")
            continue
        sv = eng.s_invariant(v)
        if not sv.is_exact:
            rep.bump("skipped_inexact_s")
            continue
        s = sv.value
        name = to_text(v)
        if 2 * s > n:
            rep.add(name, "classify.s-above-half", isinstance(v, LinearSpace),
                    f"2S = {2*s} > n = {n} must force a linear space")
        elif 2 * s == n:
            m = n // 2
            allowed = {normalize(Quadric(n)), normalize(Grassmann(2, m + 2))}
            ok = v in allowed and n >= 4
            rep.add(name, "classify.s-half", ok,
                    f"2S = n = {n}: quadric or G(2,C^{m+2}) required")
        elif 2 * s == n - 1:
            m = s
            allowed = {normalize(Quadric(n))}
            if m >= 2:  # SG(2,C^4) does not exist separately; it is Q^3
                allowed.add(normalize(SympGrassmann(2, m + 3)))
            if m == 1:
                allowed |= {
                    CompleteIntersection((3,), 4),
                    CompleteIntersection((2, 2), 5),
                    LinearSectionG25(3),
                }
            rep.add(name, "classify.s-below-half", v in allowed,
                    f"2S = n - 1 = {n - 1}: odd-dimensional list required",
                    conjecture_dependent=isinstance(v, SympGrassmann))
            try:
                trace = classification_trace(v, eng)
            except EngineError as err:
                rep.add(name, "classify.trace", False, f"trace aborted: {err}")
            else:
                rep.add(name, "classify.trace",
                        _verdict_matches(trace.verdict, v, m),
                        f"trace verdict ({trace.verdict}) via {trace.case_tag}",
                        conjecture_used=trace.conjecture_used)
        else:
            rep.bump("no_implication")
    return rep


def _verdict_matches(verdict: str, v: VarietyTerm, m: int) -> bool:
    if verdict == "a":
        expected = normalize(Quadric(2 * m + 1))
    elif verdict == "b":
        expected = normalize(SympGrassmann(2, m + 3))
    elif verdict == "c":
        expected = CompleteIntersection((3,), 4)
    elif verdict == "d":
        expected = CompleteIntersection((2, 2), 5)
    else:
        expected = LinearSectionG25(3)
    return expected == normalize(v)


# ---------------------------------------------------------------------------
# next-to-maximal invariant


def _next_to_max_form(v: VarietyTerm) -> bool:
    """Is v one of the two S = dim - 1 families, in normal form?"""
    n = dim(v)
    match v:
        case PolarizedProduct(factors) if len(factors) == 2:
            a, b = factors
            for first, second in ((a, b), (b, a)):
                if first == (n - 1, 1) and second[0] == 1 and second[1] >= 1:
                    return True
            return False
        case ProjBundleP1(twists):
            d = twists[-1]
            return twists == (d + 1,) + (d,) * (n - 1)
        case _:
            return False


def verify_next_to_maximal(cat: Catalog, engine: ChainEngine | None = None) -> SuiteReport:
    """Members with S = dim - 1 are exactly the two bundle families.

    Checks both directions at catalog scale: every member with exact
    S = dim - 1 >= 1 normalizes into list (i), the product (P^1 x P^{n-1},
    O(d,1)), or list (ii), the scroll P(O(d+1) + O(d)^{n-1}); and every list
    member realizes S = dim - 1.  List-(ii) members must also pass the Fano
    twist inequality.
    """
    eng = engine or default_engine()
    rep = SuiteReport("prop32", {"n_max": cat.n_max, "deg_max": cat.deg_max})
    for v in cat:
        n = dim(v)
        sv = eng.s_invariant(v)
        if not (sv.is_exact and sv.value == n - 1 >= 1):
            continue
        name = to_text(v)
        rep.add(name, "next-to-max.form", _next_to_max_form(v),
                "S = dim - 1 must normalize into list (i) or (ii)")
        if isinstance(v, ProjBundleP1):
            tw = v.twists
            rep.add(name, "next-to-max.fano-inequality",
                    sum(tw) <= len(tw) * tw[-1] + 1,
                    "sum of twists <= k * min + 1")
    for n in range(2, cat.n_max + 1):
        for d in range(1, cat.deg_max + 1):
            member_i = PolarizedProduct(((1, d), (n - 1, 1)))
            sv = eng.s_invariant(member_i)
            rep.add(to_text(member_i), "next-to-max.list-i-realizes",
                    sv.is_exact and sv.value == n - 1,
                    f"expected exact S = {n - 1}, got {sv}")
            member_ii = ProjBundleP1((d + 1,) + (d,) * (n - 1))
            sv = eng.s_invariant(member_ii)
            rep.add(to_text(member_ii), "next-to-max.list-ii-realizes",
                    sv.is_exact and sv.value == n - 1,
                    f"expected exact S = {n - 1}, got {sv}")
    return rep


# ---------------------------------------------------------------------------
# family implications and the covering-linear-space list


def _sato_member(v: VarietyTerm, m_star: int) -> bool:
    """Membership of the covered-by-half-dimensional-linear-spaces list:
    a linear bundle, an even quadric, or a two-plane Grassmannian."""
    n = dim(v)
    match v:
        case LinearSpace(_):
            return True  # trivially a linear P^n-bundle
        case Quadric(_):
            return n == 2 * m_star
        case Grassmann(2, _):
            return n == 2 * m_star
        case PolarizedProduct(factors):
            return max((k for k, d in factors if d == 1), default=-1) >= m_star
        case ProjBundleP1(twists):
            return len(twists) - 1 >= m_star
        case _:
            return False


def verify_family_lemmas(cat: Catalog, engine: ChainEngine | None = None) -> SuiteReport:
    """The four family implications, over every Picard-number-1 member.

    * family-dimension recognition: a family of dimension n-1, n-2 or n-3
      pins the variety to the stated lists;
    * non-degeneracy: a family of dimension >= (n-1)/2 spans its ambient
      projectivised tangent space;
    * a proper linear family of positive dimension has dimension <= (n-4)/2
      (expected to hold vacuously; the vacuity count is reported);
    * exact covering dimension >= n/2 forces membership of the linear-bundle
      / quadric / Grassmannian list.
    """
    rep = SuiteReport("lemmas", {"n_max": cat.n_max, "deg_max": cat.deg_max})
    rep.counters["proper_linear_triggered"] = 0
    rep.counters["proper_linear_vacuous"] = 0
    for v in cat:
        if picard_number(v) != 1:
            rep.bump("skipped_rho_ne_1")
            continue
        n = dim(v)
        name = to_text(v)

        # Recognition by family dimension, via the anticanonical-degree
        # formula (defined even where no family rule exists).
        fd = family_dim(v)
        if fd == n - 1:
            rep.add(name, "families.dimH-is-n-1", isinstance(v, LinearSpace),
                    "family fills P(T): linear space required")
        elif fd == n - 2 and n >= 3:
            rep.add(name, "families.dimH-is-n-2", isinstance(v, Quadric),
                    "family of dimension n-2: quadric required")
        elif fd == n - 3 and n >= 3:
            allowed = v in _family_codim3_list(n)
            rep.add(name, "families.dimH-is-n-3", allowed,
                    "family of dimension n-3: cubic, 2-quadric intersection,"
                    " or G(2,5) section required")

        try:
            fams = line_families(v)
        except NotCoveredByLines:
            rep.bump("not_covered")
            continue
        except NoRule:
            rep.bump("no_rule")
            continue

        for fam in fams:
            fdim = dim(fam.variety)
            if 2 * fdim >= n - 1:
                rep.add(name, "families.nondegenerate", fam.spans_ambient,
                        f"family of dimension {fdim} >= (n-1)/2 must span P^{n-1}")
            proper_linear = (
                isinstance(normalize(fam.variety), LinearSpace)
                and fdim >= 1
                and fam.span_in_pt < fam.ambient_pt_dim
            )
            if proper_linear:
                rep.bump("proper_linear_triggered")
                rep.add(name, "families.proper-linear", 2 * fdim <= n - 4,
                        f"proper linear family of dimension {fdim}:"
                        " 2*dim <= n-4 required")
            else:
                rep.bump("proper_linear_vacuous")

        ml = max_linear_in(v)
        if ml.kind == "exact" and 2 * ml.value >= n >= 1:
            rep.add(name, "covering.half-dim-list", _sato_member(v, ml.value),
                    f"covered by P^{ml.value} with 2*{ml.value} >= n = {n}:"
                    " bundle/quadric/Grassmannian list required")
    return rep


def _family_codim3_list(n: int) -> set[VarietyTerm]:
    allowed = {
        CompleteIntersection((3,), n + 1),
        CompleteIntersection((2, 2), n + 2),
    }
    if 3 <= n <= 6:
        allowed.add(normalize(LinearSectionG25(6 - n)))
    return allowed


# ---------------------------------------------------------------------------
# golden chain values


def golden_suite(n_max: int = 40, m_max: int | None = None,
                 engine: ChainEngine | None = None) -> SuiteReport:
    """Closed-form chain invariants of the four classical families.

    S(P^n) = n and S(Q^n) = floor(n/2) for n <= n_max; S(G(2,C^{m+2})) = m
    and S(SG(2,C^{m+3})) = m for m <= m_max.
    """
    eng = engine or default_engine()
    if m_max is None:
        m_max = n_max
    rep = SuiteReport("golden", {"n_max": n_max, "m_max": m_max})

    def check(v: VarietyTerm, expected: int):
        sv = eng.s_invariant(v)
        rep.add(to_text(v), "golden.s", sv.is_exact and sv.value == expected,
                f"expected exact S = {expected}, got {sv}")

    for n in range(1, n_max + 1):
        check(LinearSpace(n), n)
        check(Quadric(n), n // 2)
    # m starts at 2: G(2,C^3) is P^2 itself and SG(2,C^4) is Q^3, where the
    # degenerate identifications take over.
    for m in range(2, m_max + 1):
        check(Grassmann(2, m + 2), m)
        check(SympGrassmann(2, m + 3), m)
    return rep


#: CLI suite tokens.
SUITES = {
    "thm1": verify_classification,
    "prop32": verify_next_to_maximal,
    "lemmas": verify_family_lemmas,
}


def run_suite(name: str, n_max: int, deg_max: int,
              engine: ChainEngine | None = None) -> SuiteReport:
    """Build a catalog and run one named suite ('golden' needs no catalog)."""
    if name == "golden":
        return golden_suite(n_max, engine=engine)
    from .catalog import build_catalog

    cat = build_catalog(n_max, deg_max)
    return SUITES[name](cat, engine)
