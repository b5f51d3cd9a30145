"""Families of lines through a general point, as rewrite rules on terms.

For a covered-by-lines term this module produces every irreducible family of
lines through a fixed general point, each one an embedded variety inside the
projectivised tangent space P(T) = P^{n-1}, together with its linear span in
there.  The rules are axioms with classical provenance, listed in
:data:`RULE_PROVENANCE`; the single conjectural item is the scroll-to-
symplectic-Grassmannian recognition rule, which is flagged wherever it is
used.

Two constructors carry no rule (SG(k,N) with k >= 3 and the codimension-2
linear section of G(2,5)): their families exist but fall outside the term
algebra, so :func:`line_families` raises :class:`~fanolines.errors.NoRule`,
which the chain engine treats as a first-class outcome.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dsl import to_text
from .errors import NoRule, NotCoveredByLines, PreconditionFailed, ValidationError
from .terms import (
    CompleteIntersection,
    Grassmann,
    LinearSectionG25,
    LinearSpace,
    Point,
    PolarizedProduct,
    ProjBundleP1,
    Quadric,
    SympGrassmann,
    VarietyTerm,
    covered_by_lines,
    dim,
    linear_space,
    normalize,
    segre_pair,
)


@dataclass(frozen=True)
class FamilyRecord:
    """One irreducible family of lines through a general point.

    ``ambient_pt_dim`` is the dimension of the projectivised tangent space of
    the parent (its dimension minus one); ``span_in_pt`` is the dimension of
    the family's linear span inside it.
    """

    variety: VarietyTerm
    ambient_pt_dim: int
    span_in_pt: int

    def __post_init__(self):
        d = dim(self.variety)
        if not (d <= self.span_in_pt <= self.ambient_pt_dim):
            raise ValidationError(
                f"family record out of range: dim {d} <= span {self.span_in_pt}"
                f" <= ambient {self.ambient_pt_dim} violated"
            )

    @property
    def anticanonical_degree(self) -> int:
        """Anti-canonical degree of the parametrised lines (dim + 2)."""
        return dim(self.variety) + 2

    @property
    def spans_ambient(self) -> bool:
        return self.span_in_pt == self.ambient_pt_dim


def expand_ci_degrees(degrees: tuple[int, ...]) -> tuple[int, ...]:
    """Degrees of the family of a complete intersection: 2..d for each d."""
    out: list[int] = []
    for d in degrees:
        out.extend(range(2, d + 1))
    return tuple(sorted(out))


def line_families(v: VarietyTerm) -> list[FamilyRecord]:
    """All irreducible families of lines on ``v`` through a general point.

    Raises ``NotCoveredByLines`` when there are none, and ``NoRule`` for the
    covered constructors whose family falls outside the term algebra.
    """
    if not covered_by_lines(v):
        raise NotCoveredByLines(f"{to_text(v)} is not covered by lines")
    ambient = dim(v) - 1
    match v:
        case LinearSpace(n):
            # Lines through a point of P^n fill the projectivised tangent space.
            return [FamilyRecord(linear_space(n - 1), ambient, ambient)]
        case Quadric(2):
            return [FamilyRecord(Point(), 1, 0)]
        case Quadric(n):
            return [FamilyRecord(Quadric(n - 2), ambient, ambient)]
        case Grassmann(k, N):
            return [FamilyRecord(segre_pair(k - 1, N - k - 1), ambient, ambient)]
        case SympGrassmann(2, N):
            scroll = ProjBundleP1((2,) + (1,) * (N - 4))
            return [FamilyRecord(scroll, ambient, ambient)]
        case SympGrassmann(k, _):
            raise NoRule(f"no family rule for isotropic Grassmannians with k = {k} >= 3")
        case CompleteIntersection(degrees, _):
            fam_degrees = expand_ci_degrees(degrees)
            n_fam = ambient  # the family lives in P(T) = P^{dim - 1}
            if n_fam - len(fam_degrees) == 0:
                return [FamilyRecord(Point(), ambient, 0)]
            fam = CompleteIntersection(fam_degrees, n_fam)
            return [FamilyRecord(fam, ambient, ambient)]
        case PolarizedProduct(factors):
            # One family per degree-1 factor; it spans only that factor's
            # tangent directions, a proper subspace whenever other factors
            # exist.
            return [
                FamilyRecord(linear_space(n - 1), ambient, n - 1)
                for n, d in factors
                if d == 1
            ]
        case ProjBundleP1(twists):
            # The in-fiber family only.  A second (horizontal) family would
            # not change the chain invariant: the fiber family already
            # attains the maximum possible for a non-linear term.
            k = len(twists)
            return [FamilyRecord(linear_space(k - 2), ambient, k - 2)]
        case LinearSectionG25(0):
            return [FamilyRecord(PolarizedProduct(((1, 1), (2, 1))), 5, 5)]
        case LinearSectionG25(1):
            # A general hyperplane section of the Segre P^1 x P^2 is the
            # cubic scroll P(O(2) + O(1)) in P^4.
            return [FamilyRecord(ProjBundleP1((2, 1)), 4, 4)]
        case LinearSectionG25(2):
            raise NoRule(
                "no family rule for the codimension-2 section of G(2,5):"
                " its family is a curve outside the term algebra"
            )
        case LinearSectionG25(3):
            return [FamilyRecord(Point(), 2, 0)]
    raise TypeError(f"not a variety term: {v!r}")


def try_line_families(v: VarietyTerm) -> list[FamilyRecord] | None:
    """Like :func:`line_families` but returns None on NoRule / NotCovered."""
    try:
        return line_families(v)
    except (NotCoveredByLines, NoRule):
        return None


@dataclass(frozen=True)
class Recognition:
    """A candidate identification of the parent variety from one family."""

    term: VarietyTerm
    conjectural: bool = False


def recognize_from_family(n: int, rho: int, fam: FamilyRecord) -> list[Recognition]:
    """Candidate parents of dimension ``n`` and Picard number ``rho``.

    Applies the dimension-drop recognition lists (family of dimension n-1,
    n-2 or n-3) and the conjectural scroll recognition: a family projectively
    equivalent to P(O(2) + O(1)^{m-1}) filling P^{2m} identifies the
    symplectic Grassmannian SG(2, C^{m+3}).  Returns the empty list when no
    rule applies.
    """
    if fam.ambient_pt_dim != n - 1:
        raise PreconditionFailed(
            f"family ambient P^{fam.ambient_pt_dim} does not match dim {n}"
        )
    found: list[Recognition] = []
    fdim = dim(fam.variety)
    if fdim == n - 1:
        found.append(Recognition(LinearSpace(n)))
    if rho == 1 and n >= 3 and fdim == n - 2:
        found.append(Recognition(Quadric(n)))
    if rho == 1 and n >= 3 and fdim == n - 3:
        found.append(Recognition(CompleteIntersection((3,), n + 1)))
        found.append(Recognition(CompleteIntersection((2, 2), n + 2)))
        if 3 <= n <= 6:
            found.append(Recognition(normalize(LinearSectionG25(6 - n))))
    if isinstance(fam.variety, ProjBundleP1):
        tw = fam.variety.twists
        m = len(tw)
        if tw == (2,) + (1,) * (m - 1) and fam.span_in_pt == fam.ambient_pt_dim == 2 * m:
            found.append(Recognition(SympGrassmann(2, m + 3), conjectural=True))
    # Prefer an unconditional identification over a conjectural duplicate.
    best: dict[VarietyTerm, Recognition] = {}
    for rec in found:
        prev = best.get(rec.term)
        if prev is None or (prev.conjectural and not rec.conjectural):
            best[rec.term] = rec
    return list(best.values())


#: Machine-readable provenance of every family rule.  ``status`` is one of
#: "classical" (standard fact), "conjectural" (recognition only), or "none"
#: (covered by lines but the family falls outside the term algebra).
RULE_PROVENANCE: tuple[dict, ...] = (
    {
        "constructor": "LinearSpace",
        "family": "P^(n-1), equal to the whole projectivised tangent space",
        "status": "classical",
    },
    {
        "constructor": "Quadric",
        "family": "Q^(n-2) in P^(n-1) for n >= 3; two points worth of rulings at n = 2",
        "status": "classical",
    },
    {
        "constructor": "Grassmann",
        "family": "Segre P^(k-1) x P^(N-k-1), non-degenerate in P^(k(N-k)-1)",
        "status": "classical",
    },
    {
        "constructor": "SympGrassmann (k = 2)",
        "family": "scroll P(O(2) + O(1)^(N-4)) over a line, non-degenerate",
        "status": "classical",
    },
    {
        "constructor": "SympGrassmann (k >= 3)",
        "family": None,
        "status": "none",
        "note": "the family is a projectivised bundle over P^(k-1), outside the algebra",
    },
    {
        "constructor": "CompleteIntersection",
        "family": "complete intersection of degrees 2..d_i per degree d_i, in P^(n-1)",
        "status": "classical",
        "note": "requires index >= 2; a zero-dimensional result is recorded as a point",
    },
    {
        "constructor": "PolarizedProduct",
        "family": "P^(n_i-1) per degree-1 factor, spanning only that factor's directions",
        "status": "classical",
    },
    {
        "constructor": "ProjBundleP1",
        "family": "in-fiber family P^(k-2) only",
        "status": "classical",
        "note": "whether a second, horizontal family exists is not settled here;"
        " omitting it cannot change the chain invariant (the fiber family"
        " already attains dim - 1, the maximum for a non-linear term)",
    },
    {
        "constructor": "LinearSectionG25",
        "family": "linear section of the Segre P^1 x P^2: full Segre (c=0),"
        " cubic scroll (c=1), none expressible (c=2), points (c=3)",
        "status": "classical",
        "note": "c = 2 has a curve family outside the algebra; c = 4 is uncovered",
    },
    {
        "constructor": "recognition: scroll P(O(2)+O(1)^(m-1)) filling P^(2m)",
        "family": "identifies SG(2, C^(m+3))",
        "status": "conjectural",
    },
)
