"""The chain invariant: memoized recursion over iterated families of lines.

A chain X |= H_1 |= ... |= H_m iterates the family-of-lines construction as
long as each step is covered by lines; the invariant S is the greatest
attainable chain length.  The recursion is exact whenever every branch has a
rewrite rule; a ruleless branch degrades the result to a lower bound, unless
the exact branches already attain the cap S <= dim placed on the unknown one.

>>> from fanolines.terms import Quadric
>>> s_invariant(Quadric(7))
SValue(kind='exact', value=3)
"""

from __future__ import annotations

from dataclasses import dataclass

from .dsl import to_text
from .errors import NoRule, NotCoveredByLines
from .families import FamilyRecord, line_families
from .terms import (
    Bound,
    VarietyTerm,
    at_least,
    covered_by_lines,
    dim,
    max_linear_in,
    normalize,
)


@dataclass(frozen=True)
class SValue:
    """Exact-or-lower-bound tagged value of the chain invariant."""

    kind: str  # "exact" | "at_least"
    value: int

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    def __str__(self) -> str:
        if self.is_exact:
            return f"S = {self.value} (exact)"
        return f"S >= {self.value} (lower bound)"


@dataclass(frozen=True)
class ChainTree:
    """The full branching tree of iterated families below one term."""

    node: VarietyTerm
    children: tuple[tuple[FamilyRecord, "ChainTree"], ...]
    terminal_reason: str | None  # None | "not_covered" | "no_rule" | "is_point"

    def depth(self) -> int:
        """Length of the deepest chain below this node.

        Internal nodes exist only where the node is covered and ruled, so
        this equals the chain invariant whenever that is exact.
        """
        if not self.children:
            return 0
        return 1 + max(tree.depth() for _, tree in self.children)


def _family_sort_key(fam: FamilyRecord) -> str:
    return to_text(normalize(fam.variety))


class ChainEngine:
    """Chain-invariant computations with a memo table keyed on normal forms.

    Results are pure functions of the term, so concurrent use is safe up to
    idempotent re-insertion of identical memo entries.  Identical subchains
    (linear-space tails in particular) dominate the recursion, which is why
    memo keys are normalized terms.
    """

    def __init__(self):
        self._s_memo: dict[VarietyTerm, SValue] = {}
        self._tree_memo: dict[VarietyTerm, ChainTree] = {}

    def s_invariant(self, v: VarietyTerm) -> SValue:
        """Greatest chain length below ``v`` (0 when not covered by lines)."""
        key = normalize(v)
        cached = self._s_memo.get(key)
        if cached is not None:
            return cached
        try:
            fams = line_families(v)
        except NotCoveredByLines:
            out = SValue("exact", 0)
        except NoRule:
            # Covered by lines, so a chain of length one exists; nothing
            # more can be said without a rule.
            out = SValue("at_least", 1)
        else:
            best = 0
            caps: list[int] = []
            for fam in fams:
                sub = self.s_invariant(fam.variety)
                best = max(best, 1 + sub.value)
                if not sub.is_exact:
                    # The unknown branch can reach at most the dimension of
                    # its variety.
                    caps.append(1 + dim(fam.variety))
            exact = all(cap <= best for cap in caps)
            out = SValue("exact" if exact else "at_least", best)
        self._s_memo[key] = out
        return out

    def chain_tree(self, v: VarietyTerm) -> ChainTree:
        """Full branching tree of families below ``v``."""
        key = normalize(v)
        cached = self._tree_memo.get(key)
        if cached is not None:
            return cached
        try:
            fams = line_families(v)
        except NotCoveredByLines:
            reason = "is_point" if dim(v) == 0 else "not_covered"
            tree = ChainTree(v, (), reason)
        except NoRule:
            tree = ChainTree(v, (), "no_rule")
        else:
            children = tuple((fam, self.chain_tree(fam.variety)) for fam in fams)
            tree = ChainTree(v, children, None)
        self._tree_memo[key] = tree
        return tree

    def witness_chain(self, v: VarietyTerm) -> list[VarietyTerm]:
        """A maximal chain achieving the invariant, terminal object included.

        Ties between equally deep branches are broken by the
        lexicographically smallest canonical serialization, so the output is
        reproducible.
        """
        if not covered_by_lines(v):
            raise NotCoveredByLines(f"{to_text(v)} is not covered by lines")
        chain = [v]
        current = v
        while True:
            try:
                fams = line_families(current)
            except (NotCoveredByLines, NoRule):
                break
            ranked = sorted(
                fams,
                key=lambda f: (-self.s_invariant(f.variety).value, _family_sort_key(f)),
            )
            current = ranked[0].variety
            chain.append(current)
        return chain

    def realizing_chains(self, v: VarietyTerm) -> list[list[VarietyTerm]]:
        """Every chain below ``v`` whose length attains the invariant's value."""
        target = self.s_invariant(v).value
        if target == 0:
            return [[v]]
        chains: list[list[VarietyTerm]] = []
        try:
            fams = line_families(v)
        except (NotCoveredByLines, NoRule):
            return [[v]]
        for fam in sorted(fams, key=_family_sort_key):
            if 1 + self.s_invariant(fam.variety).value == target:
                for rest in self.realizing_chains(fam.variety):
                    chains.append([v] + rest)
        return chains

    def covering_ls_bound(self, v: VarietyTerm) -> Bound:
        """Lower bound on the dimension of covering linear spaces.

        The chain invariant itself is such a bound; a linear space inside a
        family lifts to one of one dimension more through the point, which
        can be strictly better (the intersection of two quadrics in P^7 has
        invariant 1 but is covered by planes).
        """
        candidates = [self.s_invariant(v).value]
        try:
            fams = line_families(v)
        except (NotCoveredByLines, NoRule):
            fams = []
        for fam in fams:
            candidates.append(1 + max_linear_in(fam.variety).value)
        return at_least(max(candidates))


_DEFAULT_ENGINE = ChainEngine()


def default_engine() -> ChainEngine:
    return _DEFAULT_ENGINE


def s_invariant(v: VarietyTerm, engine: ChainEngine | None = None) -> SValue:
    return (engine or _DEFAULT_ENGINE).s_invariant(v)


def chain_tree(v: VarietyTerm, engine: ChainEngine | None = None) -> ChainTree:
    return (engine or _DEFAULT_ENGINE).chain_tree(v)


def witness_chain(v: VarietyTerm, engine: ChainEngine | None = None) -> list[VarietyTerm]:
    return (engine or _DEFAULT_ENGINE).witness_chain(v)


def covering_ls_bound(v: VarietyTerm, engine: ChainEngine | None = None) -> Bound:
    return (engine or _DEFAULT_ENGINE).covering_ls_bound(v)
