"""Exact-arithmetic laboratory for spans and secant-variety dimensions.

Both families that matter here are monomial images of products of projective
spaces: the two-factor product P^1 x P^{m-1} embedded by O(d,1), and the
scroll P(O(d+1) + O(d)^{m-1}) over a line under its tautological embedding.
Spans and secant dimensions are computed as ranks of evaluation and Jacobian
matrices at random points over large prime fields: exact arithmetic, with
rank over F_p lower-bounding rank over the rationals and agreeing away from
a measure-zero set of points and primes.  Several primes and trials are
taken and the max is kept; more than one disagreeing trial raises instead of
reporting.

Two independent methods compute each secant dimension: the stacked-Jacobian
method (two tangent spaces at independent points span the secant's cone) and
the chord-map method (the Jacobian of (x, y, t) -> t*phi(x) + phi(y)).  They
must agree; neither is ever replaced by the other.

Jacobians are those of the HOMOGENEOUS parameterization (cone convention),
so every reported projective dimension subtracts exactly one from a rank.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product as iproduct

from .errors import DegenerateRandomness, ValidationError
from .modp import rank_mod_p
from .reports import SuiteReport

#: Three distinct primes just below 2^31; products of two entries of F_p fit
#: comfortably in 64-bit intermediates.
DEFAULT_PRIMES = (2147483647, 2147483629, 2147483587)

DEFAULT_SEED = 20260809


@dataclass(frozen=True)
class Parameterization:
    """A monomial map from parameter space onto the affine cone of a variety.

    ``monomials[c]`` is the exponent vector of coordinate c over the
    ``num_params`` homogeneous parameters.
    """

    kind: str  # "segre" | "scroll"
    d: int
    m: int
    monomials: tuple[tuple[int, ...], ...]

    @property
    def num_params(self) -> int:
        return len(self.monomials[0])

    @property
    def num_coords(self) -> int:
        return len(self.monomials)

    @property
    def variety_dim(self) -> int:
        return self.m


def segre_veronese(d: int, m: int) -> Parameterization:
    """P^1 x P^{m-1} embedded by O(d, 1) in P^{dm+m-1}.

    Coordinates are s^(d-a) t^a u_j for 0 <= a <= d and 0 <= j <= m-1.
    """
    if d < 1 or m < 1:
        raise ValidationError("segre_veronese requires d >= 1 and m >= 1")
    nparams = 2 + m  # s, t, u_0..u_{m-1}
    monos = []
    for a in range(d + 1):
        for j in range(m):
            exp = [0] * nparams
            exp[0] = d - a
            exp[1] = a
            exp[2 + j] = 1
            monos.append(tuple(exp))
    return Parameterization("segre", d, m, tuple(monos))


def scroll(d: int, m: int) -> Parameterization:
    """P(O(d+1) + O(d)^{m-1}) in P^{dm+m} under the tautological embedding.

    Coordinates are v_0 times the degree-(d+1) monomials in (s, t) and v_j
    times the degree-d monomials for 1 <= j <= m-1.
    """
    if d < 1 or m < 1:
        raise ValidationError("scroll requires d >= 1 and m >= 1")
    nparams = 2 + m  # s, t, v_0..v_{m-1}
    monos = []
    for a in range(d + 2):
        exp = [0] * nparams
        exp[0] = d + 1 - a
        exp[1] = a
        exp[2] = 1
        monos.append(tuple(exp))
    for j in range(1, m):
        for a in range(d + 1):
            exp = [0] * nparams
            exp[0] = d - a
            exp[1] = a
            exp[2 + j] = 1
            monos.append(tuple(exp))
    return Parameterization("scroll", d, m, tuple(monos))


@dataclass(frozen=True)
class RankConfig:
    """Randomized-rank configuration; the seed is part of every report."""

    primes: tuple[int, ...] = DEFAULT_PRIMES
    points_per_trial: int = 0  # 0: derived from the parameterization
    trials: int = 5
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.trials < 3:
            raise ValidationError("RankConfig requires trials >= 3")
        if len(set(self.primes)) != len(self.primes) or not self.primes:
            raise ValidationError("RankConfig primes must be non-empty and distinct")


def _rng(cfg: RankConfig, label: str, trial: int, p: int) -> random.Random:
    return random.Random(f"{cfg.seed}:{label}:{trial}:{p}")


def _point(rng: random.Random, k: int, p: int) -> list[int]:
    return [rng.randrange(1, p) for _ in range(k)]


def _eval_monomial(exp: tuple[int, ...], x: list[int], p: int) -> int:
    out = 1
    for e, xi in zip(exp, x):
        if e:
            out = (out * pow(xi, e, p)) % p
    return out


def _partial(exp: tuple[int, ...], j: int, x: list[int], p: int) -> int:
    """d/dx_j of the monomial with exponents ``exp`` at ``x`` mod p."""
    e = exp[j]
    if e == 0:
        return 0
    out = e % p
    for i, (ei, xi) in enumerate(zip(exp, x)):
        if i == j:
            ei -= 1
        if ei:
            out = (out * pow(xi, ei, p)) % p
    return out


def _stable_rank(ranks: list[int]) -> int:
    """Max rank across trials, tolerating at most one low outlier."""
    top = max(ranks)
    outliers = [r for r in ranks if r != top]
    if len(outliers) > 1:
        raise DegenerateRandomness(
            f"ranks disagree across trials: {sorted(ranks)}; re-seed advised"
        )
    return top


def span_dim_numeric(par: Parameterization, cfg: RankConfig = RankConfig()) -> int:
    """Dimension of the projective linear span of the image."""
    npts = cfg.points_per_trial or 2 * par.num_coords
    ranks = []
    for trial, p in iproduct(range(cfg.trials), cfg.primes):
        rng = _rng(cfg, f"span:{par.kind}:{par.d}:{par.m}", trial, p)
        rows = []
        for _ in range(npts):
            x = _point(rng, par.num_params, p)
            rows.append([_eval_monomial(mono, x, p) for mono in par.monomials])
        ranks.append(rank_mod_p(rows, p))
    return _stable_rank(ranks) - 1


def secant_dim_terracini(par: Parameterization, cfg: RankConfig = RankConfig()) -> int:
    """Secant-variety dimension from two stacked Jacobians.

    The affine tangent spaces of the cone at two independent random points
    span the cone over the secant variety.
    """
    ranks = []
    for trial, p in iproduct(range(cfg.trials), cfg.primes):
        rng = _rng(cfg, f"terracini:{par.kind}:{par.d}:{par.m}", trial, p)
        x = _point(rng, par.num_params, p)
        y = _point(rng, par.num_params, p)
        rows = []
        for mono in par.monomials:
            rows.append(
                [_partial(mono, j, x, p) for j in range(par.num_params)]
                + [_partial(mono, j, y, p) for j in range(par.num_params)]
            )
        ranks.append(rank_mod_p(rows, p))
    return _stable_rank(ranks) - 1


def secant_dim_chordmap(par: Parameterization, cfg: RankConfig = RankConfig()) -> int:
    """Secant-variety dimension from the chord map (x, y, t) -> t*phi(x) + phi(y).

    Independent of the stacked-Jacobian route; the two must agree.
    """
    ranks = []
    for trial, p in iproduct(range(cfg.trials), cfg.primes):
        rng = _rng(cfg, f"chord:{par.kind}:{par.d}:{par.m}", trial, p)
        x = _point(rng, par.num_params, p)
        y = _point(rng, par.num_params, p)
        t = rng.randrange(1, p)
        rows = []
        for mono in par.monomials:
            rows.append(
                [(t * _partial(mono, j, x, p)) % p for j in range(par.num_params)]
                + [_partial(mono, j, y, p) for j in range(par.num_params)]
                + [_eval_monomial(mono, x, p)]
            )
        ranks.append(rank_mod_p(rows, p))
    return _stable_rank(ranks) - 1


def secant_row(par: Parameterization, cfg: RankConfig = RankConfig()) -> dict:
    """One measurement row: span and both secant dimensions."""
    return {
        "kind": par.kind,
        "d": par.d,
        "m": par.m,
        "span": span_dim_numeric(par, cfg),
        "secant_terracini": secant_dim_terracini(par, cfg),
        "secant_chord": secant_dim_chordmap(par, cfg),
    }


def verify_secant_dimensions(
    d_range=(2, 3),
    m_range=(2, 3, 4),
    cfg: RankConfig = RankConfig(),
) -> SuiteReport:
    """Secant dimensions of both families equal 2m+1 whenever d >= 2.

    Also records the d = 1 control rows: the product family then spans only
    a P^{2m-1} (the degeneracy that rules it out elsewhere), while the d = 1
    scroll values are reported without an asserted expectation.
    """
    if any(d < 2 for d in d_range):
        raise ValidationError("verify_secant_dimensions requires d >= 2 in d_range")
    if any(m < 2 for m in m_range):
        raise ValidationError("verify_secant_dimensions requires m >= 2 in m_range")
    rep = SuiteReport(
        "secant",
        {
            "d_range": sorted(d_range),
            "m_range": sorted(m_range),
            "seed": cfg.seed,
            "primes": list(cfg.primes),
            "trials": cfg.trials,
        },
    )
    for builder in (segre_veronese, scroll):
        for d in sorted(set(d_range) | {1}):
            last = None
            for m in sorted(m_range):
                par = builder(d, m)
                row = secant_row(par, cfg)
                name = f"{par.kind}(d={d},m={m})"
                st, sc, span = row["secant_terracini"], row["secant_chord"], row["span"]
                rep.add(name, "secant.span-linear-normality",
                        span == par.num_coords - 1,
                        f"span {span} must fill P^{par.num_coords - 1}")
                rep.add(name, "secant.method-agreement", st == sc,
                        f"terracini {st} vs chord {sc}")
                rep.add(name, "secant.upper-bound",
                        st <= min(2 * par.variety_dim + 1, par.num_coords - 1),
                        f"secant {st} exceeds the trivial bound")
                if d >= 2:
                    rep.add(name, "secant.dimension",
                            st == 2 * m + 1 and sc == 2 * m + 1,
                            f"expected 2m+1 = {2 * m + 1}, got {st}/{sc}",
                            expected=2 * m + 1, **row)
                elif par.kind == "segre":
                    rep.add(name, "secant.control-span", span == 2 * m - 1,
                            f"d = 1 product spans P^(2m-1) = P^{2 * m - 1}",
                            expected=2 * m - 1, **row)
                    rep.add(name, "secant.control-secant", None,
                            f"d = 1 secant dimensions reported: {st}/{sc}",
                            expected=None, **row)
                else:
                    rep.add(name, "secant.control-secant", None,
                            f"d = 1 scroll values reported: span {span},"
                            f" secant {st}/{sc}", expected=None, **row)
                if last is not None:
                    rep.add(name, "secant.monotone-in-m", st >= last,
                            f"secant dimension dropped from {last} to {st}")
                last = st
                rep.bump("rows")
    return rep
