"""Exact matrix rank over prime fields.

Plain Gaussian elimination on Python integers reduced mod p; exact by
construction, and fast enough for the small dense matrices the secant
computations produce.
"""

from __future__ import annotations


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Rank of the matrix with the given integer rows, over F_p."""
    if not rows:
        return 0
    width = len(rows[0])
    work = [[x % p for x in row] for row in rows]
    rank = 0
    for col in range(width):
        pivot = None
        for r in range(rank, len(work)):
            if work[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = pow(work[rank][col], -1, p)
        work[rank] = [(x * inv) % p for x in work[rank]]
        lead = work[rank]
        for r in range(rank + 1, len(work)):
            f = work[r][col]
            if f:
                work[r] = [(a - f * b) % p for a, b in zip(work[r], lead)]
        rank += 1
        if rank == len(work):
            break
    return rank
