"""
Maximum-weight perfect assignment over exact rationals (Kuhn-Munkres with
potentials). Forbidden edges are passed as None.
"""
from fractions import Fraction
from typing import Optional, Sequence

Weights = Sequence[Sequence[Optional[Fraction]]]

INF = float("inf")


def _penalty(weights: Weights) -> Fraction:
    n = len(weights)
    bound = max((abs(w) for row in weights for w in row if w is not None), default=Fraction(0))
    # any assignment through a forbidden edge loses to every feasible one
    return Fraction(2 * n) * bound + 1


def _hungarian_min(cost: list[list[Fraction]]) -> list[int]:
    """Minimum-cost assignment; returns col_of_row (0-based)."""
    n = len(cost)
    u = [Fraction(0)] * (n + 1)
    v = [Fraction(0)] * (n + 1)
    p = [0] * (n + 1)      # p[j] = row matched to column j (1-based, 0 = free)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [INF] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = INF
            j1 = 0
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = cost[i0 - 1][j - 1] - u[i0] - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while True:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
            if j0 == 0:
                break
    col_of_row = [0] * n
    for j in range(1, n + 1):
        col_of_row[p[j] - 1] = j - 1
    return col_of_row


def solve_assignment(weights: Weights) -> Optional[tuple[Fraction, tuple[int, ...]]]:
    """Optimal (total, permutation) or None when no perfect assignment avoids forbidden edges."""
    n = len(weights)
    penalty = _penalty(weights)
    cost = [[-w if w is not None else penalty for w in row] for row in weights]
    perm = _hungarian_min(cost)
    if any(weights[i][perm[i]] is None for i in range(n)):
        return None
    total = sum((weights[i][perm[i]] for i in range(n)), Fraction(0))
    return total, tuple(perm)


def forbid(weights: Weights, i: int, j: int) -> list[list[Optional[Fraction]]]:
    out = [list(row) for row in weights]
    out[i][j] = None
    return out
