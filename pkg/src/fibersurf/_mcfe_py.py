"""Pure-Python MCFE search; reference for the compiled kernel in ``_mcfe_kernel.pyx``."""
from __future__ import annotations

from typing import Sequence


def mcfe_search(coeffs: Sequence[int], positions: bool = False) -> list[tuple[int, ...]]:
    """Every minimal expansion reachable from ``coeffs`` by one joint (M)/(M') move set.

    Move sets are non-adjacent subsets of positions ``1..n-1`` holding nonzero
    coefficients. The search walks positions left to right and fixes the output
    value of a position as soon as both neighbours are decided, pruning any
    branch that leaves a coefficient of absolute value below 2.

    With ``positions=True`` the move sets are returned instead of the expansions.
    """
    a = [int(c) for c in coeffs]
    n = len(a)
    if n == 0:
        return [()]
    # e[i]: neighbour shift when position i is moved
    e = [1 if c < 0 else -1 for c in a]
    moved = [False] * n
    results: list[tuple[int, ...]] = []

    def settled(i: int) -> int:
        v = a[i]
        if i > 0 and moved[i - 1]:
            v += e[i - 1]
        if i + 1 < n and moved[i + 1]:
            v += e[i + 1]
        return v

    def emit() -> None:
        if positions:
            results.append(tuple(i for i in range(n) if moved[i]))
            return
        out: list[int] = []
        for i in range(n):
            if moved[i]:
                out.extend([2 * e[i]] * (abs(a[i]) - 1))
            else:
                out.append(settled(i))
        results.append(tuple(out))

    def visit(i: int) -> None:
        # positions < i are decided; position i - 1 is settled once i is decided
        if i == n:
            if moved[n - 1] or abs(settled(n - 1)) >= 2:
                emit()
            return
        for choice in (False, True):
            if choice and (a[i] == 0 or moved[i - 1]):
                continue
            moved[i] = choice
            if moved[i - 1] or abs(settled(i - 1)) >= 2:
                visit(i + 1)
        moved[i] = False

    visit(1)
    return results
