"""Hook-length counts for straight and shifted shapes, plus Catalan numbers."""
from __future__ import annotations

from math import comb, factorial, prod

from .errors import ShiftedNeedsDistinctParts
from .shapes import Partition, make_partition


def hook_lengths(lam) -> list[int]:
    lam = make_partition(lam)
    conj = lam.conjugate()
    return [
        (lam[i] - j - 1) + (conj[j] - i - 1) + 1
        for i in range(len(lam))
        for j in range(lam[i])
    ]


def f_straight(lam) -> int:
    """Number of standard Young tableaux of straight shape ``lam``."""
    lam = make_partition(lam)
    return factorial(lam.size) // prod(hook_lengths(lam))


def shifted_hook_lengths(lam) -> list[int]:
    """Hooks of the shifted diagram; row ``i`` occupies grid columns ``i .. i+lam_i-1``.

    A hook whose column reaches the diagonal box ``(c, c)`` bends there and
    continues along row ``c + 1``.
    """
    lam = make_partition(lam)
    if not lam.is_strict():
        raise ShiftedNeedsDistinctParts(f"shifted shape needs distinct parts, got {lam}")
    ell = len(lam)
    end = [i + lam.part(i) - 1 for i in range(1, ell + 1)]  # last grid column of row i
    hooks = []
    for i in range(1, ell + 1):
        for c in range(i, end[i - 1] + 1):
            arm = end[i - 1] - c
            leg = sum(1 for r in range(i + 1, ell + 1) if r <= c <= end[r - 1])
            bend = lam.part(c + 1) if c <= ell else 0
            hooks.append(arm + leg + 1 + bend)
    return hooks


def g_shifted(lam) -> int:
    """Number of standard tableaux of shifted shape ``lam`` (distinct parts)."""
    lam = make_partition(lam)
    return factorial(lam.size) // prod(shifted_hook_lengths(lam))


def g_staircase(n: int) -> int:
    """Shifted staircase count ``binom(n+1, 2)! / prod_{0<=i<j<=n} (i + j)``."""
    den = prod(i + j for j in range(n + 1) for i in range(j))
    return factorial(comb(n + 1, 2)) // den


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def rectangle_syt(rows: int, cols: int) -> int:
    """``f`` of the ``rows x cols`` rectangle; 1 when either side is zero."""
    if rows <= 0 or cols <= 0:
        return 1
    return f_straight(Partition((cols,) * rows))
