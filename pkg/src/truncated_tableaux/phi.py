"""Diagonal decomposition of truncated plane partitions into reverse SSYT.

For a plane partition ``T`` whose rows all start on a common diagonal, the
``j``-th diagonal is the partition ``lam^j = (T[1][j], T[2][j], ...)`` read over
the rows that have a ``j``-th box.  Consecutive diagonals are nested, and the
chain ``lam^1 ⊇ lam^2 ⊇ ...`` is recorded as a reverse skew tableau whose
cells in ``lam^j / lam^(j+1)`` hold ``j``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import EntryOutOfRange, LengthRestriction, RequiresNLeqM, ShapeMismatch
from .oracle import is_plane_partition
from .shapes import Partition, make_partition, rect_minus_staircase, shifted_staircase_minus_staircase

Filling = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SkewSSYT:
    """Reverse semistandard tableau of skew shape ``outer/inner``.

    ``rows[i]`` lists the entries of the skew cells of row ``i + 1`` from left
    to right.  Rows weakly decrease and columns strictly decrease.
    """

    outer: Partition
    inner: Partition
    rows: Filling

    def __post_init__(self):
        outer, inner = make_partition(self.outer), make_partition(self.inner)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        if not outer.contains(inner):
            raise ShapeMismatch(f"{inner} is not contained in {outer}")
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        rows = rows + ((),) * (len(outer) - len(rows))
        while len(rows) > len(outer) and not rows[-1]:
            rows = rows[:-1]
        mu = inner.padded(len(outer))
        if len(rows) != len(outer) or any(len(r) != l - m for r, l, m in zip(rows, outer, mu)):
            raise ShapeMismatch("row lengths do not match the skew shape")
        object.__setattr__(self, "rows", rows)
        for r in rows:
            if any(v < 1 for v in r) or any(a < b for a, b in zip(r, r[1:])):
                raise ShapeMismatch(f"row {r} is not a weakly decreasing positive row")
        for i in range(1, len(rows)):
            for pos in range(mu[i], outer[i]):
                if pos >= mu[i - 1] and self.at(i, pos) >= self.at(i - 1, pos):
                    raise ShapeMismatch("columns are not strictly decreasing")

    def at(self, row: int, pos: int) -> int:
        """Entry at 0-based ``(row, pos)`` in absolute column coordinates."""
        return self.rows[row][pos - self.inner.part(row + 1)]

    @property
    def total(self) -> int:
        return sum(map(sum, self.rows))

    def max_entry(self) -> int:
        return max((max(r) for r in self.rows if r), default=0)


def _encode(diagonals: list[tuple[int, ...]], inner: tuple[int, ...]) -> SkewSSYT:
    """Reverse tableau of shape ``diagonals[0] / inner`` with ``j`` on ``lam^j / lam^(j+1)``."""
    chain = [make_partition(d) for d in diagonals] + [make_partition(inner)]
    outer = chain[0]
    rows = []
    for i in range(len(outer)):
        row: list[int] = []
        for j in range(len(chain) - 1, 0, -1):
            row.extend([j] * (chain[j - 1].part(i + 1) - chain[j].part(i + 1)))
        rows.append(tuple(row))
    return SkewSSYT(outer, chain[-1], tuple(rows))


def _decode(P: SkewSSYT, row_lengths: tuple[int, ...]) -> Filling:
    """``T[i][j] = max(s : P[i, s] >= j)``, inner cells counting as infinitely large."""
    out = []
    for i, L in enumerate(row_lengths):
        mu_i = P.inner.part(i + 1)
        row = P.rows[i] if i < len(P.rows) else ()
        vals = []
        for j in range(1, L + 1):
            s = mu_i + sum(1 for v in row if v >= j)
            vals.append(s)
        out.append(tuple(vals))
    return tuple(out)


def _staircase_params(T) -> tuple[int, int]:
    n = len(T)
    if n == 0 or not T[0]:
        raise ShapeMismatch("empty filling")
    return n, n - len(T[0])


def phi_shifted(T, n: int | None = None, k: int | None = None) -> SkewSSYT:
    """Reverse skew tableau of shape ``lam^1 / lam^(n-k)`` with entries in ``1..n-k-1``."""
    T = tuple(tuple(r) for r in T)
    if n is None or k is None:
        n, k = _staircase_params(T)
    if not 0 <= k < n:
        raise ShapeMismatch(f"need 0 <= k < n, got n={n}, k={k}")
    shape = shifted_staircase_minus_staircase(n, k)
    if not is_plane_partition(shape, T):
        raise ShapeMismatch(f"not a plane partition of {shape.describe()}")
    d = n - k
    diagonals = [tuple(r[j] for r in T if len(r) > j) for j in range(d)]
    return _encode(diagonals[:-1], diagonals[-1])


def phi_shifted_inverse(P: SkewSSYT, n: int, k: int) -> Filling:
    if not 0 <= k < n:
        raise ShapeMismatch(f"need 0 <= k < n, got n={n}, k={k}")
    if P.max_entry() > n - k - 1:
        raise EntryOutOfRange(f"entries must lie in 1..{n - k - 1}")
    if len(P.outer) > n or len(P.inner) > k + 1:
        raise LengthRestriction(f"need l(outer) <= {n} and l(inner) <= {k + 1}")
    shape = shifted_staircase_minus_staircase(n, k)
    T = _decode(P, shape.row_lengths)
    if not is_plane_partition(shape, T):
        raise ShapeMismatch("tableau does not decode to a plane partition")
    return T


def _split_rectangle(T: Filling, n: int, m: int) -> tuple[Filling, Filling]:
    upper = tuple(T[i][i:] for i in range(n))
    lower = tuple(tuple(T[r][j] for r in range(j, m)) for j in range(n))
    return upper, lower


def phi_straight(T, n: int | None = None, m: int | None = None, k: int | None = None) -> tuple[SkewSSYT, SkewSSYT]:
    """``(P, Q)`` with ``sh(P) = lam/mu`` filled from ``1..n-k-1`` and
    ``sh(Q) = lam`` filled from ``1..m``."""
    T = tuple(tuple(r) for r in T)
    if n is None or m is None or k is None:
        if not T:
            raise ShapeMismatch("empty filling")
        m, n = len(T), len(T[-1])
        k = n - len(T[0])
    if n > m:
        raise RequiresNLeqM(f"need n <= m, got n={n}, m={m}; reflect the filling first")
    if not 0 <= k < n:
        raise ShapeMismatch(f"need 0 <= k < n, got n={n}, k={k}")
    shape = rect_minus_staircase(n, m, k)
    if not is_plane_partition(shape, T):
        raise ShapeMismatch(f"not a plane partition of {shape.describe()}")
    upper, lower = _split_rectangle(T, n, m)
    P = phi_shifted(upper, n, k)
    Q = _encode([tuple(r[j] for r in lower if len(r) > j) for j in range(m)], ())
    return P, Q


def phi_straight_inverse(P: SkewSSYT, Q: SkewSSYT, n: int, m: int, k: int) -> Filling:
    if n > m:
        raise RequiresNLeqM(f"need n <= m, got n={n}, m={m}")
    if Q.inner.size or Q.outer != P.outer:
        raise ShapeMismatch("Q must be a straight tableau of the same outer shape as P")
    if Q.max_entry() > m:
        raise EntryOutOfRange(f"Q entries must lie in 1..{m}")
    upper = phi_shifted_inverse(P, n, k)
    lower = _decode(Q, tuple(m - j for j in range(n)))
    shape = rect_minus_staircase(n, m, k)
    T = []
    for r in range(m):
        row = [lower[j][r - j] for j in range(min(r, n))]
        if r < n:
            row.extend(upper[r])
        T.append(tuple(row))
    T = tuple(T)
    if not is_plane_partition(shape, T):
        raise ShapeMismatch("pair does not decode to a plane partition")
    return T


def zero_filling(row_lengths) -> Filling:
    return tuple((0,) * L for L in row_lengths)
