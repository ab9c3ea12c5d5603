"""Brute-force ground truth for truncated shapes.

Plane partitions here use the reverse convention: entries are nonnegative and
weakly decrease along rows and down grid columns.  Fillings are row arrays,
``T[i-1][j-1]`` being the entry of cell ``(i, j)``.
"""
from __future__ import annotations

from typing import Iterator, Mapping

from .errors import TooLarge
from .qseries import QSeries
from .shapes import Cell, TruncatedShape, poset_of
from .symfunc import iter_partitions_weighted, schur_eval, skew_schur_eval

DEFAULT_MAX_CELLS = 22

Filling = tuple[tuple[int, ...], ...]


def count_syt_oracle(shape: TruncatedShape, max_cells: int = DEFAULT_MAX_CELLS) -> int:
    """Number of standard fillings (linear extensions of the cell poset).

    Dynamic programming over order ideals; since every row is a chain, an
    ideal is determined by how many leading cells of each row it holds.
    """
    if shape.size > max_cells:
        raise TooLarge(f"{shape.size} cells exceeds the oracle budget of {max_cells}")
    poset = poset_of(shape)
    lengths = shape.row_lengths
    preds = {c: poset.lower_covers[c] for c in poset.elements}
    layer = {(0,) * len(lengths): 1}
    for _ in range(shape.size):
        nxt: dict[tuple, int] = {}
        for front, ways in layer.items():
            for r, filled in enumerate(front):
                if filled == lengths[r]:
                    continue
                cell = (r + 1, filled + 1)
                if all(pj <= front[pi - 1] for pi, pj in preds[cell]):
                    key = front[:r] + (filled + 1,) + front[r + 1 :]
                    nxt[key] = nxt.get(key, 0) + ways
        layer = nxt
    return sum(layer.values())


def _row_candidates(caps: list[int], fixed: list[int | None], budget: int) -> Iterator[tuple[tuple, int]]:
    """Weakly decreasing rows with ``row[j] <= caps[j]``, prescribed entries
    where ``fixed[j]`` is set, and total at most ``budget``."""
    L = len(caps)
    row = [0] * L

    def rec(j, prev, left):
        if j == L:
            yield tuple(row), budget - left
            return
        hi = min(prev, caps[j], left)
        f = fixed[j]
        values = ([f] if f <= hi else []) if f is not None else range(hi, -1, -1)
        for v in values:
            row[j] = v
            yield from rec(j + 1, v, left - v)

    if budget >= 0:
        yield from rec(0, budget, budget)


def _cross_row_covers(shape: TruncatedShape) -> tuple[int, list[list[list[Cell]]]]:
    """For each cell, its lower covers lying in earlier rows, plus the largest
    row gap any such cover spans."""
    poset = poset_of(shape)
    gap = 1
    out = []
    for i in range(1, shape.num_rows + 1):
        row = []
        for j in range(1, shape.row_lengths[i - 1] + 1):
            below = [c for c in poset.lower_covers[(i, j)] if c[0] < i]
            gap = max([gap] + [i - c[0] for c in below])
            row.append(below)
        out.append(row)
    return gap, out


def _caps(window: tuple, i: int, below: list[list[Cell]], default: int) -> list[int]:
    # window holds rows i - len(window) .. i - 1
    base = i - len(window)
    return [min([window[r - base][c - 1] for r, c in cs], default=default) for cs in below]


def pp_series_oracle(
    shape: TruncatedShape, order: int, fixed: Mapping[Cell, int] | None = None
) -> QSeries:
    """Truncated generating function ``sum_T q^{|T|}`` over plane partitions of
    ``shape``, optionally with some cells pinned to given values."""
    fixed = dict(fixed or {})
    for cell in fixed:
        if cell not in shape:
            raise ValueError(f"fixed cell {cell} is not in the shape")
    gap, lower = _cross_row_covers(shape)
    layer: dict[tuple, list[int]] = {(): [1] + [0] * order}
    for i in range(1, shape.num_rows + 1):
        pins = [fixed.get((i, j)) for j in range(1, shape.row_lengths[i - 1] + 1)]
        nxt: dict[tuple, list[int]] = {}
        for window, vec in layer.items():
            low = next(d for d, c in enumerate(vec) if c)
            caps = _caps(window, i, lower[i - 1], order)
            for row, t in _row_candidates(caps, pins, order - low):
                key = (window + (row,))[-gap:]
                acc = nxt.setdefault(key, [0] * (order + 1))
                for d in range(low, order + 1 - t):
                    if vec[d]:
                        acc[d + t] += vec[d]
        layer = {k: v for k, v in nxt.items() if any(v)}
    total = [0] * (order + 1)
    for vec in layer.values():
        for d, c in enumerate(vec):
            total[d] += c
    return QSeries(tuple(total), order)


def iter_plane_partitions(shape: TruncatedShape, max_entry: int) -> Iterator[Filling]:
    """Every plane partition of ``shape`` with entries at most ``max_entry``."""
    _, lower = _cross_row_covers(shape)
    rows: list[tuple] = []
    budget = max_entry * shape.size

    def rec(i):
        if i > shape.num_rows:
            yield tuple(rows)
            return
        caps = _caps(tuple(rows), i, lower[i - 1], max_entry)
        for row, _ in _row_candidates(caps, [None] * len(caps), budget):
            rows.append(row)
            yield from rec(i + 1)
            rows.pop()

    yield from rec(1)


def is_plane_partition(shape: TruncatedShape, T) -> bool:
    if tuple(len(r) for r in T) != shape.row_lengths:
        return False
    poset = poset_of(shape)
    for i, j in shape.cells:
        v = T[i - 1][j - 1]
        if v < 0:
            return False
        for a, b in poset.upper_covers[(i, j)]:
            if T[a - 1][b - 1] > v:
                return False
    return True


def _subpartitions(lam: tuple, max_len: int) -> Iterator[tuple]:
    def rec(i, cap, prefix):
        yield prefix
        if i == min(len(lam), max_len):
            return
        for v in range(min(cap, lam[i]), 0, -1):
            yield from rec(i + 1, v, prefix + (v,))

    yield from rec(0, lam[0] if lam else 0, ())


def s_sum_oracle(n: int, k: int, order: int) -> QSeries:
    """``sum s_{lam/mu}(q, ..., q^{n-k-1}) q^{(n-k)|mu|}`` over
    ``l(lam) <= n``, ``l(mu) <= k+1``, by direct enumeration."""
    if not 0 <= k < n:
        raise ValueError("need 0 <= k < n")
    x = tuple(range(1, n - k))
    total = [0] * (order + 1)
    for lam in iter_partitions_weighted(n, [1] * n, order):
        for mu in _subpartitions(lam, k + 1):
            term = skew_schur_eval(lam, mu, x).shift((n - k) * sum(mu))
            for d in range(min(order, term.degree) + 1):
                total[d] += term[d]
    return QSeries(tuple(total), order)


def d_sum_oracle(n: int, m: int, k: int, order: int) -> QSeries:
    """``sum s_lam(1, ..., q^{m-1}) s_{lam/mu}(q, ..., q^{n-k-1}) q^{(n-k)|mu|}``
    over ``l(lam) <= n``, ``l(mu) <= k+1``, by direct enumeration."""
    if not 0 <= k < n:
        raise ValueError("need 0 <= k < n")
    x = tuple(range(1, n - k))
    z = tuple(range(m))
    total = [0] * (order + 1)
    for lam in iter_partitions_weighted(n, [1] * n, order):
        s_lam = schur_eval(lam, z)
        if s_lam.is_zero():
            continue
        for mu in _subpartitions(lam, k + 1):
            skew = skew_schur_eval(lam, mu, x)
            if skew.is_zero():
                continue
            term = (s_lam * skew).shift((n - k) * sum(mu))
            for d in range(min(order, term.degree) + 1):
                total[d] += term[d]
    return QSeries(tuple(total), order)
