"""Partitions, truncated straight/shifted diagrams and their cell posets.

Cells are addressed as ``(row, pos)`` with both indices 1-based, where ``pos``
counts boxes from the beginning of the row.  The grid column of a cell is
``pos`` for straight shapes and ``row + pos - 1`` for shifted ones.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import NotWeaklyDecreasing, ShiftedNeedsDistinctParts, TruncationTooLarge

Cell = tuple[int, int]


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise NotWeaklyDecreasing(f"{parts} is not weakly decreasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __repr__(self) -> str:
        return f"Partition{self.parts}"

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """1-based part ``i``, zero past the end."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def padded(self, length: int) -> tuple[int, ...]:
        return self.parts + (0,) * (length - len(self.parts))

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(a >= b for a, b in zip(self.parts, other.parts))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def is_strict(self) -> bool:
        return all(a > b for a, b in zip(self.parts, self.parts[1:]))


def make_partition(parts: Iterable[int]) -> Partition:
    return parts if isinstance(parts, Partition) else Partition(tuple(parts))


def staircase(k: int) -> Partition:
    if k < 0:
        raise ValueError("staircase size must be nonnegative")
    return Partition(tuple(range(k, 0, -1)))


def rectangle(n: int, m: int) -> Partition:
    """``n^m``: ``m`` rows of length ``n``."""
    return Partition((n,) * m)


def almost_square(k: int) -> Partition:
    """The ``k x k`` square minus its bottom-right corner, ``(k^(k-1), k-1)``."""
    if k < 1:
        raise ValueError("almost square needs k >= 1")
    return Partition((k,) * (k - 1) + (k - 1,))


class Kind(str, enum.Enum):
    STRAIGHT = "straight"
    SHIFTED = "shifted"


@dataclass(frozen=True)
class TruncatedShape:
    outer: Partition
    trunc: Partition = Partition()
    kind: Kind = Kind.STRAIGHT

    def __post_init__(self):
        object.__setattr__(self, "outer", make_partition(self.outer))
        object.__setattr__(self, "trunc", make_partition(self.trunc))
        object.__setattr__(self, "kind", Kind(self.kind))
        if len(self.trunc) > len(self.outer) or any(
            m > l for l, m in zip(self.outer, self.trunc)
        ):
            raise TruncationTooLarge(f"{self.trunc} does not fit inside {self.outer}")
        if self.kind is Kind.SHIFTED and not self.outer.is_strict():
            raise ShiftedNeedsDistinctParts(f"shifted shape needs distinct parts, got {self.outer}")

    @cached_property
    def row_lengths(self) -> tuple[int, ...]:
        mu = self.trunc.padded(len(self.outer))
        return tuple(l - m for l, m in zip(self.outer, mu))

    @property
    def num_rows(self) -> int:
        return len(self.row_lengths)

    @property
    def size(self) -> int:
        return sum(self.row_lengths)

    def row_start(self, row: int) -> int:
        """Grid column of the first box in ``row`` (1-based)."""
        return row if self.kind is Kind.SHIFTED else 1

    def grid_col(self, cell: Cell) -> int:
        i, j = cell
        return self.row_start(i) + j - 1

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 1 <= i <= self.num_rows and 1 <= j <= self.row_lengths[i - 1]

    def cell_at(self, row: int, col: int) -> Cell | None:
        """Cell of ``row`` sitting in grid column ``col``, if any."""
        if not 1 <= row <= self.num_rows:
            return None
        j = col - self.row_start(row) + 1
        return (row, j) if 1 <= j <= self.row_lengths[row - 1] else None

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        return tuple((i + 1, j + 1) for i, r in enumerate(self.row_lengths) for j in range(r))

    def describe(self) -> str:
        lam = ",".join(map(str, self.outer))
        mu = ",".join(map(str, self.trunc))
        return f"{self.kind.value}:[{lam}]\\[{mu}]"


def make_shape(outer, trunc=(), kind: Kind | str = Kind.STRAIGHT) -> TruncatedShape:
    return TruncatedShape(make_partition(outer), make_partition(trunc), Kind(kind))


def shifted_staircase_minus_staircase(n: int, k: int) -> TruncatedShape:
    """Shifted ``delta_n \\ delta_k``."""
    return make_shape(staircase(n), staircase(k), Kind.SHIFTED)


def rect_minus_staircase(n: int, m: int, k: int) -> TruncatedShape:
    """Straight ``n^m \\ delta_k`` (``m`` rows of length ``n``)."""
    return make_shape(rectangle(n, m), staircase(k), Kind.STRAIGHT)


def rect_minus_almost_square(n: int, m: int, k: int) -> TruncatedShape:
    """Straight ``n^m \\ (k^(k-1), k-1)``."""
    return make_shape(rectangle(n, m), almost_square(k), Kind.STRAIGHT)


@dataclass(frozen=True)
class ShapePoset:
    elements: tuple[Cell, ...]
    covers: tuple[tuple[Cell, Cell], ...]

    @cached_property
    def lower_covers(self) -> dict[Cell, tuple[Cell, ...]]:
        below: dict[Cell, list[Cell]] = {c: [] for c in self.elements}
        for a, b in self.covers:
            below[b].append(a)
        return {c: tuple(v) for c, v in below.items()}

    @cached_property
    def upper_covers(self) -> dict[Cell, tuple[Cell, ...]]:
        above: dict[Cell, list[Cell]] = {c: [] for c in self.elements}
        for a, b in self.covers:
            above[a].append(b)
        return {c: tuple(v) for c, v in above.items()}

    def topological_order(self) -> list[Cell]:
        indeg = {c: len(v) for c, v in self.lower_covers.items()}
        ready = [c for c in self.elements if indeg[c] == 0]
        order = []
        while ready:
            c = ready.pop()
            order.append(c)
            for d in self.upper_covers[c]:
                indeg[d] -= 1
                if indeg[d] == 0:
                    ready.append(d)
        if len(order) != len(self.elements):
            raise ValueError("cover relation has a cycle")
        return order

    def leq(self, a: Cell, b: Cell) -> bool:
        stack, seen = [a], {a}
        while stack:
            c = stack.pop()
            if c == b:
                return True
            for d in self.upper_covers[c]:
                if d not in seen:
                    seen.add(d)
                    stack.append(d)
        return False


def poset_of(shape: TruncatedShape) -> ShapePoset:
    """Cover relations of the order the cells inherit from the untruncated
    diagram: ``(i, c) <= (i', c')`` iff ``i <= i'`` and ``c <= c'`` in grid
    coordinates.

    Where truncation does not disconnect anything these are exactly the row
    successors plus the cell directly below in the same grid column.
    """
    pts = {cell: (cell[0], shape.grid_col(cell)) for cell in shape.cells}

    def less(a, b):
        return a != b and pts[a][0] <= pts[b][0] and pts[a][1] <= pts[b][1]

    covers = []
    for a in shape.cells:
        ups = [b for b in shape.cells if less(a, b)]
        for b in ups:
            if not any(less(c, b) for c in ups):
                covers.append((a, b))
    return ShapePoset(shape.cells, tuple(covers))
