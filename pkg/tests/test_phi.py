import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from truncated_tableaux.errors import EntryOutOfRange, LengthRestriction, RequiresNLeqM, ShapeMismatch
from truncated_tableaux.oracle import iter_plane_partitions
from truncated_tableaux.phi import (
    SkewSSYT,
    phi_shifted,
    phi_shifted_inverse,
    phi_straight,
    phi_straight_inverse,
    zero_filling,
)
from truncated_tableaux.shapes import rect_minus_staircase, shifted_staircase_minus_staircase

from strategies import plane_partitions

FIXTURES = Path(__file__).parent / "fixtures"


def _load(name):
    return json.loads((FIXTURES / name).read_text())


def _rows(P):
    return [list(r) for r in P.rows]


def test_shifted_worked_example():
    data = _load("phi_shifted_example.json")
    T = tuple(map(tuple, data["filling"]))
    P = phi_shifted(T)
    assert list(P.outer) == [8, 7, 5, 3, 1] and list(P.inner) == [5, 3]
    assert _rows(P) == [[3, 2, 1], [3, 2, 1, 1], [3, 3, 2, 1, 1], [2, 1, 1], [1]]
    assert _rows(P) == data["P"]["rows"]
    assert phi_shifted_inverse(P, 5, 1) == T
    # 60 = 28 + 4 * 8
    assert sum(map(sum, T)) == 60 and P.total == 28 and P.inner.size == 8


def test_straight_worked_example():
    data = _load("phi_straight_example.json")
    T = tuple(map(tuple, data["filling"]))
    P, Q = phi_straight(T)
    assert list(P.outer) == [7, 6, 3, 2, 1] and list(P.inner) == [4, 4, 2]
    assert _rows(P) == [[2, 2, 1], [1, 1], [2], [2, 2], [1]]
    assert _rows(Q) == [[6, 6, 5, 4, 2, 2, 1], [5, 4, 3, 2, 1, 1], [4, 3, 1], [3, 1], [2]]
    assert (_rows(P), _rows(Q)) == (data["P"]["rows"], data["Q"]["rows"])
    assert phi_straight_inverse(P, Q, 5, 6, 2) == T
    weight = P.total + Q.total - Q.outer.size + 3 * P.inner.size
    assert sum(map(sum, T)) == weight == 81


def test_zero_fillings():
    T = zero_filling(shifted_staircase_minus_staircase(4, 1).row_lengths)
    P = phi_shifted(T)
    assert P.outer.size == 0 and P.inner.size == 0
    assert phi_shifted_inverse(SkewSSYT((), (), ()), 3, 1) == zero_filling((2, 2, 1))
    T = zero_filling(rect_minus_staircase(2, 3, 1).row_lengths)
    P, Q = phi_straight(T)
    assert P.outer.size == Q.outer.size == 0
    assert phi_straight_inverse(P, Q, 2, 3, 1) == T


def test_inverse_rejects_bad_tableaux():
    with pytest.raises(EntryOutOfRange):
        phi_shifted_inverse(SkewSSYT((2,), (), ((3, 3),)), 3, 1)
    with pytest.raises(LengthRestriction):
        phi_shifted_inverse(SkewSSYT((1, 1, 1), (1, 1, 1), ()), 3, 1)
    with pytest.raises(RequiresNLeqM):
        phi_straight(((1, 0), (0, 0, 0)), 3, 2, 1)


def test_non_plane_partitions_rejected():
    with pytest.raises(ShapeMismatch):
        phi_shifted(((0, 1), (0, 0), (0,)))
    with pytest.raises(ShapeMismatch):
        SkewSSYT((2,), (), ((1, 2),))


def test_small_straight_domain_exhaustive():
    shape = rect_minus_staircase(2, 2, 1)
    fillings = list(iter_plane_partitions(shape, 4))
    images = {phi_straight(T, 2, 2, 1) for T in fillings}
    assert len(images) == len(fillings)
    for T in fillings:
        P, Q = phi_straight(T, 2, 2, 1)
        assert phi_straight_inverse(P, Q, 2, 2, 1) == T


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6), st.integers(0, 3), st.data())
def test_shifted_roundtrip(n, k, data):
    k = min(k, n - 1)
    T = data.draw(plane_partitions(shifted_staircase_minus_staircase(n, k), 6))
    P = phi_shifted(T, n, k)
    assert phi_shifted_inverse(P, n, k) == T
    assert sum(map(sum, T)) == P.total + (n - k) * P.inner.size
    assert P.max_entry() <= n - k - 1
    assert len(P.outer) <= n and len(P.inner) <= k + 1


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 5), st.integers(0, 3), st.data())
def test_straight_roundtrip(n, m, k, data):
    n, m = min(n, m), max(n, m)
    k = min(k, n - 1)
    T = data.draw(plane_partitions(rect_minus_staircase(n, m, k), 5))
    P, Q = phi_straight(T, n, m, k)
    assert phi_straight_inverse(P, Q, n, m, k) == T
    assert P.outer == Q.outer and not Q.inner
    assert sum(map(sum, T)) == P.total + Q.total - Q.outer.size + (n - k) * P.inner.size
