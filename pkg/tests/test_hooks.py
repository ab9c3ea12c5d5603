from hypothesis import given, settings

from truncated_tableaux.hooks import (
    catalan,
    f_straight,
    g_shifted,
    g_staircase,
    hook_lengths,
    rectangle_syt,
    shifted_hook_lengths,
)
from truncated_tableaux.oracle import count_syt_oracle
from truncated_tableaux.shapes import Kind, make_shape, staircase

from strategies import partitions


def test_straight_values():
    assert f_straight((2, 1)) == 2
    assert f_straight((3, 3)) == 5
    assert f_straight(()) == 1
    assert sorted(hook_lengths((2, 1))) == [1, 1, 3]


def test_shifted_values():
    assert g_shifted((2, 1)) == 1
    assert g_shifted((3, 2)) == 2
    assert sorted(shifted_hook_lengths((3, 1))) == [1, 1, 3, 4]
    assert g_shifted((3, 1)) == 2


def test_staircase_values():
    assert g_staircase(1) == 1
    assert g_staircase(3) == 2
    assert g_staircase(4) == 12
    for n in range(7):
        assert g_staircase(n) == g_shifted(staircase(n))


def test_catalan_values():
    assert [catalan(m) for m in (0, 3, 5)] == [1, 5, 42]


def test_rectangle_syt():
    assert rectangle_syt(2, 3) == 5
    assert rectangle_syt(0, 4) == 1
    assert rectangle_syt(3, 3) == 42


@settings(max_examples=50)
@given(partitions(max_size=8))
def test_hook_formula_matches_enumeration(lam):
    assert f_straight(lam) == count_syt_oracle(make_shape(lam))


@settings(max_examples=50)
@given(partitions(max_size=10, strict=True))
def test_shifted_hook_formula_matches_enumeration(lam):
    assert g_shifted(lam) == count_syt_oracle(make_shape(lam, (), Kind.SHIFTED))


@given(partitions(max_size=8))
def test_conjugate_has_same_count(lam):
    from truncated_tableaux.shapes import Partition

    assert f_straight(lam) == f_straight(Partition(lam).conjugate())
