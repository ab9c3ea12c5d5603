import pytest

from truncated_tableaux.errors import UnknownSuite
from truncated_tableaux.verify import (
    SUITES,
    Case,
    almost_square_params,
    format_cases,
    rect_staircase_params,
    run_suite,
    suite_passed,
    t_exponent_report,
)


def test_suite_passed_ignores_informational():
    cases = [Case("a", True), Case("b", False, informational=True)]
    assert suite_passed(cases)
    assert not suite_passed(cases + [Case("c", False)])
    text = format_cases(cases)
    assert "PASS" in text and "INFO" in text


def test_parameter_grids():
    rect = list(rect_staircase_params(18))
    assert (3, 3, 1) in rect and (2, 2, 1) in rect and (3, 6, 0) in rect
    assert all(k + 1 <= n <= m and m * n - k * (k + 1) // 2 <= 18 for n, m, k in rect)
    almost = list(almost_square_params(18))
    assert (3, 3, 2) in almost and (4, 4, 2) in almost
    assert all(2 * k <= n + 1 and n * m - k * k + 1 <= 18 for n, m, k in almost)


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope")


def test_budget_flags_are_filtered():
    cases = run_suite("staircase-box", max_n=3, order=99, max_cells=None)
    assert len(cases) == 3 and suite_passed(cases)


@pytest.mark.parametrize("name", ["staircase-box", "rsk", "hooks", "restricted-limit"])
def test_cheap_suites_pass(name):
    assert suite_passed(run_suite(name))


def test_t_exponent_report():
    report = t_exponent_report(10)
    assert report == {"corner": True, "short": False}


def test_all_suites_registered():
    assert set(SUITES) == {
        "staircase-box", "rect-staircase", "rect-almostsq", "gf", "phi", "rsk", "hooks", "restricted-limit", "boxed",
    }
