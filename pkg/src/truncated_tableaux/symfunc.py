"""Schur and homogeneous symmetric functions at q-power specializations,
RSK, and restricted-length Schur sums.

A specialization is a sequence of exponents ``(a_1, ..., a_p)`` standing for
the variables ``(q^a_1, ..., q^a_p)``.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Iterator, Sequence

from .errors import (
    DomainError,
    InnerNotContained,
    NonconvergentSpec,
    ShapeMismatch,
    SingularDenominator,
)
from .hooks import g_shifted
from .qseries import ONE, QPoly, QRationalFn, QSeries, expand
from .shapes import make_partition

QPowerSpec = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]


def _spec(spec) -> QPowerSpec:
    spec = tuple(int(a) for a in spec)
    if any(a < 0 for a in spec):
        raise ValueError(f"specialization exponents must be >= 0, got {spec}")
    return spec


# -- semistandard tableaux --------------------------------------------------


def iter_ssyt(outer, inner=(), max_entry: int = 1, reverse: bool = False) -> Iterator[Tableau]:
    """All SSYT of skew shape ``outer/inner`` with entries in ``1..max_entry``.

    Tableaux are returned as rows holding only the skew cells.  With
    ``reverse=True`` rows weakly decrease and columns strictly decrease.
    """
    lam, mu = make_partition(outer), make_partition(inner)
    if not lam.contains(mu):
        raise InnerNotContained(f"{mu} is not contained in {lam}")
    mu_p = mu.padded(len(lam))
    cells = [(i, j) for i in range(len(lam)) for j in range(mu_p[i], lam[i])]
    rows = [[0] * lam[i] for i in range(len(lam))]

    def fill(idx):
        if idx == len(cells):
            yield tuple(tuple(rows[i][mu_p[i]:]) for i in range(len(lam)))
            return
        i, j = cells[idx]
        lo = rows[i][j - 1] if j > mu_p[i] else 1
        if i > 0 and j < lam[i - 1] and j >= mu_p[i - 1]:
            lo = max(lo, rows[i - 1][j] + 1)
        for v in range(lo, max_entry + 1):
            rows[i][j] = v
            yield from fill(idx + 1)

    for t in fill(0):
        if reverse:
            yield tuple(tuple(max_entry + 1 - v for v in row) for row in t)
        else:
            yield t


@lru_cache(maxsize=None)
def _skew_schur(lam: tuple, mu: tuple, spec: QPowerSpec) -> QPoly:
    # peel off the cells holding the largest entry: a horizontal strip lam/nu
    if not spec:
        return ONE if lam == mu else QPoly()
    if len(lam) > len(spec) + len(mu):
        return QPoly()
    a = spec[-1]
    mu_p = mu + (0,) * (len(lam) - len(mu))
    total = QPoly()
    lam_next = lam[1:] + (0,)

    def choose(i, nu):
        nonlocal total
        if i == len(lam):
            nu_t = tuple(x for x in nu if x)
            strip = sum(lam) - sum(nu)
            total = total + _skew_schur(nu_t, mu, spec[:-1]).shift(a * strip)
            return
        for v in range(max(lam_next[i], mu_p[i]), lam[i] + 1):
            choose(i + 1, nu + (v,))

    choose(0, ())
    return total


def skew_schur_eval(outer, inner, spec) -> QPoly:
    """``s_{outer/inner}`` at the specialization, by summing over SSYT."""
    lam, mu = make_partition(outer), make_partition(inner)
    if not lam.contains(mu):
        raise InnerNotContained(f"{mu} is not contained in {lam}")
    return _skew_schur(lam.parts, mu.parts, _spec(spec))


def _bareiss_det(mat: list[list[QPoly]]) -> QPoly:
    n = len(mat)
    if n == 0:
        return ONE
    m = [row[:] for row in mat]
    sign, prev = 1, ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not m[r][k].is_zero()), None)
            if swap is None:
                return QPoly()
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev)
        prev = m[k][k]
    return m[n - 1][n - 1] if sign == 1 else -m[n - 1][n - 1]


def _vandermonde(spec: QPowerSpec) -> QPoly:
    """``prod_{i<j} (x_i - x_j)`` with ``x_i = q^spec[i]``."""
    out = ONE
    for i, j in combinations(range(len(spec)), 2):
        out = out * QPoly.binomial(spec[i], spec[j])
    return out


def schur_eval(lam, spec) -> QPoly:
    """``s_lam`` at the specialization via the bialternant formula."""
    lam = make_partition(lam)
    spec = _spec(spec)
    p = len(spec)
    if len(lam) > p:
        return QPoly()
    if p == 0:
        return ONE
    if len(set(spec)) < p:
        return skew_schur_eval(lam, (), spec)
    xs = sorted(spec)
    c, d = xs[0], (xs[1] - xs[0] if p > 1 else 1)
    lp = lam.padded(p)
    if all(xs[i] == c + i * d for i in range(p)):
        # principal specialization: prod_{i<j} (1 - q^{d(l_i - l_j + j - i)}) / (1 - q^{d(j - i)})
        num = ONE
        den = []
        for i, j in combinations(range(p), 2):
            num = num * (ONE - QPoly.monomial(1, d * (lp[i] - lp[j] + j - i)))
            den.append(d * (j - i))
        for b in den:
            num = num.divide_one_minus_q_pow(b)
        return num.shift(c * lam.size + d * sum(i * part for i, part in enumerate(lp)))
    mat = [[QPoly.monomial(1, spec[i] * (lp[j] + p - 1 - j)) for j in range(p)] for i in range(p)]
    return _bareiss_det(mat).exact_div(_vandermonde(spec))


def homog_eval(l: int, spec) -> QPoly:
    """Complete homogeneous ``h_l`` at the specialization."""
    spec = _spec(spec)
    if l < 0:
        return QPoly()
    # h^{(i)}_l = h^{(i-1)}_l + x_i h^{(i)}_{l-1}
    row = [ONE] + [QPoly()] * l
    for a in spec:
        for t in range(1, l + 1):
            row[t] = row[t] + row[t - 1].shift(a)
    return row[l] if spec else (ONE if l == 0 else QPoly())


def _homog_series(spec: QPowerSpec, order: int) -> list[QSeries]:
    """``[h_0, h_1, ...]`` as truncated series, up to the last nonzero one."""
    amin = min(spec)
    top = order // amin
    row = [QSeries.from_poly(ONE, order)] + [QSeries.zero(order) for _ in range(top)]
    for a in spec:
        for t in range(1, top + 1):
            row[t] = row[t] + row[t - 1].shift(a)
    return row


def c_series(s: int, spec, order: int) -> QSeries:
    """``c_s = sum_l h_l h_{l+s}``, truncated; ``c_{-s} = c_s``."""
    spec = _spec(spec)
    if not spec:
        return QSeries.from_poly(ONE if s == 0 else QPoly(), order)
    if min(spec) < 1:
        raise NonconvergentSpec("c_s needs every exponent >= 1")
    s = abs(s)
    h = _homog_series(spec, order)
    total = QSeries.zero(order)
    for l in range(len(h) - s):
        total = total + h[l] * h[l + s]
    return total


# -- RSK ----------------------------------------------------------------------


def _two_line_array(A) -> list[tuple[int, int]]:
    return [
        (i + 1, j + 1)
        for i, row in enumerate(A)
        for j, a in enumerate(row)
        for _ in range(int(a))
    ]


def rsk(A) -> tuple[Tableau, Tableau]:
    """Row-insertion RSK on a nonnegative integer matrix."""
    if any(a < 0 for row in A for a in row):
        raise ValueError("RSK needs a nonnegative matrix")
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for i, j in _two_line_array(A):
        x, r = j, 0
        while True:
            if r == len(P):
                P.append([x])
                Q.append([i])
                break
            row = P[r]
            k = bisect_right(row, x)
            if k == len(row):
                row.append(x)
                Q[r].append(i)
                break
            row[k], x = x, row[k]
            r += 1
    return tuple(map(tuple, P)), tuple(map(tuple, Q))


def _check_ssyt(T) -> None:
    for row in T:
        if any(a > b for a, b in zip(row, row[1:])):
            raise ValueError(f"row {row} is not weakly increasing")
    for upper, lower in zip(T, T[1:]):
        if len(lower) > len(upper) or any(a >= b for a, b in zip(upper, lower)):
            raise ValueError("columns are not strictly increasing")


def rsk_inverse(P, Q, shape: tuple[int, int] | None = None) -> list[list[int]]:
    """Inverse RSK; ``shape`` fixes the matrix size (else it is the minimal one)."""
    P = [list(r) for r in P if len(r)]
    Q = [list(r) for r in Q if len(r)]
    if [len(r) for r in P] != [len(r) for r in Q]:
        raise ShapeMismatch("P and Q have different shapes")
    _check_ssyt(P)
    _check_ssyt(Q)
    n_rows = shape[0] if shape else max((max(r) for r in Q), default=0)
    n_cols = shape[1] if shape else max((max(r) for r in P), default=0)
    A = [[0] * n_cols for _ in range(n_rows)]
    while Q:
        top = max(r[-1] for r in Q)
        # equal entries of Q form a horizontal strip; the rightmost was inserted last
        r = max((k for k in range(len(Q)) if Q[k][-1] == top), key=lambda k: len(Q[k]))
        Q[r].pop()
        x = P[r].pop()
        for rr in range(r - 1, -1, -1):
            row = P[rr]
            k = bisect_left(row, x) - 1
            row[k], x = x, row[k]
        if not Q[r]:
            Q.pop(r)
            P.pop(r)
        A[top - 1][x - 1] += 1
    return A


def schensted_stats(A) -> tuple[int, int]:
    """Longest weakly increasing and longest strictly decreasing subsequence
    lengths of the two-line array of ``A``."""
    word = [j for _, j in _two_line_array(A)]
    inc = [1] * len(word)
    dec = [1] * len(word)
    for b in range(len(word)):
        for a in range(b):
            if word[a] <= word[b]:
                inc[b] = max(inc[b], inc[a] + 1)
            if word[a] > word[b]:
                dec[b] = max(dec[b], dec[a] + 1)
    return max(inc, default=0), max(dec, default=0)


# -- restricted-length sums -----------------------------------------------------


def iter_partitions_weighted(max_len: int, weights: Sequence[int], budget: int) -> Iterator[tuple]:
    """Partitions ``lam`` with ``len(lam) <= max_len`` and
    ``sum lam_i * weights[i] <= budget``; ``weights`` must be nondecreasing
    and positive."""
    max_len = min(max_len, len(weights))

    def rec(i, cap, left, prefix):
        yield prefix
        if i == max_len:
            return
        w = weights[i]
        for v in range(min(cap, left // w), 0, -1):
            yield from rec(i + 1, v, left - v * w, prefix + (v,))

    if budget < 0:
        return
    yield from rec(0, budget, budget, ())


def restricted_sum_by_enumeration(max_len: int, spec, order: int) -> QSeries:
    """``sum_{l(lam) <= max_len} s_lam(spec)`` truncated at ``q^order``."""
    spec = _spec(spec)
    if spec and min(spec) < 1:
        raise NonconvergentSpec("restricted sums need every exponent >= 1")
    total = QSeries.zero(order)
    for lam in iter_partitions_weighted(max_len, sorted(spec), order):
        total = total + QSeries.from_poly(schur_eval(lam, spec), order)
    return total


def shifted_spec(p: int, s: int) -> QPowerSpec:
    """``(q^(1+s), ..., q^(p+s))``."""
    return tuple(range(1 + s, p + s + 1))


def restricted_schur_sum(r: int, p: int, s: int, order: int) -> QSeries:
    if r < 1 or p < 1:
        raise DomainError("need r, p >= 1")
    if s < 0:
        raise NonconvergentSpec("shift must be >= 0")
    return restricted_sum_by_enumeration(r, shifted_spec(p, s), order)


def cauchy_rational(spec) -> QRationalFn:
    """``sum_lam s_lam(x) = prod 1/(1 - x_i) prod_{i<j} 1/(1 - x_i x_j)``."""
    spec = _spec(spec)
    factors = list(spec) + [a + b for a, b in combinations(spec, 2)]
    if any(a < 1 for a in factors):
        raise NonconvergentSpec("Cauchy product needs every exponent >= 1")
    return QRationalFn.from_factors(ONE, factors)


def E1(r: int, p: int, s) -> Fraction:
    """Limit weight of a maximal allowed configuration in the width-``r``
    diagonal strip; ``E1(0, p, s) = 1``."""
    if r < 0 or r > p or s < 0:
        raise DomainError(f"E1 needs 0 <= r <= p and s >= 0, got r={r}, p={p}, s={s}")
    if r % 2:
        h = (r - 1) // 2
        return Fraction(factorial(h + s), factorial(p - h + s)) * E1(r - 1, p, s)
    den = 1
    for l in range(r + 1, 2 * p - r + 2):
        den *= (l + 2 * s) ** (r // 2)
    for l in range(2, r + 1):
        den *= ((l + 2 * s) * (2 * p - l + 2 + 2 * s)) ** (l // 2)
    return Fraction(1, den)


def restricted_schur_limit(r: int, p: int, s: int) -> Fraction:
    """``lim (1-q)^N sum_{l(lam) <= r} s_lam(q^(1+s), ..., q^(p+s))``,
    ``N = rp - binom(r, 2)``."""
    if not 1 <= r <= p:
        raise DomainError(f"need 1 <= r <= p, got r={r}, p={p}")
    n = r * p - comb(r, 2)
    g = g_shifted(tuple(range(p, p - r, -1)))
    return Fraction(g, factorial(n)) * E1(r, p, s) / E1(r, p, 0)


def king_determinant(max_len: int, spec) -> QPoly:
    """``det[x_i^(n-j) - (-1)^m [j > m] x_i^(n-m+j-1)] / prod_{i<j} (x_i - x_j)``."""
    spec = _spec(spec)
    n, m = len(spec), max_len
    if len(set(spec)) < n:
        raise SingularDenominator("repeated exponents make the Vandermonde vanish")
    sign = -1 if m % 2 == 0 else 1  # -(-1)^m
    mat = []
    for a in spec:
        row = []
        for j in range(1, n + 1):
            e = QPoly.monomial(1, a * (n - j))
            if j > m:
                e = e + QPoly.monomial(sign, a * (n - m + j - 1))
            row.append(e)
        mat.append(row)
    return _bareiss_det(mat).exact_div(_vandermonde(spec))


def king_restricted_sum(max_len: int, spec, order: int) -> QSeries:
    """Restricted-length Schur sum from the determinant formula, expanded."""
    return expand(king_rational(max_len, spec), order)


def king_rational(max_len: int, spec) -> QRationalFn:
    """Restricted-length Schur sum as an exact rational function."""
    spec = _spec(spec)
    if spec and min(spec) < 1:
        raise SingularDenominator("a zero exponent makes (1 - x_i) vanish")
    factors = list(spec) + [a + b for a, b in combinations(spec, 2)]
    return QRationalFn.from_factors(king_determinant(max_len, spec), factors)
