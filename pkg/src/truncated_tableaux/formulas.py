"""Product formulas and closed-form generating functions for the three
truncated families, plus the rank-row Schur sum and fixed-diagonal series.

Families:
  * shifted ``delta_n \\ delta_1``;
  * straight ``n^m \\ delta_k`` (``m`` rows of length ``n``);
  * straight ``n^m \\ (k^(k-1), k-1)``.

Counts are assembled in exact rationals and only then checked for
integrality, so a bookkeeping slip shows up as ``NonIntegerResult``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, factorial, prod

from .errors import DomainError, NonIntegerResult
from .hooks import catalan, g_shifted, g_staircase, rectangle_syt
from .oracle import pp_series_oracle
from .qseries import ONE, QPoly, QRationalFn, QSeries, count_from_gf, expand, qbinom
from .shapes import make_shape, rectangle
from .symfunc import E1, c_series, restricted_schur_limit, restricted_schur_sum, schur_eval


class Method(str, enum.Enum):
    FORMULA = "formula"
    ORACLE = "oracle"
    LIMIT = "limit"


@dataclass(frozen=True)
class CountResult:
    value: int
    method: Method
    shape: str

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("counts are nonnegative")


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1 or x < 0:
        raise NonIntegerResult(f"{what} evaluated to {x}")
    return int(x)


# -- shifted staircase minus a box --------------------------------------------


def count_staircase_minus_box(n: int) -> int:
    """Standard fillings of shifted ``delta_n \\ delta_1``: ``g_n C_n C_(n-2) / (2 C_(2n-3))``."""
    if n < 2:
        raise DomainError("need n >= 2")
    value = Fraction(g_staircase(n) * catalan(n) * catalan(n - 2), 2 * catalan(2 * n - 3))
    return _as_int(value, f"staircase formula at n={n}")


def count_staircase_minus_box_limit(n: int) -> int:
    """The same count assembled from the individual ``q -> 1`` limits of the
    factors of the generating function (valid for ``n >= 3``)."""
    if n < 3:
        raise DomainError("the limit assembly needs n >= 3")
    N = comb(n + 1, 2) - 1
    value = Fraction(factorial(N))
    for j in range(n - 1):
        for i in range(j):
            value /= i + j
    value /= 2 * (n - 1)
    # the c_0 + c_1 term: each contributes binom(2n-4, n-2) prod 1/(2n-4+i)
    value *= 2 * comb(2 * n - 4, n - 2)
    for i in range(2, 2 * n - 1):
        value /= 2 * n - 4 + i
    return _as_int(value, f"staircase limit assembly at n={n}")


def gf_staircase_minus_box(n: int, order: int) -> QSeries:
    """Plane-partition series of shifted ``delta_n \\ delta_1`` from the
    ``c_0 + c_1`` closed form."""
    if n < 3:
        raise DomainError("the closed form needs n >= 3")
    u = tuple(range(n - 1, 2 * n - 2))
    factors = list(range(1, n - 1)) + [i + j for i, j in combinations(range(1, n - 1), 2)] + [2 * (n - 1)]
    prefactor = expand(QRationalFn.from_factors(ONE, factors), order)
    return prefactor * (c_series(1, u, order) + c_series(0, u, order))


# -- rectangle minus staircase ---------------------------------------------------


def _normalize(n: int, m: int) -> tuple[int, int]:
    # reflecting in the anti-diagonal swaps n and m and reverses the cell order,
    # which preserves the number of linear extensions
    return (n, m) if n <= m else (m, n)


def _check_rect_staircase(n: int, m: int, k: int) -> None:
    if not (k >= 0 and k + 1 <= n <= m):
        raise DomainError(f"need 1 <= k+1 <= n <= m, got n={n}, m={m}, k={k}")


def _e1_ratio(k: int, m: int, n: int) -> Fraction:
    return E1(k + 1, m, n - k - 1) / E1(k + 1, m, 0)


def count_rect_minus_staircase(n: int, m: int, k: int) -> int:
    """Standard fillings of ``n^m \\ delta_k`` (binomial form)."""
    n, m = _normalize(n, m)
    _check_rect_staircase(n, m, k)
    N = m * n - comb(k + 1, 2)
    value = (
        comb(N, m * (n - k - 1))
        * rectangle_syt(m, n - k - 1)
        * g_shifted(tuple(range(m, m - k - 1, -1)))
        * _e1_ratio(k, m, n)
    )
    return _as_int(Fraction(value), f"rectangle/staircase formula at {(n, m, k)}")


def count_rect_minus_staircase_factorial(n: int, m: int, k: int) -> int:
    """The same count, written with factorials instead of a binomial."""
    n, m = _normalize(n, m)
    _check_rect_staircase(n, m, k)
    N = m * n - comb(k + 1, 2)
    value = (
        Fraction(factorial(N))
        * Fraction(rectangle_syt(m, n - k - 1), factorial(m * (n - k - 1)))
        * Fraction(g_shifted(tuple(range(m, m - k - 1, -1))), factorial((k + 1) * m - comb(k + 1, 2)))
        * _e1_ratio(k, m, n)
    )
    return _as_int(value, f"rectangle/staircase factorial form at {(n, m, k)}")


def count_rect_minus_staircase_limit(n: int, m: int, k: int) -> int:
    """``N!`` times the product of the limits of the Cauchy factor and of the
    restricted Schur sum."""
    n, m = _normalize(n, m)
    _check_rect_staircase(n, m, k)
    N = m * n - comb(k + 1, 2)
    value = Fraction(factorial(N))
    for i in range(1, n - k):
        for j in range(m):
            value /= i + j
    value *= restricted_schur_limit(k + 1, m, n - k - 1)
    return _as_int(value, f"rectangle/staircase limit at {(n, m, k)}")


def gf_rect_minus_staircase(n: int, m: int, k: int, order: int) -> QSeries:
    _check_rect_staircase(n, m, k)
    factors = [i + j for i in range(1, n - k) for j in range(m)]
    prefactor = expand(QRationalFn.from_factors(ONE, factors), order)
    return prefactor * restricted_schur_sum(k + 1, m, n - k - 1, order)


# -- rank-row Schur sums ----------------------------------------------------------


def fq_poly(k: int, m: int) -> list[QPoly]:
    """Coefficients ``a_i(q)`` of ``v^binom(k,2) prod_{i<=k<j<=m} (v q^(m-i) - q^(m-j))``."""
    if not 1 <= k <= m:
        raise DomainError(f"need 1 <= k <= m, got k={k}, m={m}")
    poly = [QPoly()] * comb(k, 2) + [ONE]
    for i in range(1, k + 1):
        for j in range(k + 1, m + 1):
            hi, lo = QPoly.monomial(1, m - i), QPoly.monomial(-1, m - j)
            nxt = [QPoly()] * (len(poly) + 1)
            for d, a in enumerate(poly):
                nxt[d] = nxt[d] + a * lo
                nxt[d + 1] = nxt[d + 1] + a * hi
            poly = nxt
    return poly


def rank_row_rational(k: int, m: int, s: int) -> QRationalFn:
    """``sum_p s_(p^k)(1, q, ..., q^(m-1)) q^(s p)`` as an exact rational function."""
    a = fq_poly(k, m)
    terms = [(i, ai) for i, ai in enumerate(a) if not ai.is_zero()]
    if any(i + s < 1 for i, _ in terms):
        raise DomainError(f"the series diverges for t-exponent s={s}")
    num = QPoly()
    for i, ai in terms:
        others = ONE
        for i2, _ in terms:
            if i2 != i:
                others = others * (ONE - QPoly.monomial(1, i2 + s))
        num = num + ai * others
    # 1 / prod (q^i - q^j) = (-1)^(k(m-k)) q^(-J) / prod (1 - q^(i-j))
    pairs = [(i, j) for i in range(m - k, m) for j in range(m - k)]
    J = sum(j for _, j in pairs)
    num = num.shift(-J)
    if len(pairs) % 2:
        num = -num
    return QRationalFn.from_factors(num, [i + s for i, _ in terms] + [i - j for i, j in pairs])


def rank_row_schur_sum(k: int, m: int, s: int, order: int) -> QSeries:
    return expand(rank_row_rational(k, m, s), order)


def rank_row_schur_sum_direct(k: int, m: int, s: int, order: int) -> QSeries:
    if not 1 <= k <= m or s < 1:
        raise DomainError("need 1 <= k <= m and s >= 1")
    total = QSeries.zero(order)
    for p in range(order // s + 1):
        total = total + QSeries.from_poly(schur_eval((p,) * k, range(m)).shift(s * p), order)
    return total


def beta_integral(a: int, b: int) -> Fraction:
    """``int_0^1 v^a (v - 1)^b dv = (-1)^b b! / ((a+1)(a+2)...(a+b+1))``."""
    if a < 0 or b < 0:
        raise DomainError("need a, b >= 0")
    return Fraction((-1) ** b * factorial(b), prod(range(a + 1, a + b + 2)))


def rank_row_schur_limit(k: int, m: int, s: int) -> Fraction:
    """``lim (1-q)^(mk-k^2+1) sum_p s_(p^k)(1, ..., q^(m-1)) q^(s p)``.

    The ``(1-q)`` that meets ``sum a_i / (1 - q^(i+s))`` turns it into
    ``int_0^1 f_1(v) v^(s-1) dv`` with ``f_1(v) = v^binom(k,2) (v-1)^(k(m-k))``.
    """
    if not 1 <= k <= m or s < 1:
        raise DomainError("need 1 <= k <= m and s >= 1")
    value = beta_integral(comb(k, 2) + s - 1, k * (m - k))
    for i in range(m - k, m):
        for j in range(m - k):
            value /= j - i
    return value


# -- rectangle minus almost square -----------------------------------------------


class TExponent(str, enum.Enum):
    """Two candidate exponents ``s`` for ``t = q^s`` in the almost-square series.

    ``CORNER`` counts the weight of the ``k`` diagonal copies of the corner value
    with multiplier ``n-k+1`` and removes the ``binom(k+1,2) - 1`` padded boxes;
    ``SHORT`` uses ``n-k`` instead.  Only ``CORNER`` matches enumeration.
    """

    CORNER = "corner"
    SHORT = "short"


VERIFIED_T_EXPONENT = TExponent.CORNER


def almost_square_t_exponent(n: int, k: int, variant: TExponent | str = VERIFIED_T_EXPONENT) -> int:
    mult = n - k + 1 if TExponent(variant) is TExponent.CORNER else n - k
    return k * mult - comb(k + 1, 2) + 1


def _check_almost_square(n: int, m: int, k: int) -> None:
    if not (1 <= k <= n <= m and 2 * k <= n + 1):
        raise DomainError(f"need 1 <= k <= n <= m and 2k <= n+1, got n={n}, m={m}, k={k}")


def almost_square_rational(n: int, m: int, k: int, variant: TExponent | str = VERIFIED_T_EXPONENT) -> QRationalFn:
    _check_almost_square(n, m, k)
    cauchy = QRationalFn.from_factors(ONE, [i + j for i in range(m) for j in range(1, n - k + 1)])
    return cauchy * rank_row_rational(k, m, almost_square_t_exponent(n, k, variant))


def gf_rect_minus_almost_square(
    n: int, m: int, k: int, order: int, variant: TExponent | str = VERIFIED_T_EXPONENT
) -> QSeries:
    return expand(almost_square_rational(n, m, k, variant), order)


def count_rect_minus_almost_square(n: int, m: int, k: int) -> int:
    """Standard fillings of ``n^m \\ (k^(k-1), k-1)`` (binomial form)."""
    n, m = _normalize(n, m)
    _check_almost_square(n, m, k)
    value = (
        Fraction(comb(n * m - k * k + 1, m * (n - k)), comb(k * (m + n - 2 * k) + 1, k * n - k * k))
        * rectangle_syt(n - k, m)
        * rectangle_syt(k, m - k)
    )
    return _as_int(value, f"almost-square formula at {(n, m, k)}")


def count_rect_minus_almost_square_factorial(n: int, m: int, k: int) -> int:
    n, m = _normalize(n, m)
    _check_almost_square(n, m, k)
    value = (
        Fraction(factorial(n * m - k * k + 1) * rectangle_syt(n - k, m), factorial(m * (n - k)))
        * Fraction(rectangle_syt(k, m - k), factorial((m - k) * k))
        * Fraction(factorial(k * n - k * k) * factorial(k * (m - k)), factorial(m * k + k * n - 2 * k * k + 1))
    )
    return _as_int(value, f"almost-square factorial form at {(n, m, k)}")


def count_rect_minus_almost_square_limit(n: int, m: int, k: int) -> int:
    """``N!`` times the exact ``q -> 1`` limit of the closed-form series."""
    n, m = _normalize(n, m)
    _check_almost_square(n, m, k)
    return count_from_gf(almost_square_rational(n, m, k), n * m - k * k + 1)


def count_rect_minus_almost_square_lemma(n: int, m: int, k: int) -> int:
    """Same count from the limit of the Cauchy factor times ``rank_row_schur_limit``."""
    n, m = _normalize(n, m)
    _check_almost_square(n, m, k)
    N = n * m - k * k + 1
    value = Fraction(factorial(N))
    for i in range(m):
        for j in range(1, n - k + 1):
            value /= i + j
    value *= rank_row_schur_limit(k, m, almost_square_t_exponent(n, k))
    return _as_int(value, f"almost-square lemma assembly at {(n, m, k)}")


# -- boxed plane partitions with a fixed corner or diagonal -----------------------


def macmahon_square_rational(n: int) -> QRationalFn:
    return QRationalFn.from_factors(ONE, [i + j - 1 for i in range(1, n + 1) for j in range(1, n + 1)])


@dataclass
class CornerRatioReport:
    n: int
    b: int
    order: int
    lhs: QSeries
    rhs: QPoly
    match: bool
    alpha: int | None
    notes: list[str] = field(default_factory=list)

    def summary(self) -> str:
        if self.match:
            return f"n={self.n} b={self.b}: ratio matches the product"
        if self.alpha is not None:
            return f"n={self.n} b={self.b}: ratio equals q^{self.alpha} times the product"
        return f"n={self.n} b={self.b}: ratio differs from the product by more than a monomial"


def corner_ratio_series(n: int, b: int, order: int) -> QSeries:
    """Series of ``F(n x n, T[1][n] = b) / F(n x n)`` from enumeration."""
    num = pp_series_oracle(make_shape(rectangle(n, n)), order, fixed={(1, n): b})
    for a in (i + j - 1 for i in range(1, n + 1) for j in range(1, n + 1)):
        num = num.times_one_minus_q_pow(a)
    return num


def corner_ratio_check(n: int, b: int, order: int) -> CornerRatioReport:
    """Compare the fixed-corner ratio with ``prod_(i=1..n) (1 - q^(n-1+i)) [n+b-1, b]_q``."""
    if n < 1 or b < 0:
        raise DomainError("need n >= 1 and b >= 0")
    lhs = corner_ratio_series(n, b, order)
    rhs = qbinom(n + b - 1, b)
    for i in range(1, n + 1):
        rhs = rhs * (ONE - QPoly.monomial(1, n - 1 + i))
    rhs_s = QSeries.from_poly(rhs, order)
    if lhs == rhs_s:
        return CornerRatioReport(n, b, order, lhs, rhs, True, 0)
    nz = [d for d in range(order + 1) if lhs[d]]
    alpha = None
    if nz and nz[0] >= rhs.low_degree():
        cand = nz[0] - rhs.low_degree()
        if lhs == rhs_s.shift(cand):
            alpha = cand
    return CornerRatioReport(n, b, order, lhs, rhs, False, alpha)


def _check_diagonal(n: int, k: int, mu) -> tuple[int, ...]:
    mu = tuple(mu)
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    if len(tuple(x for x in mu if x)) > k:
        raise DomainError(f"need l(mu) <= k, got mu={mu}, k={k}")
    return tuple(mu) + (0,) * (k - len(mu))


def fixed_diagonal_rational(n: int, k: int, mu) -> QRationalFn:
    """Plane partitions of the ``n x n`` square with
    ``(T[1][n-k+1], ..., T[k][n]) = mu``:
    ``q^((n-k+1)|mu|) s_mu(1..q^(k-1)) s_mu(1..q^(n-1)) prod_(i<=n, j<=n-k) 1/(1 - q^(i+j-1))``."""
    mu = _check_diagonal(n, k, mu)
    lam = tuple(x for x in mu if x)
    num = (schur_eval(lam, range(k)) * schur_eval(lam, range(n))).shift((n - k + 1) * sum(mu))
    return QRationalFn.from_factors(num, [i + j - 1 for i in range(1, n + 1) for j in range(1, n - k + 1)])


def fixed_diagonal_gf(n: int, k: int, mu, order: int) -> QSeries:
    return expand(fixed_diagonal_rational(n, k, mu), order)


def fixed_diagonal_oracle(n: int, k: int, mu, order: int) -> QSeries:
    mu = _check_diagonal(n, k, mu)
    pins = {(i, n - k + i): mu[i - 1] for i in range(1, k + 1)}
    return pp_series_oracle(make_shape(rectangle(n, n)), order, fixed=pins)


def _bialternant_ratio(mu, width: int, den_pairs, q: Fraction) -> Fraction:
    mu = tuple(mu) + (0,) * (width - len(mu))
    num = prod(
        (q ** (mu[i - 1] + width - i) - q ** (mu[j - 1] + width - j) for i in range(1, width + 1) for j in range(i + 1, width + 1)),
        start=Fraction(1),
    )
    den = prod((q**j - q**i for i, j in den_pairs), start=Fraction(1))
    return num / den


def fixed_diagonal_printed(n: int, k: int, mu, q: Fraction, average: bool = False) -> Fraction:
    """The fixed-diagonal product exactly as its index ranges are commonly
    printed, evaluated at a rational ``q``; ``average=True`` gives the
    normalized variant whose last product runs over ``n-k < j <= n``."""
    mu = _check_diagonal(n, k, mu)
    q = Fraction(q)
    pairs_n = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    pairs_k = [(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)]
    if not average:
        pairs_k = [(i, j) for i in range(0, k + 1) for j in range(i + 1, k + 1)]
    value = q ** ((n - k + 1) * sum(mu))
    value *= _bialternant_ratio(mu, n, pairs_n, q)
    value *= _bialternant_ratio(mu, k, pairs_k, q)
    cols = range(n - k + 1, n + 1) if average else range(1, n - k + 1)
    for i in range(1, n + 1):
        for j in cols:
            value /= 1 - q ** (i + j - 1)
    return value


def fixed_diagonal_average(n: int, k: int, mu) -> QRationalFn:
    """``F(n x n, diagonal = mu) / F(n x n)`` as a rational function (a polynomial
    times ``prod_(i<=n, n-k<j<=n) (1 - q^(i+j-1))``)."""
    f = fixed_diagonal_rational(n, k, mu)
    num = f.num
    for i in range(1, n + 1):
        for j in range(n - k + 1, n + 1):
            num = num * (ONE - QPoly.monomial(1, i + j - 1))
    return QRationalFn(num)


@dataclass
class DiagonalReport:
    n: int
    k: int
    mu: tuple[int, ...]
    q: Fraction
    closed_form: Fraction
    printed: Fraction
    average: Fraction
    printed_average: Fraction

    @property
    def printed_matches(self) -> bool:
        return self.closed_form == self.printed

    @property
    def printed_average_matches(self) -> bool:
        return self.average == self.printed_average

    def summary(self) -> str:
        return (
            f"n={self.n} k={self.k} mu={self.mu}: printed product "
            f"{'matches' if self.printed_matches else f'off by factor {self.printed / self.closed_form}'}; "
            f"printed average {'matches' if self.printed_average_matches else f'off by factor {self.printed_average / self.average}'}"
        )


def fixed_diagonal_report(n: int, k: int, mu, q: Fraction = Fraction(1, 2)) -> DiagonalReport:
    mu_t = _check_diagonal(n, k, mu)
    q = Fraction(q)
    return DiagonalReport(
        n,
        k,
        mu_t,
        q,
        fixed_diagonal_rational(n, k, mu_t)(q),
        fixed_diagonal_printed(n, k, mu_t, q),
        fixed_diagonal_average(n, k, mu_t)(q),
        fixed_diagonal_printed(n, k, mu_t, q, average=True),
    )

