"""Exact integer polynomials, truncated power series and ``prod (1 - q^a)``
rational functions in a formal variable ``q``.

Everything here is exact: coefficients are Python ints, scalars are
``fractions.Fraction``.  Denominators of rational functions are kept as a
multiset of exponents ``a`` standing for factors ``(1 - q^a)``, which makes the
order of the pole at ``q = 1`` and the residual values there cheap to read off.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import zip_longest
from math import factorial, prod
from typing import Iterable, Mapping

from .errors import NonIntegerResult, ValuationMismatch

DEFAULT_ORDER = 20


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class QPoly:
    """Integer polynomial in ``q``; ``coeffs[d]`` is the coefficient of ``q^d``."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, d: int) -> "QPoly":
        if d < 0:
            raise ValueError("negative degree")
        return cls((0,) * d + (c,))

    @classmethod
    def binomial(cls, a: int, b: int) -> "QPoly":
        """``q^a - q^b``."""
        return cls.monomial(1, a) - cls.monomial(1, b)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def low_degree(self) -> int:
        """Index of the lowest nonzero coefficient (q-adic valuation)."""
        for d, c in enumerate(self.coeffs):
            if c:
                return d
        raise ValueError("zero polynomial has no low degree")

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __add__(self, other):
        if isinstance(other, QSeries):
            return NotImplemented
        other = _as_poly(other)
        return QPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return NotImplemented
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = QPoly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def shift(self, d: int) -> "QPoly":
        """Multiply by ``q^d``; negative ``d`` divides and must be exact."""
        if d >= 0:
            return QPoly((0,) * d + self.coeffs)
        if any(self.coeffs[:-d]):
            raise ArithmeticError(f"{self} is not divisible by q^{-d}")
        return QPoly(self.coeffs[-d:])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        """Long division over the rationals; returns integer polys or raises."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        dq = other.degree
        lead = other.coeffs[-1]
        if lead in (1, -1):
            rem = list(self.coeffs)
            quot = [0] * max(len(rem) - dq, 0)
            for i in range(len(rem) - 1, dq - 1, -1):
                c = rem[i] * lead
                if c:
                    quot[i - dq] = c
                    for j, b in enumerate(other.coeffs):
                        rem[i - dq + j] -= c * b
            return QPoly(quot), QPoly(rem[:dq])
        rem = [Fraction(c) for c in self.coeffs]
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lead
            if c:
                quot[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        if any(c.denominator != 1 for c in quot + rem):
            raise ArithmeticError("division leaves non-integer coefficients")
        return QPoly(int(c) for c in quot), QPoly(int(c) for c in rem[:dq])

    def exact_div(self, other: "QPoly") -> "QPoly":
        quot, rem = self.divmod(other)
        if not rem.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return quot

    def divide_one_minus_q_pow(self, a: int) -> "QPoly":
        """Exact division by ``1 - q^a``."""
        c = list(self.coeffs)
        for i in range(a, len(c)):
            c[i] += c[i - a]
        cut = max(len(c) - a, 0)
        if any(c[cut:]):
            raise ArithmeticError(f"not divisible by (1 - q^{a})")
        return QPoly(c[:cut])

    def split_one_minus_q(self) -> tuple[int, "QPoly"]:
        """Write ``self = (1 - q)^v * r`` with ``r(1) != 0``; return ``(v, r)``."""
        if self.is_zero():
            raise ValueError("zero polynomial has infinite valuation at q=1")
        v, p = 0, self.coeffs
        while sum(p) == 0:
            acc, r = 0, []
            for c in p[:-1]:
                acc += c
                r.append(acc)
            p, v = tuple(r), v + 1
        return v, QPoly(p)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "QPoly(0)"
        terms = []
        for d, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if d == 0 else f"{c}*q^{d}")
        return "QPoly(" + " + ".join(terms) + ")"


def _as_poly(x) -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly.const(x)
    raise TypeError(f"cannot treat {type(x).__name__} as a QPoly")


ONE = QPoly.const(1)
Q = QPoly.monomial(1, 1)


def one_minus_q_pow(a: int) -> QPoly:
    return ONE - QPoly.monomial(1, a)


def q_integer(a: int) -> QPoly:
    """``[a]_q = 1 + q + ... + q^(a-1)``."""
    return QPoly((1,) * a)


@dataclass(frozen=True)
class QSeries:
    """Power series in ``q`` known exactly through ``q^order``."""

    coeffs: tuple[int, ...]
    order: int

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs[: self.order + 1])
        c += (0,) * (self.order + 1 - len(c))
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_poly(cls, p: QPoly, order: int = DEFAULT_ORDER) -> "QSeries":
        return cls(p.coeffs, order)

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "QSeries":
        return cls((), order)

    def __getitem__(self, d: int) -> int:
        if d > self.order:
            raise IndexError(f"coefficient q^{d} beyond truncation order {self.order}")
        return self.coeffs[d] if d >= 0 else 0

    def __len__(self) -> int:
        return self.order + 1

    def _coerce(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return other
        return QSeries.from_poly(_as_poly(other), self.order)

    def __add__(self, other):
        other = self._coerce(other)
        m = min(self.order, other.order)
        return QSeries(tuple(a + b for a, b in zip(self.coeffs[: m + 1], other.coeffs)), m)

    __radd__ = __add__

    def __neg__(self):
        return QSeries(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        m = min(self.order, other.order)
        out = [0] * (m + 1)
        for i, a in enumerate(self.coeffs[: m + 1]):
            if a:
                for j, b in enumerate(other.coeffs[: m + 1 - i]):
                    out[i + j] += a * b
        return QSeries(tuple(out), m)

    __rmul__ = __mul__

    def shift(self, d: int) -> "QSeries":
        return QSeries((0,) * d + self.coeffs, self.order)

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return QSeries(self.coeffs, order)

    def to_poly(self) -> QPoly:
        return QPoly(self.coeffs)

    def divide_one_minus_q_pow(self, a: int) -> "QSeries":
        """Multiply by ``1/(1 - q^a)``."""
        c = list(self.coeffs)
        for i in range(a, len(c)):
            c[i] += c[i - a]
        return QSeries(tuple(c), self.order)

    def times_one_minus_q_pow(self, a: int) -> "QSeries":
        c = list(self.coeffs)
        for i in range(len(c) - 1, a - 1, -1):
            c[i] -= c[i - a]
        return QSeries(tuple(c), self.order)

    def __repr__(self) -> str:
        return f"QSeries({list(self.coeffs)}, order={self.order})"


@dataclass(frozen=True)
class QRationalFn:
    """``num / (den_extra * prod_a (1 - q^a)^den[a])``.

    ``den_extra`` must have constant term +-1 for the series expansion to have
    integer coefficients.
    """

    num: QPoly
    den: Mapping[int, int] = field(default_factory=dict)
    den_extra: QPoly = ONE

    def __post_init__(self):
        den = Counter()
        for a, mult in dict(self.den).items():
            if a < 1:
                raise ValueError(f"denominator factor (1 - q^{a}) needs a >= 1")
            if mult:
                den[a] += mult
        object.__setattr__(self, "den", dict(sorted(den.items())))
        object.__setattr__(self, "num", _as_poly(self.num))

    @classmethod
    def from_factors(cls, num: QPoly, factors: Iterable[int], den_extra: QPoly = ONE):
        return cls(num, Counter(factors), den_extra)

    def __mul__(self, other: "QRationalFn") -> "QRationalFn":
        if isinstance(other, (QPoly, int)):
            return QRationalFn(self.num * other, self.den, self.den_extra)
        den = Counter(self.den)
        den.update(other.den)
        return QRationalFn(self.num * other.num, den, self.den_extra * other.den_extra)

    __rmul__ = __mul__

    def pole_order_at_one(self) -> int:
        """Order of the pole of the function at ``q = 1`` (negative for a zero)."""
        vn, _ = self.num.split_one_minus_q()
        ve, _ = self.den_extra.split_one_minus_q()
        return sum(self.den.values()) + ve - vn

    def __call__(self, x):
        d = self.den_extra(x) * prod((1 - x**a) ** m for a, m in self.den.items())
        return Fraction(self.num(x)) / d if isinstance(x, (int, Fraction)) else self.num(x) / d


def qbinom(a: int, b: int) -> QPoly:
    """Gaussian binomial coefficient ``[a choose b]_q``."""
    if b < 0 or a < 0 or b > a:
        return QPoly()
    return _qbinom(a, min(b, a - b))


@lru_cache(maxsize=None)
def _qbinom(a: int, b: int) -> QPoly:
    if b == 0 or b == a:
        return ONE
    # [a, b] = [a-1, b-1] + q^b [a-1, b]
    return qbinom(a - 1, b - 1) + qbinom(a - 1, b).shift(b)


def expand(f: QRationalFn, order: int = DEFAULT_ORDER) -> QSeries:
    s = QSeries.from_poly(f.num, order)
    for a, mult in f.den.items():
        for _ in range(mult):
            s = s.divide_one_minus_q_pow(a)
    e = f.den_extra
    if e != ONE:
        if e[0] not in (1, -1):
            raise ArithmeticError("den_extra must have constant term +-1")
        c = list(s.coeffs)
        out = []
        for i in range(order + 1):
            v = c[i] - sum(e[j] * out[i - j] for j in range(1, min(i, e.degree) + 1))
            out.append(v * e[0])
        s = QSeries(tuple(out), order)
    return s


def limit_at_one(f: QRationalFn, n: int) -> Fraction:
    """Exact ``lim_{q -> 1} (1 - q)^n f(q)``; the pole order of ``f`` must be ``n``."""
    vn, num_res = f.num.split_one_minus_q()
    ve, extra_res = f.den_extra.split_one_minus_q()
    pole = sum(f.den.values()) + ve - vn
    if pole != n:
        raise ValuationMismatch(f"pole order at q=1 is {pole}, not {n}")
    residual = prod(a**m for a, m in f.den.items()) * extra_res(1)
    return Fraction(num_res(1), residual)


def count_from_gf(f: QRationalFn, n: int) -> int:
    """``n! * lim (1-q)^n F(q)``: the number of linear extensions of an
    ``n``-cell shape whose plane-partition generating function is ``F``."""
    value = factorial(n) * limit_at_one(f, n)
    if value.denominator != 1 or value < 0:
        raise NonIntegerResult(f"expected a nonnegative integer, got {value}")
    return int(value)


def rational_from_series(series: QSeries, den: Iterable[int], num_degree: int) -> QRationalFn:
    """Recover ``num / prod (1 - q^a)`` from enough terms of its expansion.

    Raises ``ValueError`` unless the coefficients of ``series * prod (1 - q^a)``
    vanish from ``q^(num_degree+1)`` up to the truncation order, so callers
    should supply a series with some slack past ``num_degree``.
    """
    den = list(den)
    s = series
    for a in den:
        s = s.times_one_minus_q_pow(a)
    if num_degree >= s.order:
        raise ValueError("series too short to certify the numerator degree")
    tail = s.coeffs[num_degree + 1 :]
    if any(tail):
        raise ValueError("numerator does not terminate at the stated degree")
    return QRationalFn.from_factors(QPoly(s.coeffs[: num_degree + 1]), den)
