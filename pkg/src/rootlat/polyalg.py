"""Exact integer polynomials, bivariate polynomials and truncated power series.

Everything here works over Python ints, so there is no overflow and no
rounding. A :class:`Poly` is a dense list of coefficients in ascending
degree; a :class:`BivPoly` is a list of such polynomials indexed by the
power of ``z``; a :class:`BiSeries` is a :class:`BivPoly` truncated at a
fixed ``z`` order.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from math import comb
from typing import Iterable, Sequence, Union

from .errors import DegreeTooLarge, NonInvertibleDenominator

DEFAULT_ORDER = 16


def _trim(seq: Iterable) -> tuple:
    out = list(seq)
    while out and not out[-1]:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Poly:
    """Univariate polynomial with integer coefficients, ascending degree.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    coeffs: tuple = ()

    def __post_init__(self):
        for c in self.coeffs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def of(cls, *coeffs: int) -> "Poly":
        return cls(tuple(coeffs))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "Poly":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __getitem__(self, k: int) -> int:
        return self.coeff(k)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def tolist(self) -> list:
        return list(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return Poly(tuple(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly(tuple(c * other for c in self.coeffs))
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        result, base = Poly((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, value):
        """Evaluate at an int, or compose with another Poly (Horner)."""
        acc = Poly() if isinstance(value, Poly) else 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def shift(self, c: int) -> "Poly":
        """Return p(x + c)."""
        return self(Poly((c, 1)))

    def divmod(self, other: "Poly") -> tuple:
        """Polynomial long division over the integers.

        Raises ``ArithmeticError`` if a quotient coefficient is not an integer.
        """
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = len(rem) - len(other.coeffs) + 1
        if dq <= 0:
            return Poly(), self
        quo = [0] * dq
        for k in range(dq - 1, -1, -1):
            c = rem[k + len(other.coeffs) - 1]
            if c % lead:
                raise ArithmeticError("non-integral quotient")
            q = c // lead
            quo[k] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= q * b
        return Poly(tuple(quo)), Poly(tuple(rem))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}x" if k == 1 else f"{c}x^{k}")
        return "Poly(" + " + ".join(terms) + ")"


def _as_poly(obj):
    if isinstance(obj, Poly):
        return obj
    if isinstance(obj, int):
        return Poly((obj,))
    return NotImplemented


ONE = Poly((1,))
X = Poly.x()


@dataclass(frozen=True)
class FVector:
    """Face counts ``(f_-1, f_0, ..., f_d)`` of a ``d``-dimensional complex."""

    d: int
    counts: tuple

    def __post_init__(self):
        counts = tuple(self.counts)
        object.__setattr__(self, "counts", counts)
        if len(counts) != self.d + 2:
            raise ValueError(f"expected {self.d + 2} counts for d={self.d}, got {len(counts)}")
        if counts[0] != 1:
            raise ValueError("f_-1 must be 1")
        if any(c < 0 for c in counts):
            raise ValueError("face counts must be nonnegative")

    def __getitem__(self, i: int) -> int:
        """Number of ``i``-dimensional faces, ``-1 <= i <= d``."""
        if not -1 <= i <= self.d:
            raise IndexError(i)
        return self.counts[i + 1]

    def f_poly(self) -> Poly:
        """``sum_i f_i x^(d-i)``; the empty face sits at ``x^(d+1)``."""
        return Poly(tuple(reversed(self.counts)))

    @classmethod
    def from_f_poly(cls, p: Poly, d: int) -> "FVector":
        if p.degree > d + 1:
            raise DegreeTooLarge(f"degree {p.degree} exceeds {d + 1}")
        return cls(d, tuple(p.coeff(d - i) for i in range(-1, d + 1)))

    def euler_characteristic(self) -> int:
        """Reduced-free Euler characteristic ``sum_{k>=0} (-1)^k f_k``."""
        return sum((-1) ** k * self[k] for k in range(self.d + 1))


def transform_f_to_h(f: FVector) -> Poly:
    """h(x) = f(x - 1), with f(x) = sum_i f_i x^(d-i)."""
    return f.f_poly().shift(-1)


def transform_h_to_f(h: Poly, d: int) -> FVector:
    """Inverse of :func:`transform_f_to_h` for a ``d``-dimensional complex."""
    return FVector.from_f_poly(h.shift(1), d)


def reverse(p: Poly, d: int) -> Poly:
    """x^d p(1/x)."""
    if p.degree > d:
        raise DegreeTooLarge(f"degree {p.degree} exceeds {d}")
    padded = list(p.coeffs) + [0] * (d + 1 - len(p.coeffs))
    return Poly(tuple(reversed(padded)))


def expand_growth(h: Poly, rank: int, kmax: int) -> list:
    """Taylor coefficients 0..kmax of h(x) / (1 - x)^rank."""
    if rank < 1:
        raise ValueError("rank must be >= 1")
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    return [
        sum(h.coeff(j) * comb(rank - 1 + k - j, rank - 1) for j in range(min(k, h.degree) + 1))
        for k in range(kmax + 1)
    ]


@dataclass(frozen=True)
class BivPoly:
    """Polynomial in ``z`` and ``x``; ``rows[r]`` is the coefficient of ``z^r``."""

    rows: tuple = ()

    def __post_init__(self):
        rows = tuple(r if isinstance(r, Poly) else Poly(tuple(r)) for r in self.rows)
        object.__setattr__(self, "rows", _trim(rows))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> "BivPoly":
        return cls(tuple(Poly(tuple(row)) for row in matrix))

    @classmethod
    def const(cls, p: Union[int, Poly]) -> "BivPoly":
        return cls((_as_poly(p),))

    @classmethod
    def z(cls) -> "BivPoly":
        return cls((Poly(), ONE))

    @classmethod
    def x(cls) -> "BivPoly":
        return cls((X,))

    def matrix(self) -> list:
        width = max((len(r) for r in self.rows), default=0)
        return [[r.coeff(k) for k in range(width)] for r in self.rows]

    def row(self, r: int) -> Poly:
        return self.rows[r] if 0 <= r < len(self.rows) else Poly()

    @property
    def z_degree(self) -> int:
        return len(self.rows) - 1

    def __add__(self, other):
        other = _as_biv(other)
        return BivPoly(tuple(a + b for a, b in zip_longest(self.rows, other.rows, fillvalue=Poly())))

    __radd__ = __add__

    def __neg__(self):
        return BivPoly(tuple(-r for r in self.rows))

    def __sub__(self, other):
        return self + (-_as_biv(other))

    def __rsub__(self, other):
        return _as_biv(other) - self

    def __mul__(self, other):
        other = _as_biv(other)
        if not self.rows or not other.rows:
            return BivPoly()
        out = [Poly()] * (len(self.rows) + len(other.rows) - 1)
        for i, a in enumerate(self.rows):
            if a:
                for j, b in enumerate(other.rows):
                    out[i + j] = out[i + j] + a * b
        return BivPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BivPoly":
        result, base = BivPoly((ONE,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def truncate(self, order: int) -> "BivPoly":
        return BivPoly(self.rows[: order + 1])

    def compose_z(self, num: "BivPoly", den: "BivPoly", degree: int = None) -> "BivPoly":
        """Numerator of ``self(num/den, x)`` over the common denominator ``den^degree``.

        ``degree`` defaults to the z-degree of ``self``.
        """
        if degree is None:
            degree = self.z_degree
        if degree < self.z_degree:
            raise DegreeTooLarge("degree below z-degree")
        total = BivPoly()
        for r, row in enumerate(self.rows):
            if row:
                total = total + BivPoly.const(row) * num ** r * den ** (degree - r)
        return total


def _as_biv(obj) -> BivPoly:
    if isinstance(obj, BivPoly):
        return obj
    if isinstance(obj, (int, Poly)):
        return BivPoly.const(obj)
    raise TypeError(f"cannot coerce {type(obj).__name__} to BivPoly")


@dataclass(frozen=True)
class BiSeries:
    """Power series in ``z`` truncated after ``z^order``; coefficients are Polys in x."""

    order: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)[: self.order + 1]
        coeffs = coeffs + (Poly(),) * (self.order + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_biv(cls, p: BivPoly, order: int) -> "BiSeries":
        return cls(order, p.rows)

    def __getitem__(self, r: int) -> Poly:
        return self.coeffs[r]

    def __len__(self) -> int:
        return len(self.coeffs)

    def to_biv(self) -> BivPoly:
        return BivPoly(self.coeffs)

    def __add__(self, other: "BiSeries") -> "BiSeries":
        order = min(self.order, other.order)
        return BiSeries(order, tuple(self[r] + other[r] for r in range(order + 1)))

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        order = min(self.order, other.order)
        return BiSeries(order, tuple(self[r] - other[r] for r in range(order + 1)))

    def __mul__(self, other):
        if isinstance(other, BivPoly):
            other = BiSeries.from_biv(other, self.order)
        order = min(self.order, other.order)
        out = []
        for r in range(order + 1):
            acc = Poly()
            for i in range(r + 1):
                acc = acc + self[i] * other[r - i]
            out.append(acc)
        return BiSeries(order, tuple(out))


def series_expand_rational(num: BivPoly, den: BivPoly, order: int = DEFAULT_ORDER) -> BiSeries:
    """Expand ``num / den`` as a power series in ``z`` up to ``z^order``.

    The ``z^0`` row of ``den`` must be a polynomial in ``x`` with constant term
    +-1, and every coefficient of the quotient must come out as a polynomial in
    ``x`` (exact division); otherwise :class:`NonInvertibleDenominator`.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    d0 = den.row(0)
    if d0.coeff(0) not in (1, -1):
        raise NonInvertibleDenominator(
            f"z^0 x^0 coefficient of denominator is {d0.coeff(0)}, expected +-1"
        )
    out = []
    for r in range(order + 1):
        acc = num.row(r)
        for i in range(1, min(r, den.z_degree) + 1):
            acc = acc - den.row(i) * out[r - i]
        try:
            q, rem = acc.divmod(d0)
        except ArithmeticError as exc:
            raise NonInvertibleDenominator(f"z^{r} coefficient is not a polynomial in x") from exc
        if rem:
            raise NonInvertibleDenominator(f"z^{r} coefficient is not a polynomial in x")
        out.append(q)
    return BiSeries(order, tuple(out))
