"""Generating-function pipeline for the boundary triangulations of P_{D_n} and P_{C_n}.

All rational generating functions are kept as explicit numerator/denominator
:class:`BivPoly` pairs and expanded with :func:`series_expand_rational`. The
empty face is never part of these series; it is added once, as ``f_-1``, when
an :class:`FVector` is built.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .coordinator import even_part_binomial
from .errors import OrderExceeded
from .polyalg import (
    DEFAULT_ORDER,
    ONE,
    X,
    BiSeries,
    BivPoly,
    FVector,
    Poly,
    series_expand_rational,
    transform_f_to_h,
)

Z = BivPoly.z()
XB = BivPoly.x()
ONE_B = BivPoly.const(1)


@dataclass(frozen=True)
class Rational:
    num: BivPoly
    den: BivPoly

    def expand(self, order: int = DEFAULT_ORDER) -> BiSeries:
        return series_expand_rational(self.num, self.den, order)


def hypersimplex_gf() -> Rational:
    """Face generating function of the standard triangulation of the second hypersimplex.

    z^2 / (1 - z) * (1 + (1+x) z (z+x-2)) / ((xz+z-1)^2 ((1+x) z (z-2) + 1)).
    The coefficient of z^n x^k counts k-faces of that triangulation of
    Delta_{2,n}; no empty face.
    """
    num = Z ** 2 * (ONE_B + (ONE_B + XB) * Z * (Z + XB - 2))
    den = (ONE_B - Z) * (XB * Z + Z - 1) ** 2 * ((ONE_B + XB) * Z * (Z - 2) + 1)
    return Rational(num, den)


def interior_cross_total_gf() -> Rational:
    """-2xz^2(2xz+z-2) / (2xz+z-1)^2: interior faces of all 2n cross-polytope facets."""
    q = 2 * XB * Z + Z
    return Rational(-2 * XB * Z ** 2 * (q - 2), (q - 1) ** 2)


def hypersimplex_total_gf_substituted() -> Rational:
    """(1+z)^-1 F_Delta(2z/(1+z), x), obtained by substitution and clearing (1+z)."""
    f = hypersimplex_gf()
    a, b = 2 * Z, ONE_B + Z
    deg = max(f.num.z_degree, f.den.z_degree)
    num = f.num.compose_z(a, b, deg)
    den = f.den.compose_z(a, b, deg) * b
    return Rational(num, den)


def hypersimplex_total_gf_closed() -> Rational:
    """4z^2/((z-1)^2-4xz) * (2xz(x+1)/(2xz+z-1)^2 - 1/(z-1)) over one denominator."""
    q = 2 * XB * Z + Z - 1
    num = 4 * Z ** 2 * (2 * XB * Z * (XB + 1) * (Z - 1) - q ** 2)
    den = ((Z - 1) ** 2 - 4 * XB * Z) * q ** 2 * (Z - 1)
    return Rational(num, den)


def hd_gf() -> Rational:
    """Generating function sum_n h_{D_n}(x) z^n in closed form."""
    xp1, x2p1 = ONE_B + XB, ONE_B + XB ** 2
    xm1 = XB - 1
    num = Z ** 2 * (
        xp1 ** 2
        - 3 * xp1 * x2p1 * Z
        + (3 + XB ** 2) * (ONE_B + 3 * XB ** 2) * Z ** 2
        - xm1 ** 2 * xp1 * x2p1 * Z ** 3
    )
    den = (XB * Z + Z - 1) ** 2 * (ONE_B - 2 * Z * xp1 + Z ** 2 * xm1 ** 2)
    return Rational(num, den)


def hc_gf() -> Rational:
    """Generating function sum_n h_{C_n}(x) z^n in closed form."""
    xm1 = XB - 1
    num = Z ** 2 * (ONE_B + 6 * XB + XB ** 2 - xm1 ** 2 * (XB + 1) * Z)
    den = ONE_B - 2 * (XB + 1) * Z + xm1 ** 2 * Z ** 2
    return Rational(num, den)


def cone_cross_total_gf() -> Rational:
    """-2(2x+1)z^2(2xz+z-2)/(2xz+z-1)^2: faces added by coning the cross facets of P_{C_n}."""
    q = 2 * XB * Z + Z
    return Rational(-2 * (2 * XB + 1) * Z ** 2 * (q - 2), (q - 1) ** 2)


GENERATING_FUNCTIONS = {
    "fdelta": hypersimplex_gf,
    "fint": interior_cross_total_gf,
    "fdtotal": hypersimplex_total_gf_closed,
    "fcone": cone_cross_total_gf,
    "hd": hd_gf,
    "hc": hc_gf,
}


@lru_cache(maxsize=None)
def expand(name: str, order: int = DEFAULT_ORDER) -> BiSeries:
    return GENERATING_FUNCTIONS[name]().expand(order)


def _coefficient(name: str, n: int, order: int) -> Poly:
    if n > order:
        raise OrderExceeded(f"z^{n} requested from a series truncated at order {order}")
    return expand(name, order)[n]


def _order(n: int, order) -> int:
    return max(DEFAULT_ORDER, n) if order is None else order


def hypersimplex_f(n: int, order: int = None) -> Poly:
    """k-face counts of the triangulated hypersimplex Delta_{2,n}, as a polynomial in x."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _coefficient("fdelta", n, _order(n, order))


def dn_interior_total_f(n: int) -> Poly:
    """Interior faces of the 2n cross-polytope facets: sum_k n 2^k C(n-2, k-1) x^k."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return Poly(tuple(n * 2 ** k * comb(n - 2, k - 1) if k >= 1 else 0 for k in range(n)))


def dn_interior_total_series(n: int, order: int = None) -> Poly:
    return _coefficient("fint", n, _order(n, order))


def dn_hypersimplex_total_f(n: int, order: int = None) -> Poly:
    """All faces in the hypersimplex facets of P_{D_n}, by inclusion-exclusion.

    sum_j (-1)^j C(n, j) 2^(n-j) f^(n-j), where f^(l) is the hypersimplex
    face polynomial (zero for l <= 1).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    total = Poly()
    for j in range(n + 1):
        term = hypersimplex_f(n - j, _order(n, order)) * (comb(n, j) * 2 ** (n - j))
        total = total - term if j % 2 else total + term
    return total


def dn_hypersimplex_total_series(n: int, order: int = None, substituted: bool = False) -> Poly:
    """Same counts read off a closed-form generating function.

    ``substituted`` selects the form built by substituting 2z/(1+z) into the
    hypersimplex generating function; otherwise the simplified closed form.
    """
    order = _order(n, order)
    if n > order:
        raise OrderExceeded(f"z^{n} requested from a series truncated at order {order}")
    if substituted:
        return _substituted(order)[n]
    return _coefficient("fdtotal", n, order)


@lru_cache(maxsize=None)
def _substituted(order: int) -> BiSeries:
    return hypersimplex_total_gf_substituted().expand(order)


def dn_boundary_f(n: int) -> FVector:
    """f-vector of the triangulated boundary of P_{D_n} (dimension n-1)."""
    faces = dn_interior_total_f(n) + dn_hypersimplex_total_f(n)
    if faces.degree > n - 1:
        raise ValueError(f"face polynomial of degree {faces.degree} exceeds n-1")
    return FVector(n - 1, (1,) + tuple(faces.coeff(k) for k in range(n)))


def dn_h(n: int) -> Poly:
    """h-polynomial of the boundary triangulation of P_{D_n}."""
    return transform_f_to_h(dn_boundary_f(n))


def hd_series_coefficient(n: int, order: int = None) -> Poly:
    return _coefficient("hd", n, _order(n, order))


def mallows_pn(n: int) -> Poly:
    """Even part of (1+sqrt x)^(2n) minus 2n x (1+x)^(n-2), without radicals."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return even_part_binomial(n) - X * (ONE + X) ** (n - 2) * (2 * n)


def cn_cone_total_f(n: int, order: int = None) -> Poly:
    """Faces added by coning each cross-polytope facet of P_{D_n} from a vertex of 2 x cross-polytope."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return _coefficient("fcone", n, _order(n, order))


def cn_cone_total_closed(n: int) -> Poly:
    return (ONE + 2 * X) ** (n - 1) * (2 * n)


def cn_boundary_f(n: int) -> FVector:
    """f-vector of the triangulated boundary of P_{C_n}, built from the D_n triangulation."""
    faces = cn_cone_total_f(n) + dn_hypersimplex_total_f(n)
    return FVector(n - 1, (1,) + tuple(faces.coeff(k) for k in range(n)))


def cn_h_via_cone(n: int) -> Poly:
    """h-polynomial of the C_n boundary triangulation (cone over the cross facets)."""
    return transform_f_to_h(cn_boundary_f(n))


def hc_series_coefficient(n: int, order: int = None) -> Poly:
    return _coefficient("hc", n, _order(n, order))


@dataclass(frozen=True)
class SeriesBundle:
    order: int
    fd_interior: BiSeries
    fd_hyper: BiSeries
    fd_boundary: BiSeries
    hd: BiSeries
    hc: BiSeries


def series_bundle(order: int = DEFAULT_ORDER) -> SeriesBundle:
    """Expand every D_n / C_n generating function to the same order.

    ``fd_boundary`` is the sum of the interior and hypersimplex parts, still
    without the empty face.
    """
    interior = expand("fint", order)
    hyper = expand("fdtotal", order)
    return SeriesBundle(order, interior, hyper, interior + hyper, expand("hd", order), expand("hc", order))
