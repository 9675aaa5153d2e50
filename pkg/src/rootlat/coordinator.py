"""Closed-form coordinator polynomials and boundary f-polynomials for A_n, C_n, D_n."""
from __future__ import annotations

from math import comb, factorial

from .errors import InexactDivision
from .polyalg import ONE, X, Poly, reverse

MIN_RANK = {"A": 1, "C": 2, "D": 2}


def _check(kind: str, n: int) -> str:
    kind = kind.upper()
    if kind not in MIN_RANK:
        raise ValueError(f"unknown lattice family {kind!r}")
    if n < MIN_RANK[kind]:
        raise ValueError(f"{kind}_n needs n >= {MIN_RANK[kind]}, got {n}")
    return kind


def exact_div(a: int, b: int, what: str = "") -> int:
    q, r = divmod(a, b)
    if r:
        raise InexactDivision(f"{a} / {b} is not an integer" + (f" ({what})" if what else ""))
    return q


def multinomial(*parts: int) -> int:
    if any(p < 0 for p in parts):
        return 0
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


def h_closed(kind: str, n: int) -> Poly:
    """Coordinator polynomial of the growth series of A_n, C_n or D_n."""
    kind = _check(kind, n)
    if kind == "A":
        return Poly(tuple(comb(n, k) ** 2 for k in range(n + 1)))
    if kind == "C":
        return Poly(tuple(comb(2 * n, 2 * k) for k in range(n + 1)))
    return Poly(tuple(
        comb(2 * n, 2 * k) - exact_div(2 * k * (n - k) * comb(n, k), n - 1, f"h_D{n}, k={k}")
        for k in range(n + 1)
    ))


def _f_c_term(n: int, m: int) -> int:
    return exact_div(n * 4 ** m * comb(n + m, 2 * m), n + m, f"f_C{n}, m={m}")


def _f_d_correction(n: int, m: int) -> int:
    # C(n-2, m-1) / (n-m) == C(n-1, m-1) / (n-1); the right side stays finite at m = n
    if m == 0:
        return 0
    return exact_div(n * (2 * n - m - 1) * 2 ** (m - 1) * comb(n - 1, m - 1), n - 1, f"f_D{n}, m={m}")


def f_closed(kind: str, n: int) -> Poly:
    """f-polynomial of a unimodular triangulation of the root polytope boundary.

    The coefficient of ``x^(n-m)`` is ``f_(m-1)``, so the leading ``x^n`` term is
    the empty face.
    """
    kind = _check(kind, n)
    coeffs = [0] * (n + 1)
    for m in range(n + 1):
        if kind == "A":
            c = multinomial(m, m, n - m)
        elif kind == "C":
            c = _f_c_term(n, m)
        else:
            c = _f_c_term(n, m) - _f_d_correction(n, m)
        coeffs[n - m] = c
    return Poly(tuple(coeffs))


def v2k_numerator(k: int) -> Poly:
    """Hilbert-series numerator of the second Veronese of a (k-1)-simplex."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return Poly(tuple(comb(k, 2 * i) for i in range(k // 2 + 1)))


def cn_inclusion_exclusion(n: int) -> Poly:
    """C_n coordinator polynomial assembled face by face over the cross-polytope.

    Each (j-1)-face of the n-dimensional cross-polytope (there are
    ``C(n, j) 2^j`` of them) contributes its Veronese numerator with sign
    ``(-1)^(n-j)``, brought over the common denominator ``(1-x)^n``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    one_minus_x = ONE - X
    total = Poly()
    for j in range(n + 1):
        term = one_minus_x ** (n - j) * v2k_numerator(j) * (comb(n, j) * 2 ** j)
        total = total + (term if (n - j) % 2 == 0 else -term)
    return total


def even_part_binomial(n: int) -> Poly:
    """Integer-power part of (1 + sqrt(x))^(2n), i.e. sum_k C(2n, 2k) x^k."""
    return Poly(tuple(comb(2 * n, 2 * k) for k in range(n + 1)))


def is_palindromic(p: Poly, d: int) -> bool:
    return reverse(p, d) == p


def has_nonnegative_coefficients(p: Poly) -> bool:
    return all(c >= 0 for c in p)
