from math import comb

import pytest

from rootlat import dn_series as dn
from rootlat.coordinator import cn_inclusion_exclusion, even_part_binomial, h_closed
from rootlat.errors import OrderExceeded
from rootlat.polyalg import Poly

N_RANGE = range(3, 13)


def P(*c):
    return Poly(tuple(c))


@pytest.fixture(scope="module")
def sym():
    sympy = pytest.importorskip("sympy")
    z, x = sympy.symbols("z x")
    return sympy, z, x


def _sympy_coeffs(sym, expr, order):
    sympy, z, x = sym
    ser = sympy.series(expr, z, 0, order + 1).removeO()
    out = []
    for r in range(order + 1):
        c = sympy.Poly(sympy.expand(ser.coeff(z, r)), x)
        coeffs = [int(a) for a in reversed(c.all_coeffs())] if c.as_expr() != 0 else []
        out.append(Poly(tuple(coeffs)))
    return out


def _rational_to_sympy(sym, rat):
    sympy, z, x = sym

    def conv(bp):
        return sum(c * z ** r * x ** k for r, row in enumerate(bp.rows) for k, c in enumerate(row))

    return conv(rat.num) / conv(rat.den)


@pytest.mark.parametrize("name,text", [
    ("fdelta", "z**2/(1-z) * (1 + (1+x)*z*(z+x-2)) / ((x*z+z-1)**2 * ((1+x)*z*(z-2)+1))"),
    ("fint", "-2*x*z**2*(2*x*z+z-2)/(2*x*z+z-1)**2"),
    ("fdtotal", "4*z**2/((z-1)**2-4*x*z) * (2*x*z*(x+1)/(2*x*z+z-1)**2 - 1/(z-1))"),
    ("fcone", "-2*(2*x+1)*z**2*(2*x*z+z-2)/(2*x*z+z-1)**2"),
    ("hd", "z**2*((1+x)**2 - 3*(1+x)*(1+x**2)*z + (3+x**2)*(1+3*x**2)*z**2"
           " - (x-1)**2*(1+x)*(1+x**2)*z**3) / ((x*z+z-1)**2*(1-2*z*(1+x)+z**2*(x-1)**2))"),
    ("hc", "z**2*(1+6*x+x**2-(x-1)**2*(x+1)*z)/(1-2*(x+1)*z+(x-1)**2*z**2)"),
])
def test_transcription_against_sympy(sym, name, text):
    sympy, z, x = sym
    expr = sympy.sympify(text, locals={"z": z, "x": x})
    order = 7
    assert list(dn.expand(name, order).coeffs) == _sympy_coeffs(sym, expr, order)


def test_substituted_form_against_sympy(sym):
    sympy, z, x = sym
    f = _rational_to_sympy(sym, dn.hypersimplex_gf())
    expr = f.subs(z, 2 * z / (1 + z)) / (1 + z)
    assert list(dn._substituted(6).coeffs) == _sympy_coeffs(sym, expr, 6)


def test_hypersimplex_examples():
    assert dn.hypersimplex_f(2) == P(1)
    assert dn.hypersimplex_f(3) == P(3, 3, 1)
    assert dn.hypersimplex_f(4) == P(6, 13, 12, 4)
    assert dn.hypersimplex_f(0) == Poly() == dn.hypersimplex_f(1)
    with pytest.raises(OrderExceeded):
        dn.hypersimplex_f(10, order=8)


@pytest.mark.parametrize("n", range(3, 13))
def test_hypersimplex_structure(n):
    f = dn.hypersimplex_f(n)
    # vertices e_i + e_j; maximal cells = normalized volume 2^(n-1) - n
    assert f.coeff(0) == comb(n, 2)
    assert f.degree == n - 1
    assert f.coeff(n - 1) == 2 ** (n - 1) - n
    # triangulated ball: Euler characteristic 1
    assert sum((-1) ** k * c for k, c in enumerate(f)) == 1


def test_interior_examples():
    assert dn.dn_interior_total_f(2) == P(0, 4)
    assert dn.dn_interior_total_f(3) == P(0, 6, 12)


@pytest.mark.parametrize("n", range(2, 13))
def test_interior_two_routes(n):
    f = dn.dn_interior_total_f(n)
    assert f == dn.dn_interior_total_series(n)
    assert f.coeff(0) == 0


@pytest.mark.parametrize("n", N_RANGE)
def test_hypersimplex_total_routes(n):
    a = dn.dn_hypersimplex_total_f(n)
    assert a == dn.dn_hypersimplex_total_series(n)
    assert a == dn.dn_hypersimplex_total_series(n, substituted=True)
    assert a.coeff(0) == 2 * n * (n - 1)


def test_hypersimplex_total_n3():
    # 8 triangles, each a copy of Delta_{2,3}: 12 vertices, 24 edges, 8 triangles
    assert dn.dn_hypersimplex_total_f(3) == P(12, 24, 8)


def test_boundary_examples():
    assert dn.dn_boundary_f(3).counts == (1, 12, 30, 20)
    assert dn.dn_boundary_f(4)[0] == 24
    assert dn.dn_boundary_f(7)[-1] == 1


@pytest.mark.parametrize("n", N_RANGE)
def test_boundary_euler_and_top_cells(n):
    f = dn.dn_boundary_f(n)
    assert f.euler_characteristic() == 1 + (-1) ** (n - 1)
    assert dn.dn_h(n)(1) == f[n - 1]


def test_dn_h_printed():
    assert dn.dn_h(3) == P(1, 9, 9, 1)
    assert dn.dn_h(4) == P(1, 20, 54, 20, 1)
    assert dn.dn_h(5) == P(1, 35, 180, 180, 35, 1)
    assert dn.hd_series_coefficient(2) == P(1, 2, 1)


@pytest.mark.parametrize("n", N_RANGE)
def test_dn_h_three_ways(n):
    assert dn.dn_h(n) == dn.mallows_pn(n) == h_closed("D", n) == dn.hd_series_coefficient(n)


def test_mallows_examples():
    assert dn.mallows_pn(2) == P(1, 2, 1)
    assert dn.mallows_pn(3) == P(1, 9, 9, 1)
    assert all(dn.mallows_pn(n).coeff(0) == 1 for n in range(2, 13))


def test_mallows_against_radical_form(sym):
    sympy, z, x = sym
    s = sympy.symbols("s", positive=True)
    for n in range(2, 9):
        expr = ((1 + s) ** (2 * n) + (1 - s) ** (2 * n)) / 2 - 2 * n * s ** 2 * (1 + s ** 2) ** (n - 2)
        expr = sympy.expand(expr)
        coeffs = [int(expr.coeff(s, 2 * k)) for k in range(n + 1)]
        assert dn.mallows_pn(n).tolist() == coeffs


def test_cone_examples():
    assert dn.cn_cone_total_f(2) == P(4, 8)
    assert dn.cn_cone_total_f(3) == P(6, 24, 24)


@pytest.mark.parametrize("n", range(2, 13))
def test_cone_two_routes(n):
    f = dn.cn_cone_total_f(n)
    assert f == dn.cn_cone_total_closed(n)
    assert f.coeff(0) == 2 * n


def test_cn_h_printed():
    assert dn.cn_h_via_cone(2) == P(1, 6, 1)
    assert dn.cn_h_via_cone(3) == P(1, 15, 15, 1)
    assert dn.cn_h_via_cone(5) == P(1, 45, 210, 210, 45, 1)


@pytest.mark.parametrize("n", range(2, 13))
def test_cn_h_routes(n):
    h = dn.cn_h_via_cone(n)
    assert h == h_closed("C", n) == cn_inclusion_exclusion(n) == even_part_binomial(n)
    assert h == dn.hc_series_coefficient(n)


@pytest.mark.parametrize("n", range(2, 9))
def test_cn_boundary_euler(n):
    assert dn.cn_boundary_f(n).euler_characteristic() == 1 + (-1) ** (n - 1)


def test_series_bundle():
    b = dn.series_bundle(8)
    assert b.order == 8
    sizes = {len(s) for s in (b.fd_interior, b.fd_hyper, b.fd_boundary, b.hd, b.hc)}
    assert sizes == {9}
    assert b.fd_boundary[3] == P(12, 30, 20)
    assert b.hd[4] == P(1, 20, 54, 20, 1)
