from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from rootlat.coordinator import h_closed
from rootlat.errors import BallTooLarge, DimensionMismatch, UnsupportedFamily
from rootlat.lattices import (
    LatticeFamily,
    bareiss_det,
    bfs_ball,
    check_total_unimodularity,
    contains,
    dilate_point_count,
    facet_census,
    generators,
    growth_bfs,
    h_star_from_dilates,
)
from rootlat.polyalg import Poly, expand_growth


def F(kind, n):
    return LatticeFamily(kind, n)


SMALL = [F("A", 1), F("A", 2), F("A", 3), F("C", 2), F("C", 3), F("D", 2), F("D", 3), F("D", 4)]


def test_family_validation():
    with pytest.raises(ValueError):
        F("B", 3)
    with pytest.raises(ValueError):
        F("D", 1)
    assert F("a", 2).kind == "A"


def test_generators_examples():
    assert sorted(generators(F("A", 1))) == [(-1, 1), (1, -1)]
    c2 = generators(F("C", 2))
    assert sorted(c2) == sorted([(2, 0), (-2, 0), (0, 2), (0, -2), (1, 1), (1, -1), (-1, 1), (-1, -1)])
    d3 = generators(F("D", 3))
    assert len(d3) == len(set(d3)) == 12
    assert all(sorted(map(abs, v)) == [0, 1, 1] for v in d3)


@pytest.mark.parametrize("fam", [F(k, n) for k in "ACD" for n in range(2, 7)] + [F("A", 1)])
def test_generator_counts(fam):
    g = generators(fam)
    assert len(g) == len(set(g)) == fam.n_generators
    assert all(len(v) == fam.ambient_dim for v in g)
    assert set(g) == {tuple(-x for x in v) for v in g}


def test_contains():
    assert contains(F("A", 2), (1, -1, 0))
    assert not contains(F("D", 3), (1, 0, 0))
    assert contains(F("C", 2), (3, 1))
    with pytest.raises(DimensionMismatch):
        contains(F("A", 2), (1, -1))


@pytest.mark.parametrize("fam", SMALL)
def test_bfs_kmax_zero(fam):
    assert growth_bfs(fam, 0).s == [1]


def test_bfs_examples():
    # hexagonal lattice: 6k points at distance k
    assert growth_bfs(F("A", 2), 2).s == [1, 6, 12]
    assert growth_bfs(F("D", 3), 1).s == [1, 12]


def test_c2_word_length_two():
    ball1 = bfs_ball(F("C", 2), 1)
    ball2 = bfs_ball(F("C", 2), 2)
    assert (3, 1) not in ball1 and (3, 1) in ball2


@pytest.mark.parametrize("fam", SMALL)
def test_bfs_points_in_lattice_and_symmetric(fam):
    ball = bfs_ball(fam, 3)
    assert all(contains(fam, p) for p in ball)
    assert ball == {tuple(-x for x in p) for p in ball}


@pytest.mark.parametrize("fam", SMALL)
def test_bfs_against_closed_form(fam):
    s = growth_bfs(fam, 4).s
    assert s == expand_growth(h_closed(fam.kind, fam.n), fam.n, 4)


def test_bfs_memory_guard():
    with pytest.raises(BallTooLarge):
        growth_bfs(F("A", 8), 30)
    with pytest.raises(BallTooLarge):
        growth_bfs(F("A", 3), 5, max_ball=10)


def _brute_dilate(fam, k):
    # plain box enumeration, no pruning
    n, out = fam.n, 0
    if fam.kind == "A":
        for x in product(range(-k, k + 1), repeat=n + 1):
            if sum(x) == 0 and sum(max(v, 0) for v in x) <= k:
                out += 1
        return out
    box = 2 * k
    for x in product(range(-box, box + 1), repeat=n):
        if sum(x) % 2 or sum(map(abs, x)) > 2 * k:
            continue
        if fam.kind == "D" and max(map(abs, x), default=0) > k:
            continue
        out += 1
    return out


@pytest.mark.parametrize("fam", SMALL)
@pytest.mark.parametrize("k", [0, 1, 2])
def test_dilate_against_plain_box(fam, k):
    assert dilate_point_count(fam, k) == _brute_dilate(fam, k)


def test_dilate_examples():
    assert dilate_point_count(F("A", 2), 0) == 1
    assert dilate_point_count(F("A", 2), 1) == 7
    assert dilate_point_count(F("C", 2), 1) == 9


@pytest.mark.parametrize("fam", SMALL)
def test_normality(fam):
    rep = growth_bfs(fam, 3)
    assert rep.cumulative == [dilate_point_count(fam, k) for k in range(4)]


def test_dilate_thread_count_independent(monkeypatch):
    fam = F("C", 3)
    base = dilate_point_count(fam, 3, threads=1)
    assert dilate_point_count(fam, 3, threads=4) == base
    monkeypatch.setenv("ROOTLAT_THREADS", "3")
    assert dilate_point_count(fam, 3) == base


def test_h_star_examples():
    # |rP| = 2r + 1 on the line
    assert h_star_from_dilates(F("A", 1)) == Poly.of(1, 1)
    assert h_star_from_dilates(F("A", 3)) == Poly.of(1, 9, 9, 1)
    assert h_star_from_dilates(F("D", 3)) == Poly.of(1, 9, 9, 1)


@pytest.mark.parametrize("fam", [F("A", 2), F("A", 3), F("C", 2), F("C", 3), F("D", 2), F("D", 3)])
def test_h_star_palindromic_extra_terms(fam):
    h = h_star_from_dilates(fam, extra_terms=2)
    assert h.coeffs == tuple(reversed(h.coeffs))
    assert all(c >= 0 for c in h)


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=4, max_size=4))
@settings(max_examples=60)
def test_bareiss_matches_sympy(rows):
    sympy = pytest.importorskip("sympy")
    assert bareiss_det(rows) == int(sympy.Matrix(rows).det())


@pytest.mark.parametrize("n", [1, 2, 3])
def test_tu_exhaustive(n):
    rep = check_total_unimodularity(F("A", n), sample_budget=10 ** 9)
    assert rep.passed and rep.mode == "exhaustive" and rep.checked == rep.total


def test_tu_sampled_a4():
    rep = check_total_unimodularity(F("A", 4), sample_budget=2000, seed=0)
    assert rep.passed and rep.mode == "sampled" and rep.checked == 2000
    again = check_total_unimodularity(F("A", 4), sample_budget=2000, seed=0)
    assert again == rep


def test_tu_rejects_other_families():
    with pytest.raises(UnsupportedFamily):
        check_total_unimodularity(F("C", 3))


def test_tu_augmented_matrix_has_bad_minor():
    # row of ones plus row 0, columns e0-e1 and e1-e0: det = -2
    rep = check_total_unimodularity(F("A", 2), augmented=True)
    assert not rep.passed
    assert abs(rep.witness["det"]) == 2


def test_facet_census_examples():
    a3 = facet_census(F("A", 3))
    assert len(a3.facets["product"]) == 14
    assert a3.vertex_counts()["product"] == [3, 4]
    d3 = facet_census(F("D", 3))
    assert d3.counts() == {"hypersimplex": 8, "cross": 6}
    assert d3.vertex_counts() == {"hypersimplex": [3], "cross": [4]}
    d4 = facet_census(F("D", 4))
    assert d4.counts() == {"hypersimplex": 16, "cross": 8}


def _hull_facets(points):
    np = pytest.importorskip("numpy")
    spatial = pytest.importorskip("scipy.spatial")
    hull = spatial.ConvexHull(np.array(points, dtype=float))
    eqs = {tuple(np.round(eq / -eq[-1], 6)) for eq in hull.equations}
    return len(eqs)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_a_facets_complete_by_convex_hull(n):
    # drop the last coordinate: a bijective linear image of the zero-sum hyperplane
    pts = [v[:-1] for v in generators(F("A", n))]
    assert _hull_facets(pts) == 2 ** (n + 1) - 2


@pytest.mark.parametrize("n", [3, 4, 5])
def test_d_facets_complete_by_convex_hull(n):
    assert _hull_facets(generators(F("D", n))) == 2 ** n + 2 * n


@pytest.mark.parametrize("n", range(2, 7))
def test_a_edges(n):
    assert facet_census(F("A", n)).n_edges == (n - 1) * n * (n + 1)


def test_facet_census_c_unsupported():
    with pytest.raises(UnsupportedFamily):
        facet_census(F("C", 3))
