"""Exit criteria, shared by ``rootlat verify`` and the test suite.

Every check is exact; a criterion passes only if all of its comparisons hold
with equality and it finishes inside its time limit (where one is set).
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Optional

from . import an_triangulation as tri
from . import coordinator as co
from . import dn_series as dn
from .lattices import (
    LatticeFamily,
    check_total_unimodularity,
    dilate_point_count,
    facet_census,
    growth_bfs,
    h_star_from_dilates,
)
from .polyalg import FVector, Poly, expand_growth, transform_f_to_h, transform_h_to_f


@dataclass
class Config:
    nmax: int = 12
    enum_max: int = 8
    seed: int = 0
    tu_samples: int = 10 ** 5


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    failures: list = field(default_factory=list)
    elapsed: float = 0.0
    time_limit: Optional[float] = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.elapsed:.2f}s"
        extra += f", limit {self.time_limit:.0f}s)" if self.time_limit else ")"
        msg = f"[{status}] {self.number:2d}. {self.title}{extra}"
        if self.failures:
            msg += "\n" + "\n".join(f"      - {f}" for f in self.failures[:10])
        return msg


class _Checker:
    def __init__(self):
        self.failures = []

    def eq(self, got, want, what: str):
        if got != want:
            self.failures.append(f"{what}: got {got!r}, expected {want!r}")

    def true(self, cond: bool, what: str):
        if not cond:
            self.failures.append(what)


def _poly(*c: int) -> Poly:
    return Poly(tuple(c))


def crit_staircase_counts(cfg: Config, ck: _Checker):
    for n in range(1, cfg.enum_max + 1):
        for m in range(n + 1):
            ck.eq(tri.enumerate_faces(n, m), co.multinomial(m, m, n - m),
                  f"staircase faces with {m} vertices, n={n} vs multinomial (n+m; m,m,n-m)")
        ck.eq(tri.enumerate_faces(n, n), comb(2 * n, n), f"top cells of A_{n} vs C(2n,n)")
    if cfg.enum_max >= 3:
        ck.eq(tri.enumerate_faces(3, 3), 20, "A_3 top cells")


def crit_ftoh(cfg: Config, ck: _Checker):
    for n in range(1, cfg.enum_max + 1):
        h = transform_f_to_h(tri.staircase_f_vector(n, budget=cfg.enum_max))
        ck.eq(h, _poly(*(comb(n, k) ** 2 for k in range(n + 1))),
              f"h of staircase f-vector vs sum C(n,k)^2 x^k, n={n}")


GROWTH_RANGES = (("A", range(1, 6), 4), ("C", range(2, 5), 3), ("D", range(2, 5), 3))


def crit_growth(cfg: Config, ck: _Checker):
    for kind, ns, kmax in GROWTH_RANGES:
        for n in ns:
            fam = LatticeFamily(kind, n)
            rep = growth_bfs(fam, kmax)
            ck.eq(rep.s, expand_growth(co.h_closed(kind, n), n, kmax),
                  f"BFS growth of {fam} vs expansion of h(x)/(1-x)^n")
            ck.eq(rep.s[1], fam.n_generators, f"S(1) of {fam} vs generator count")


def crit_normality(cfg: Config, ck: _Checker):
    for kind, ns, kmax in GROWTH_RANGES:
        for n in ns:
            fam = LatticeFamily(kind, n)
            rep = growth_bfs(fam, kmax)
            ck.eq(rep.cumulative, [dilate_point_count(fam, k) for k in range(kmax + 1)],
                  f"word-length ball of {fam} vs lattice points of k*P (normality)")


def crit_hstar(cfg: Config, ck: _Checker):
    for kind, top in (("A", 4), ("C", 3), ("D", 3)):
        for n in range(co.MIN_RANK[kind], top + 1):
            fam = LatticeFamily(kind, n)
            ck.eq(h_star_from_dilates(fam), co.h_closed(kind, n),
                  f"Ehrhart h* of P_{fam} vs coordinator polynomial")
    ck.eq(h_star_from_dilates(LatticeFamily("D", 3)), _poly(1, 9, 9, 1), "h* of P_D3 vs printed H_D z^3")


def crit_hypersimplex(cfg: Config, ck: _Checker):
    ck.eq(dn.hypersimplex_f(3), _poly(3, 3, 1), "hypersimplex face polynomial, n=3")
    ck.eq(dn.hypersimplex_f(4), _poly(6, 13, 12, 4), "hypersimplex face polynomial, n=4")
    for n in range(3, cfg.nmax + 1):
        ck.eq(dn.dn_hypersimplex_total_f(n), dn.dn_hypersimplex_total_series(n),
              f"inclusion-exclusion over hypersimplex facets vs closed generating function, n={n}")


PRINTED_HD = {
    2: (1, 2, 1),
    3: (1, 9, 9, 1),
    4: (1, 20, 54, 20, 1),
    5: (1, 35, 180, 180, 35, 1),
}
PRINTED_HC = {
    2: (1, 6, 1),
    3: (1, 15, 15, 1),
    4: (1, 28, 70, 28, 1),
    5: (1, 45, 210, 210, 45, 1),
}


def crit_dn(cfg: Config, ck: _Checker):
    for n in range(3, cfg.nmax + 1):
        h = dn.dn_h(n)
        ck.eq(h, dn.mallows_pn(n), f"D_{n} boundary h-polynomial vs Mallows p_n")
        ck.eq(h, co.h_closed("D", n), f"D_{n} boundary h-polynomial vs closed coordinator polynomial")
    for n, coeffs in PRINTED_HD.items():
        ck.eq(dn.hd_series_coefficient(n), _poly(*coeffs), f"[z^{n}] H_D vs printed expansion")
        ck.eq(dn.mallows_pn(n), _poly(*coeffs), f"Mallows p_{n} vs printed expansion")
        if n >= 3:
            ck.eq(dn.dn_h(n), _poly(*coeffs), f"D_{n} pipeline vs printed expansion")


def crit_cn(cfg: Config, ck: _Checker):
    for n in range(2, cfg.nmax + 1):
        want = co.even_part_binomial(n)
        ck.eq(dn.cn_h_via_cone(n), want, f"C_{n} cone-triangulation h vs sum C(2n,2k) x^k")
        ck.eq(co.cn_inclusion_exclusion(n), want, f"C_{n} inclusion-exclusion vs sum C(2n,2k) x^k")
    for n, coeffs in PRINTED_HC.items():
        ck.eq(dn.hc_series_coefficient(n), _poly(*coeffs), f"[z^{n}] H_C vs printed expansion")
        ck.eq(dn.cn_h_via_cone(n), _poly(*coeffs), f"C_{n} pipeline vs printed expansion")


def crit_facets(cfg: Config, ck: _Checker):
    for n in range(1, min(cfg.enum_max, 8) + 1):
        c = facet_census(LatticeFamily("A", n))
        ck.true(c.all_supporting, f"A_{n}: a candidate facet hyperplane cuts the polytope")
        ck.eq(len(c.facets["product"]), 2 ** (n + 1) - 2, f"A_{n} facet count vs 2^(n+1)-2")
        for S, cnt in c.facets["product"]:
            ck.eq(cnt, len(S) * (n + 1 - len(S)), f"A_{n} vertices on facet {S} vs |S||T|")
        ck.eq(c.n_vertices, n * (n + 1), f"A_{n} vertex count vs n(n+1)")
        ck.eq(c.n_edges, (n - 1) * n * (n + 1), f"A_{n} edge count vs (n-1)n(n+1)")
    for n in range(3, 11):
        c = facet_census(LatticeFamily("D", n))
        ck.true(c.all_supporting, f"D_{n}: a candidate facet hyperplane cuts the polytope")
        ck.eq(len(c.facets["hypersimplex"]), 2 ** n, f"D_{n} hypersimplex facet count vs 2^n")
        ck.eq(len(c.facets["cross"]), 2 * n, f"D_{n} cross-polytope facet count vs 2n")
        ck.eq(c.vertex_counts()["hypersimplex"], [comb(n, 2)], f"D_{n} vertices per hypersimplex facet")
        ck.eq(c.vertex_counts()["cross"], [2 * (n - 1)], f"D_{n} vertices per cross-polytope facet")


def crit_unimodularity(cfg: Config, ck: _Checker):
    for n in range(1, 4):
        rep = check_total_unimodularity(LatticeFamily("A", n), sample_budget=float("inf"))
        ck.true(rep.passed and rep.mode == "exhaustive",
                f"A_{n} generator matrix not totally unimodular: {rep.witness}")
    rep = check_total_unimodularity(LatticeFamily("A", 4), sample_budget=cfg.tu_samples, seed=cfg.seed)
    ck.true(rep.passed, f"A_4 generator matrix: bad minor {rep.witness}")
    for n in range(1, 7):
        ok, checked, witness = tri.cell_unimodularity_check(n)
        ck.true(ok, f"A_{n} staircase cell with determinant not +-1: {witness}")
        ck.eq(checked, comb(2 * n, n), f"A_{n} cells checked vs C(2n,n)")


def crit_structure(cfg: Config, ck: _Checker):
    for kind in "ACD":
        for n in range(co.MIN_RANK[kind], cfg.nmax + 1):
            h = co.h_closed(kind, n)
            ck.true(co.is_palindromic(h, n), f"h_{kind}{n} is not palindromic")
            ck.true(co.has_nonnegative_coefficients(h), f"h_{kind}{n} has a negative coefficient")
            f = FVector.from_f_poly(co.f_closed(kind, n), n - 1)
            ck.eq(transform_f_to_h(f), h, f"f->h of closed f_{kind}{n} vs h_{kind}{n}")
            ck.eq(transform_h_to_f(h, n - 1), f, f"h->f round trip for {kind}{n}")
    for n in range(3, cfg.nmax + 1):
        f = dn.dn_boundary_f(n)
        ck.eq(f.euler_characteristic(), 1 + (-1) ** (n - 1), f"Euler characteristic of D_{n} boundary")
        ck.eq(f[n - 1], dn.dn_h(n)(1), f"D_{n} top cells vs h(1)")


CRITERIA: list = [
    (1, "staircase face enumeration matches multinomial counts", crit_staircase_counts, 10.0),
    (2, "staircase h-polynomial equals sum C(n,k)^2 x^k", crit_ftoh, None),
    (3, "BFS growth equals coordinator-series expansion", crit_growth, None),
    (4, "word-length balls equal polytope dilates (normality)", crit_normality, None),
    (5, "Ehrhart h* from dilates equals coordinator polynomial", crit_hstar, 30.0),
    (6, "hypersimplex series and two-route hypersimplex totals", crit_hypersimplex, None),
    (7, "D_n pipeline equals Mallows formula and closed form", crit_dn, None),
    (8, "C_n pipeline equals inclusion-exclusion and closed form", crit_cn, None),
    (9, "facet census of P_A and P_D", crit_facets, None),
    (10, "total unimodularity and unimodular staircase cells", crit_unimodularity, None),
    (11, "palindromicity, nonnegativity, Euler characteristic, f/h round trips", crit_structure, None),
]

TOTAL_TIME_LIMIT = 120.0


def run_criterion(number: int, cfg: Optional[Config] = None) -> CriterionResult:
    cfg = cfg or Config()
    for num, title, fn, limit in CRITERIA:
        if num == number:
            ck = _Checker()
            start = time.perf_counter()
            try:
                fn(cfg, ck)
            except Exception as exc:  # a crash is a failed criterion, not an aborted run
                ck.failures.append(f"raised {type(exc).__name__}: {exc}")
            elapsed = time.perf_counter() - start
            if limit is not None and elapsed > limit:
                ck.failures.append(f"took {elapsed:.2f}s, limit {limit:.0f}s")
            return CriterionResult(num, title, not ck.failures, ck.failures, elapsed, limit)
    raise KeyError(number)


def run_all(cfg: Optional[Config] = None, report: Optional[Callable[[CriterionResult], None]] = None) -> list:
    cfg = cfg or Config()
    results = []
    for num, *_ in CRITERIA:
        res = run_criterion(num, cfg)
        if report:
            report(res)
        results.append(res)
    return results
