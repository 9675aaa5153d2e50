"""Concrete geometry of the root lattices A_n, C_n, D_n.

Two independent counting oracles live here. :func:`growth_bfs` finds word
lengths by breadth-first search over generator sums. :func:`dilate_point_count`
counts lattice points in dilates of the root polytope straight from its facet
inequalities. They share nothing but the generator list.
"""
from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Optional

from .errors import (
    BallTooLarge,
    DimensionMismatch,
    NonPolynomialRemainder,
    UnsupportedFamily,
)
from .polyalg import ONE, X, Poly

MAX_BALL = 10 ** 8
_MIN_RANK = {"A": 1, "C": 2, "D": 2}


@dataclass(frozen=True)
class LatticeFamily:
    kind: str
    n: int

    def __post_init__(self):
        kind = str(self.kind).upper()
        object.__setattr__(self, "kind", kind)
        if kind not in _MIN_RANK:
            raise ValueError(f"unknown lattice family {self.kind!r}; expected A, C or D")
        if self.n < _MIN_RANK[kind]:
            raise ValueError(f"{kind}_n needs n >= {_MIN_RANK[kind]}, got {self.n}")

    @property
    def ambient_dim(self) -> int:
        return self.n + 1 if self.kind == "A" else self.n

    @property
    def rank(self) -> int:
        return self.n

    @property
    def n_generators(self) -> int:
        n = self.n
        return {"A": n * (n + 1), "C": 2 * n * n, "D": 2 * n * (n - 1)}[self.kind]

    def __str__(self) -> str:
        return f"{self.kind}{self.n}"


def _unit(dim: int, i: int, s: int = 1) -> list:
    v = [0] * dim
    v[i] = s
    return v


def generators(family: LatticeFamily) -> list:
    """Monoid generators as integer tuples, in a fixed deterministic order."""
    dim, n = family.ambient_dim, family.n
    out = []
    if family.kind == "A":
        for i in range(n + 1):
            for j in range(n + 1):
                if i != j:
                    v = [0] * dim
                    v[i], v[j] = 1, -1
                    out.append(tuple(v))
        return out
    if family.kind == "C":
        for i in range(n):
            for s in (1, -1):
                out.append(tuple(_unit(dim, i, 2 * s)))
    for i, j in combinations(range(n), 2):
        for si in (1, -1):
            for sj in (1, -1):
                v = [0] * dim
                v[i], v[j] = si, sj
                out.append(tuple(v))
    return out


def contains(family: LatticeFamily, v) -> bool:
    if len(v) != family.ambient_dim:
        raise DimensionMismatch(f"{family} lives in dimension {family.ambient_dim}, got {len(v)}")
    if family.kind == "A":
        return sum(v) == 0
    return sum(v) % 2 == 0


@dataclass
class GrowthReport:
    family: LatticeFamily
    kmax: int
    s: list
    cumulative: list = field(default_factory=list)

    def __post_init__(self):
        if not self.cumulative:
            total, self.cumulative = 0, []
            for c in self.s:
                total += c
                self.cumulative.append(total)


def _estimated_ball(family: LatticeFamily, kmax: int) -> int:
    # rough size estimate only; the BFS itself never consults the closed form
    from .coordinator import h_closed
    from .polyalg import expand_growth

    return sum(expand_growth(h_closed(family.kind, family.n), family.rank, kmax))


def growth_bfs(family: LatticeFamily, kmax: int, max_ball: int = MAX_BALL) -> GrowthReport:
    """Growth function S(0..kmax) by breadth-first search over generator sums."""
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    est = _estimated_ball(family, kmax)
    if est > max_ball:
        raise BallTooLarge(f"{family} ball of radius {kmax} has ~{est} points (limit {max_ball})")
    gens = generators(family)
    origin = (0,) * family.ambient_dim
    seen = {origin}
    frontier = [origin]
    s = [1]
    for _ in range(kmax):
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(a + b for a, b in zip(p, g))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        s.append(len(nxt))
        frontier = nxt
    return GrowthReport(family, kmax, s)


def bfs_ball(family: LatticeFamily, k: int) -> set:
    """All lattice points of word length at most ``k``."""
    gens = generators(family)
    ball = {(0,) * family.ambient_dim}
    frontier = list(ball)
    for _ in range(k):
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(a + b for a, b in zip(p, g))
                if q not in ball:
                    ball.add(q)
                    nxt.append(q)
        frontier = nxt
    return ball


def _threads(threads: Optional[int]) -> int:
    if threads is None:
        threads = int(os.environ.get("ROOTLAT_THREADS", "1") or 1)
    return max(1, threads)


def _count_a(n: int, k: int, first: int) -> int:
    # x_0 fixed to `first`; remaining x_1..x_{n-1} free, x_n closes the zero sum
    def rec(i: int, total: int, pos: int) -> int:
        if i == n:
            last = -total
            if abs(last) > k:
                return 0
            return 1 if pos + max(last, 0) <= k else 0
        count = 0
        for x in range(-k, k - pos + 1):
            count += rec(i + 1, total + x, pos + max(x, 0))
        return count

    if n == 0:
        return 1 if first == 0 else 0
    return rec(1, first, max(first, 0))


def _count_cd(kind: str, n: int, k: int, first: int) -> int:
    bound = 2 * k
    coord_max = k if kind == "D" else 2 * k

    def rec(i: int, l1: int, parity: int) -> int:
        if i == n:
            return 1 if parity == 0 else 0
        rest = bound - l1
        top = min(coord_max, rest)
        count = 0
        for x in range(-top, top + 1):
            count += rec(i + 1, l1 + abs(x), (parity + x) & 1)
        return count

    return rec(1, abs(first), first & 1)


def dilate_point_count(family: LatticeFamily, k: int, threads: Optional[int] = None) -> int:
    """Number of lattice points of the family's lattice inside k times its root polytope.

    Uses only the facet inequalities: for A_n, zero sum and positive part at
    most k; for C_n, l1-norm at most 2k; for D_n, additionally every
    coordinate bounded by k. C_n and D_n keep only even coordinate sums.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if family.kind == "A":
        firsts = range(-k, k + 1)
        work = lambda a: _count_a(family.n, k, a)  # noqa: E731
    else:
        box = k if family.kind == "D" else 2 * k
        firsts = range(-box, box + 1)
        work = lambda a: _count_cd(family.kind, family.n, k, a)  # noqa: E731
    nthreads = _threads(threads)
    if nthreads == 1:
        return sum(work(a) for a in firsts)
    with ThreadPoolExecutor(max_workers=nthreads) as pool:
        return sum(pool.map(work, firsts))


def h_star_from_dilates(family: LatticeFamily, extra_terms: int = 1) -> Poly:
    """h*-polynomial of the root polytope from brute-force dilate counts.

    Counts dilates ``0..n + extra_terms``, multiplies the truncated Ehrhart
    series by ``(1 - t)^(n+1)`` and checks that coefficients past degree ``n``
    vanish.
    """
    n = family.rank
    top = n + extra_terms
    counts = [dilate_point_count(family, r) for r in range(top + 1)]
    factor = (ONE - X) ** (n + 1)
    prod = [sum(factor.coeff(i) * counts[r - i] for i in range(r + 1)) for r in range(top + 1)]
    tail = prod[n + 1:]
    if any(tail):
        raise NonPolynomialRemainder(f"{family}: coefficients beyond degree {n} are {tail}")
    return Poly(tuple(prod[: n + 1]))


def bareiss_det(rows) -> int:
    """Exact integer determinant by fraction-free elimination."""
    m = [list(r) for r in rows]
    size = len(m)
    if size == 0:
        return 1
    sign, prev = 1, 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for r in range(k + 1, size):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


def generator_matrix(family: LatticeFamily, augmented: bool = False) -> list:
    """Rows of the matrix whose columns are the generators.

    With ``augmented`` a row of ones is put on top and a zero column (the
    origin) appended.
    """
    cols = generators(family)
    if augmented:
        cols = [(1,) + c for c in cols] + [(1,) + (0,) * family.ambient_dim]
    return [list(r) for r in zip(*cols)]


@dataclass
class UnimodularityReport:
    family: LatticeFamily
    passed: bool
    mode: str
    checked: int
    total: int
    witness: Optional[dict] = None


def check_total_unimodularity(
    family: LatticeFamily,
    max_size: Optional[int] = None,
    sample_budget: int = 10 ** 5,
    seed: int = 0,
    augmented: bool = False,
) -> UnimodularityReport:
    """Check that every square submatrix of the A_n generator matrix has det in {0, +1, -1}.

    All submatrices up to ``max_size`` are enumerated if there are at most
    ``sample_budget`` of them; otherwise ``sample_budget`` are drawn uniformly
    with a seeded RNG.
    """
    if family.kind != "A":
        raise UnsupportedFamily(f"total unimodularity is only checked for A_n, not {family}")
    mat = generator_matrix(family, augmented)
    nrows, ncols = len(mat), len(mat[0])
    if max_size is None:
        max_size = nrows
    max_size = min(max_size, nrows, ncols)
    sizes = list(range(1, max_size + 1))
    per_size = [comb(nrows, s) * comb(ncols, s) for s in sizes]
    total = sum(per_size)

    def test(rs, cs):
        det = bareiss_det([[mat[r][c] for c in cs] for r in rs])
        if det not in (-1, 0, 1):
            return {"rows": list(rs), "cols": list(cs), "det": det}
        return None

    checked = 0
    if total <= sample_budget:
        for s in sizes:
            for rs in combinations(range(nrows), s):
                for cs in combinations(range(ncols), s):
                    checked += 1
                    w = test(rs, cs)
                    if w:
                        return UnimodularityReport(family, False, "exhaustive", checked, total, w)
        return UnimodularityReport(family, True, "exhaustive", checked, total)

    rng = random.Random(seed)
    for _ in range(sample_budget):
        s = rng.choices(sizes, weights=per_size)[0]
        rs = sorted(rng.sample(range(nrows), s))
        cs = sorted(rng.sample(range(ncols), s))
        checked += 1
        w = test(rs, cs)
        if w:
            return UnimodularityReport(family, False, "sampled", checked, total, w)
    return UnimodularityReport(family, True, "sampled", checked, total)


@dataclass
class FacetCensus:
    family: LatticeFamily
    n_vertices: int
    facets: dict  # facet type -> list of (label, vertex count)
    n_edges: Optional[int] = None
    all_supporting: bool = True

    def counts(self) -> dict:
        return {t: len(v) for t, v in self.facets.items()}

    def vertex_counts(self) -> dict:
        return {t: sorted({c for _, c in v}) for t, v in self.facets.items()}


def _edges_from_facets(n_vertices: int, facet_masks: list) -> int:
    # u, v span an edge iff some facet holds both and those facets meet exactly in {u, v}
    full = (1 << n_vertices) - 1
    edges = 0
    for u in range(n_vertices):
        for v in range(u + 1, n_vertices):
            pair = (1 << u) | (1 << v)
            common, hits = full, 0
            for mask in facet_masks:
                if mask & pair == pair:
                    common &= mask
                    hits += 1
            if hits and common == pair:
                edges += 1
    return edges


def facet_census(family: LatticeFamily, with_edges: Optional[bool] = None) -> FacetCensus:
    """Vertex counts on every facet hyperplane of the root polytope.

    A_n: hyperplanes ``sum_{i in S} x_i = 1`` over proper nonempty S.
    D_n: ``sum_i s_i x_i = 2`` over sign vectors s, and ``s x_i = 1``.
    Each hyperplane is also checked to support the polytope (no vertex beyond it).
    Edges are derived from the facet list; by default only for A_n.
    """
    if with_edges is None:
        with_edges = family.kind == "A"
    verts = generators(family)
    n = family.n
    facets = {}
    masks = []
    supporting = True

    def scan(values, level):
        nonlocal supporting
        mask = 0
        for idx, val in enumerate(values):
            if val > level:
                supporting = False
            if val == level:
                mask |= 1 << idx
        return mask

    if family.kind == "A":
        items = []
        for bits in range(1, 2 ** (n + 1) - 1):
            S = tuple(i for i in range(n + 1) if bits >> i & 1)
            mask = scan([sum(v[i] for i in S) for v in verts], 1)
            masks.append(mask)
            items.append((S, bin(mask).count("1")))
        facets["product"] = items
    elif family.kind == "D":
        hyper, cross = [], []
        for bits in range(2 ** n):
            sigma = tuple(-1 if bits >> i & 1 else 1 for i in range(n))
            mask = scan([sum(s * x for s, x in zip(sigma, v)) for v in verts], 2)
            masks.append(mask)
            hyper.append((sigma, bin(mask).count("1")))
        for i in range(n):
            for s in (1, -1):
                mask = scan([s * v[i] for v in verts], 1)
                masks.append(mask)
                cross.append(((i, s), bin(mask).count("1")))
        facets["hypersimplex"] = hyper
        facets["cross"] = cross
    else:
        raise UnsupportedFamily(f"facet census is implemented for A_n and D_n, not {family}")
    edges = _edges_from_facets(len(verts), masks) if with_edges else None
    return FacetCensus(family, len(verts), facets, edges, supporting)
