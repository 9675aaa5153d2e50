"""Staircase triangulation of the boundary of the A_n root polytope.

A vertex ``e_i - e_j`` is the pair ``(i, j)``. A face is a set of pairs whose
row indices and column indices both weakly increase (after sorting), with no
repeated pair and no index used both as a row and as a column. Faces are
stored canonically as lexicographically sorted tuples of pairs.
"""
from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Optional

from .errors import BudgetExceeded, IndexOutOfRange, NotAFace
from .lattices import bareiss_det
from .polyalg import FVector

DEFAULT_BUDGET = 8


def canonical(pairs: Iterable) -> tuple:
    return tuple(sorted((int(i), int(j)) for i, j in pairs))


def is_face(n: int, pairs: Iterable) -> bool:
    face = canonical(pairs)
    if not face:
        raise ValueError("a face needs at least one vertex")
    for i, j in face:
        if not (0 <= i <= n and 0 <= j <= n):
            raise IndexOutOfRange(f"pair {(i, j)} outside 0..{n}")
    if len(set(face)) != len(face):
        return False
    rows = {i for i, _ in face}
    cols = {j for _, j in face}
    if rows & cols:
        return False
    return all(face[t][1] <= face[t + 1][1] for t in range(len(face) - 1))


def _paths(a: int, b: int, m: int) -> Iterator[tuple]:
    """Cell sequences from (0, 0) to (a-1, b-1) with m cells, steps right, down or diagonal."""
    target = (a - 1, b - 1)

    def rec(r: int, c: int, left: int, acc: list):
        if (r, c) == target:
            if left == 0:
                yield tuple(acc)
            return
        if left == 0:
            return
        # remaining cells must cover max(dr, dc) at least and dr + dc at most
        for dr, dc in ((0, 1), (1, 0), (1, 1)):
            nr, nc = r + dr, c + dc
            if nr > target[0] or nc > target[1]:
                continue
            need_min = max(target[0] - nr, target[1] - nc)
            need_max = (target[0] - nr) + (target[1] - nc)
            if need_min <= left - 1 <= need_max:
                acc.append((nr, nc))
                yield from rec(nr, nc, left - 1, acc)
                acc.pop()

    if m < 1:
        return
    yield from rec(0, 0, m - 1, [(0, 0)])


def iter_faces(n: int, m: int) -> Iterator[tuple]:
    """All faces with exactly ``m`` vertices, built from row set, column set and path.

    Row set R (size a) and disjoint column set C (size b) are chosen first;
    the face is then a monotone path through the R x C grid touching every row
    and column. Each face arises exactly once.
    """
    if m < 1:
        return
    idx = range(n + 1)
    for a in range(1, m + 1):
        for rows in combinations(idx, a):
            rest = [i for i in idx if i not in rows]
            for b in range(max(1, m - a + 1), min(m, len(rest)) + 1):
                for cols in combinations(rest, b):
                    for path in _paths(a, b, m):
                        yield tuple((rows[r], cols[c]) for r, c in path)


def enumerate_faces(n: int, m: int) -> int:
    """Number of faces with ``m`` vertices, by exhaustive generation."""
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    if m == 0:
        return 1
    return sum(1 for _ in iter_faces(n, m))


def staircase_f_vector(n: int, budget: int = DEFAULT_BUDGET) -> FVector:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > budget:
        raise BudgetExceeded(f"n={n} exceeds enumeration budget {budget}")
    return FVector(n - 1, tuple(enumerate_faces(n, m) for m in range(n + 1)))


def facet_of_face(n: int, face: Iterable) -> list:
    """Labels S of all facets containing the face, as sorted tuples.

    A vertex (i, j) lies on the facet labelled S iff i is in S and j is not.
    """
    face = canonical(face)
    if not is_face(n, face):
        raise NotAFace(f"{face} is not a face of the staircase triangulation of A_{n}")
    rows = {i for i, _ in face}
    cols = {j for _, j in face}
    free = [k for k in range(n + 1) if k not in rows and k not in cols]
    out = []
    for r in range(len(free) + 1):
        for extra in combinations(free, r):
            out.append(tuple(sorted(rows | set(extra))))
    return sorted(out)


def _root_coords(i: int, j: int, n: int) -> list:
    # e_i - e_j in the basis e_k - e_{k+1}, k = 0..n-1: partial sums of coordinates
    coords = [0] * n
    if i < j:
        for k in range(i, j):
            coords[k] = 1
    else:
        for k in range(j, i):
            coords[k] = -1
    return coords


def cell_unimodularity_check(n: int) -> tuple:
    """Check every top cell, coned from the origin, has determinant +-1.

    Returns ``(ok, cells_checked, witness)`` where ``witness`` is the first
    failing cell and its determinant, or ``None``.
    """
    checked = 0
    for cell in iter_faces(n, n):
        det = bareiss_det([_root_coords(i, j, n) for i, j in cell])
        checked += 1
        if det not in (1, -1):
            return False, checked, (cell, det)
    return True, checked, None


def format_face(face: tuple) -> str:
    return " ".join(f"{i},{j}" for i, j in face)


def parse_face(line: str) -> tuple:
    return canonical(tuple(map(int, tok.split(","))) for tok in line.split())


def all_faces(n: int) -> list:
    """Every nonempty face, in lexicographic order of the canonical pair tuples."""
    return sorted(f for m in range(1, n + 1) for f in iter_faces(n, m))


def dump_faces(n: int, path, budget: Optional[int] = DEFAULT_BUDGET) -> int:
    """Write one face per line (``"i1,j1 i2,j2 ..."``); returns the number written."""
    if budget is not None and n > budget:
        raise BudgetExceeded(f"n={n} exceeds enumeration budget {budget}")
    faces = all_faces(n)
    with open(path, "w") as fh:
        for f in faces:
            fh.write(format_face(f) + "\n")
    return len(faces)


def top_cells_per_facet(n: int) -> dict:
    """Map facet label S to the number of top cells lying in it."""
    out = {}
    for cell in iter_faces(n, n):
        (S,) = facet_of_face(n, cell)
        out[S] = out.get(S, 0) + 1
    return out


def expected_cells_in_facet(n: int, S: tuple) -> int:
    s, t = len(S), n + 1 - len(S)
    return comb(s + t - 2, s - 1)
