"""Matroid constructions: uniform, linear, graphic, transversal, paving,
the classical named configurations, and shifted (Schubert) matroids."""

from fractions import Fraction
from itertools import combinations
from math import comb
from typing import NamedTuple

from . import config
from .core import Matroid, mask_of, matroid_from_bases, popcount
from .errors import (
    BoundsViolation,
    CapExceeded,
    EmptyGroundSet,
    GroundSetTooLarge,
    NonPrimeModulus,
    NotAnRPartition,
    ParseError,
)
from .operations import dual, relax

RATIONALS = "rationals"


def uniform(rank: int, size: int) -> Matroid:
    """U_{rank,size}: every rank-subset of a size-element set is a basis."""
    if size < 1:
        raise EmptyGroundSet("uniform matroid needs at least one element")
    if rank < 0 or rank > size:
        raise BoundsViolation(f"rank {rank} outside 0..{size}")
    bases = [mask_of(c) for c in combinations(range(size), rank)]
    # exchange holds trivially for equal-size subsets of a set
    return Matroid(size, bases, validate=False)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def _vector_rank(vecs, p) -> int:
    """Rank of a list of equal-length vectors, exactly: over GF(p) if p is
    a prime, over the rationals if p is None."""
    rows = [list(v) for v in vecs]
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    rank = 0
    for c in range(nc):
        if rank == nr:
            break
        piv = next((i for i in range(rank, nr) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = (
            Fraction(1) / rows[rank][c] if p is None else pow(rows[rank][c], p - 2, p)
        )
        for i in range(rank + 1, nr):
            f = rows[i][c]
            if f:
                mult = f * inv if p is None else (f * inv) % p
                for j in range(c, nc):
                    rows[i][j] = (
                        rows[i][j] - mult * rows[rank][j]
                        if p is None
                        else (rows[i][j] - mult * rows[rank][j]) % p
                    )
        rank += 1
    return rank


def linear_matroid(rows, field) -> Matroid:
    """Column matroid of a matrix with exact arithmetic.

    `field` is a prime p for GF(p) or the string "rationals".  Elements
    are the column indices; bases are the column sets of size rank(A)
    whose submatrix has full rank.
    """
    if field == RATIONALS or field is None:
        p = None
        rows = [[Fraction(x) for x in row] for row in rows]
    else:
        p = int(field)
        if not _is_prime(p):
            raise NonPrimeModulus(f"{field} is not a prime modulus")
        rows = [[int(x) % p for x in row] for row in rows]
    if not rows or not rows[0]:
        raise EmptyGroundSet("matrix must have at least one column")
    ncols = len(rows[0])
    if any(len(row) != ncols for row in rows):
        raise ParseError("ragged matrix rows")
    if ncols > config.MAX_GROUND_SET:
        raise GroundSetTooLarge(f"{ncols} columns exceed the 64-element limit")
    columns = [tuple(row[j] for row in rows) for j in range(ncols)]
    r0 = _vector_rank(columns, p)
    bases = [
        mask_of(c)
        for c in combinations(range(ncols), r0)
        if _vector_rank([columns[j] for j in c], p) == r0
    ]
    return matroid_from_bases(ncols, bases)


class Graph(NamedTuple):
    """Multigraph on vertices 0..n_vertices-1; loops and parallel edges
    are allowed and become matroid loops / parallel elements."""

    n_vertices: int
    edges: tuple


def _component_count(g: Graph) -> int:
    parent = list(range(g.n_vertices))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    comps = g.n_vertices
    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps


def graphic(g: Graph, validate: bool = True) -> Matroid:
    """Cycle matroid: elements are edges, bases are spanning forests."""
    m = len(g.edges)
    if m == 0:
        raise EmptyGroundSet("graph has no edges")
    if m > config.MAX_GROUND_SET:
        raise GroundSetTooLarge(f"{m} edges exceed the 64-element limit")
    for u, v in g.edges:
        if not (0 <= u < g.n_vertices and 0 <= v < g.n_vertices):
            raise BoundsViolation(f"edge ({u},{v}) outside vertex range")
    r = g.n_vertices - _component_count(g)
    if comb(m, r) > 5_000_000:
        raise CapExceeded(f"{comb(m, r)} candidate forests is past the cap")
    bases = []
    for c in combinations(range(m), r):
        parent = list(range(g.n_vertices))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        ok = True
        for ei in c:
            u, v = g.edges[ei]
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            bases.append(mask_of(c))
    if validate:
        return matroid_from_bases(m, bases)
    return Matroid(m, bases, validate=False)


def cographic(g: Graph, validate: bool = True) -> Matroid:
    """Bond matroid, the dual of the cycle matroid."""
    return dual(graphic(g, validate=validate))


def _matching_saturates(elems, adj, nsets) -> bool:
    """Kuhn augmenting-path test: can every listed element be matched to a
    distinct set containing it?"""
    match_elem = [None] * nsets

    def augment(e, visited):
        for j in adj[e]:
            if j in visited:
                continue
            visited.add(j)
            if match_elem[j] is None or augment(match_elem[j], visited):
                match_elem[j] = e
                return True
        return False

    for e in elems:
        if not augment(e, set()):
            return False
    return True


def transversal(n: int, sets) -> Matroid:
    """Transversal matroid of a set system over 0..n-1: a subset is
    independent when it has a system of distinct representatives."""
    if n < 1:
        raise EmptyGroundSet("transversal matroid needs at least one element")
    if n > config.MAX_GROUND_SET:
        raise GroundSetTooLarge(f"{n} elements exceed the 64-element limit")
    full = (1 << n) - 1
    masks = []
    for s in sets:
        m = s if isinstance(s, int) else mask_of(s)
        if m & ~full:
            raise BoundsViolation(f"set {m:#x} leaves the ground set")
        masks.append(m)
    adj = [[j for j, a in enumerate(masks) if (a >> e) & 1] for e in range(n)]
    rank = 0
    match_elem = [None] * len(masks)

    def augment(e, visited):
        for j in adj[e]:
            if j in visited:
                continue
            visited.add(j)
            if match_elem[j] is None or augment(match_elem[j], visited):
                match_elem[j] = e
                return True
        return False

    for e in range(n):
        if augment(e, set()):
            rank += 1
    bases = [
        mask_of(c)
        for c in combinations(range(n), rank)
        if _matching_saturates(c, adj, len(masks))
    ]
    return matroid_from_bases(n, bases)


def paving_from_hyperplanes(n: int, rank: int, parts) -> Matroid:
    """Paving matroid from its hyperplane partition.

    Every (rank-1)-subset of 0..n-1 must lie in exactly one part and each
    part must have at least rank-1 elements; the bases are the
    rank-subsets contained in no part.
    """
    if n < 1:
        raise EmptyGroundSet("paving matroid needs at least one element")
    if rank < 1 or rank > n:
        raise BoundsViolation(f"rank {rank} outside 1..{n}")
    full = (1 << n) - 1
    pmasks = []
    for s in parts:
        m = s if isinstance(s, int) else mask_of(s)
        if m & ~full:
            raise BoundsViolation(f"part {m:#x} leaves the ground set")
        if popcount(m) < rank - 1:
            raise NotAnRPartition(m, f"part {m:#x} smaller than {rank - 1}")
        pmasks.append(m)
    for c in combinations(range(n), rank - 1):
        cm = mask_of(c)
        hits = sum(1 for m in pmasks if cm & ~m == 0)
        if hits != 1:
            raise NotAnRPartition(
                cm, f"{rank - 1}-subset {cm:#x} lies in {hits} parts"
            )
    bases = [
        mask_of(c)
        for c in combinations(range(n), rank)
        if all(mask_of(c) & ~m for m in pmasks)
    ]
    return matroid_from_bases(n, bases)


FANO_ROWS = tuple(tuple((j + 1) >> i & 1 for j in range(7)) for i in range(3))

PAPPUS_LINES = (
    (0, 1, 2),
    (3, 4, 5),
    (6, 7, 8),
    (0, 4, 6),
    (0, 5, 7),
    (1, 5, 8),
    (1, 3, 6),
    (2, 3, 7),
    (2, 4, 8),
)

VAMOS_PLANES = (
    (0, 1, 4, 5),
    (0, 2, 4, 6),
    (0, 3, 4, 7),
    (1, 2, 5, 6),
    (1, 3, 5, 7),
)


def fano() -> Matroid:
    """Seven points, rank 3, over GF(2): column j is the binary vector of
    j+1, so {i,j,k} is a line exactly when (i+1)^(j+1)^(k+1) == 0."""
    return linear_matroid([list(r) for r in FANO_ROWS], 2)


def nonfano() -> Matroid:
    return relax(fano(), mask_of((0, 1, 2)))


def _paving_from_lines(n: int, rank: int, lines) -> Matroid:
    """Fill a line list up to a hyperplane partition with the uncovered
    (rank-1)-subsets as their own parts."""
    lmasks = [mask_of(l) for l in lines]
    parts = list(lmasks)
    for c in combinations(range(n), rank - 1):
        cm = mask_of(c)
        if not any(cm & ~m == 0 for m in lmasks):
            parts.append(cm)
    return paving_from_hyperplanes(n, rank, parts)


def pappus() -> Matroid:
    return _paving_from_lines(9, 3, PAPPUS_LINES)


def nonpappus() -> Matroid:
    return relax(pappus(), mask_of((6, 7, 8)))


def vamos() -> Matroid:
    return _paving_from_lines(8, 4, VAMOS_PLANES)


_NAMED = {
    "fano": fano,
    "nonfano": nonfano,
    "pappus": pappus,
    "nonpappus": nonpappus,
    "vamos": vamos,
}


def named(name: str) -> Matroid:
    key = name.strip().lower()
    if key not in _NAMED:
        raise ParseError(f"unknown named matroid {name!r}")
    return _NAMED[key]()


def schubert(n: int, a) -> Matroid:
    """Shifted matroid on {0..n} for a non-increasing offset vector a of
    length d+1 with a[0] <= n-d: the bases are the increasing tuples
    s_0 < ... < s_d with s_j <= n-d+j-a[j]."""
    av = tuple(int(x) for x in a)
    if not av:
        raise BoundsViolation("offset vector must be nonempty")
    d = len(av) - 1
    if n < 0 or d > n:
        raise BoundsViolation(f"rank {d + 1} exceeds ground set size {n + 1}")
    if any(av[i] < av[i + 1] for i in range(d)):
        raise BoundsViolation(f"offsets {av} are not non-increasing")
    if av[-1] < 0 or av[0] > n - d:
        raise BoundsViolation(f"offsets {av} outside 0..{n - d}")
    bound = [n - d + j - av[j] for j in range(d + 1)]
    bases = [
        mask_of(c)
        for c in combinations(range(n + 1), d + 1)
        if all(c[j] <= bound[j] for j in range(d + 1))
    ]
    return matroid_from_bases(n + 1, bases)
