"""Basis polytopes: vertices, the exchange test for vertex sets, face
matroids for weight vectors, greedy optimization, and dimension."""

from fractions import Fraction
from itertools import combinations, product

from .core import Matroid, bits_of, connected_components, mask_of, popcount
from .constructions import _vector_rank
from .errors import BoundsViolation, EmptyFamily, MixedCardinality
from . import kernels


def polytope_vertices(m: Matroid):
    """One 0/1 indicator vector per basis."""
    n = m.n_elements
    return [tuple((b >> i) & 1 for i in range(n)) for b in m.bases]


def _point_to_mask(point, n: int) -> int:
    if isinstance(point, int):
        if point < 0 or point >> n:
            raise BoundsViolation(f"mask {point:#x} outside the ground set")
        return point
    coords = list(point)
    if len(coords) != n:
        raise BoundsViolation(f"point of length {len(coords)}, expected {n}")
    mask = 0
    for i, c in enumerate(coords):
        if c == 1:
            mask |= 1 << i
        elif c != 0:
            raise BoundsViolation(f"coordinate {c} is not 0/1")
    return mask


def is_matroid_vertex_set(n: int, points) -> bool:
    """Exchange test: do these hypersimplex vertices span a basis polytope?"""
    masks = sorted({_point_to_mask(p, n) for p in points})
    if not masks:
        raise EmptyFamily("no points given")
    sizes = {popcount(b) for b in masks}
    if len(sizes) > 1:
        raise MixedCardinality(f"coordinate sums {sorted(sizes)} differ")
    return kernels.validate_bases(n, masks) is None


def greedy_basis(m: Matroid, c, sense: str = "max"):
    """Greedy basis for a weight vector; ties go to the smaller index.

    Returns (basis mask, attained weight).
    """
    n = m.n_elements
    w = list(c)
    if len(w) != n:
        raise BoundsViolation(f"{len(w)} weights for {n} elements")
    if sense == "max":
        order = sorted(range(n), key=lambda e: (-w[e], e))
    elif sense == "min":
        order = sorted(range(n), key=lambda e: (w[e], e))
    else:
        raise ValueError(f"sense must be max or min, got {sense!r}")
    b = 0
    r = 0
    for e in order:
        if r == m.rank:
            break
        if m.rank_of(b | (1 << e)) > r:
            b |= 1 << e
            r += 1
    return b, sum(w[e] for e in bits_of(b))


def face_matroid(m: Matroid, w, algorithm: str = "filter") -> Matroid:
    """The matroid whose bases are the bases of minimal w-weight.

    filter: direct scan of the basis list.
    flag: decompose by the level sets of w and assemble the direct sum of
    the slices (M restricted to a level, contracted by the lower levels),
    keeping the original labels.
    """
    n = m.n_elements
    wv = list(w)
    if len(wv) != n:
        raise BoundsViolation(f"{len(wv)} weights for {n} elements")
    if algorithm == "filter":
        best = None
        keep = []
        for b in m.bases:
            wt = sum(wv[e] for e in bits_of(b))
            if best is None or wt < best:
                best = wt
                keep = [b]
            elif wt == best:
                keep.append(b)
        return Matroid(n, keep, validate=False)
    if algorithm == "flag":
        levels = sorted(set(wv))
        block_choices = []
        prev = 0
        prev_rank = 0
        for lv in levels:
            cur = prev | mask_of(e for e in range(n) if wv[e] == lv)
            cur_rank = m.rank_of(cur)
            delta = cur_rank - prev_rank
            members = bits_of(cur & ~prev)
            choices = [
                mask_of(cc)
                for cc in combinations(members, delta)
                if m.rank_of(mask_of(cc) | prev) == prev_rank + delta
            ]
            block_choices.append(choices)
            prev = cur
            prev_rank = cur_rank
        bases = []
        for pick in product(*block_choices):
            acc = 0
            for p in pick:
                acc |= p
            bases.append(acc)
        return Matroid(n, bases, validate=False)
    raise ValueError(f"unknown face_matroid algorithm {algorithm!r}")


def polytope_dimension(m: Matroid) -> int:
    """dim P(M) = (ground set size) − (number of connected components)."""
    return m.n_elements - len(connected_components(m))


def affine_rank(points) -> int:
    """Dimension of the affine hull, exactly over the rationals."""
    pts = [list(p) for p in points]
    if len(pts) <= 1:
        return 0
    base = pts[0]
    diffs = [
        [Fraction(x) - Fraction(y) for x, y in zip(p, base)] for p in pts[1:]
    ]
    return _vector_rank(diffs, None)
