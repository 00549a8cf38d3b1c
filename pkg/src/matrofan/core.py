"""Canonical matroid representation, cryptomorphism validators and converters,
and basic structural queries.

A matroid is stored as (ground-set size, rank, sorted basis masks).  Subsets
of E = {0,…,n} are machine-word bitmasks, bit i ⇔ element i.  Every other
axiom system (rank tables, flat families, independent sets) converts to and
from this canonical form through `validate_cryptomorphic` and the export
helpers.
"""

from itertools import combinations
from typing import Iterable, NamedTuple

from . import config, kernels
from .errors import (
    AxiomViolation,
    EmptyFamily,
    ExchangeFailure,
    GroundSetTooLarge,
    InternalError,
    UnequalCardinality,
)

popcount = kernels.popcount

ISO_CAP = 10


def mask_of(items: Iterable[int]) -> int:
    """Bitmask of an iterable of element indices."""
    m = 0
    for i in items:
        m |= 1 << i
    return m


def bits_of(mask: int) -> list[int]:
    """Sorted element indices of a mask."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def subsets_of_size(n: int, k: int):
    """All k-subsets of {0,…,n−1} as masks, in lexicographic tuple order."""
    for combo in combinations(range(n), k):
        yield mask_of(combo)


class Matroid:
    """Immutable matroid in canonical basis form.

    Use `matroid_from_bases` for validated construction; the constructor
    with validate=False is the internal fast path for families already
    known to satisfy exchange.
    """

    __slots__ = ("n_elements", "rank", "bases", "basis_set", "_cache")

    def __init__(self, n_elements: int, bases, validate: bool = True):
        if n_elements < 0 or n_elements > config.MAX_GROUND_SET:
            raise GroundSetTooLarge(
                f"ground set size {n_elements} outside 0..{config.MAX_GROUND_SET}"
            )
        blist = sorted(set(int(b) for b in bases))
        if not blist:
            raise EmptyFamily("a matroid needs at least one basis")
        full = (1 << n_elements) - 1
        if blist[-1] & ~full:
            raise AxiomViolation(
                "bases", blist[-1], f"mask outside ground set of {n_elements}"
            )
        r = popcount(blist[0])
        for b in blist:
            if popcount(b) != r:
                raise UnequalCardinality(
                    f"bases of sizes {r} and {popcount(b)} in one family"
                )
        if validate:
            witness = kernels.validate_bases(n_elements, blist)
            if witness is not None:
                raise ExchangeFailure(*witness)
        object.__setattr__(self, "n_elements", n_elements)
        object.__setattr__(self, "rank", r)
        object.__setattr__(self, "bases", tuple(blist))
        object.__setattr__(self, "basis_set", frozenset(blist))
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("Matroid is immutable")

    @property
    def full_mask(self) -> int:
        return (1 << self.n_elements) - 1

    def __eq__(self, other):
        return (
            isinstance(other, Matroid)
            and self.n_elements == other.n_elements
            and self.bases == other.bases
        )

    def __hash__(self):
        return hash((self.n_elements, self.bases))

    def __repr__(self):
        return (
            f"Matroid(n={self.n_elements}, rank={self.rank}, "
            f"bases={len(self.bases)})"
        )

    def rank_of(self, s: int) -> int:
        """r(S) = max over bases of |B ∩ S| (table-backed once built)."""
        tab = self._cache.get("table")
        if tab is not None:
            return tab[s]
        ceil = min(popcount(s), self.rank)
        best = 0
        for b in self.basis_set:
            c = popcount(b & s)
            if c > best:
                best = c
                if best == ceil:
                    break
        return best

    def rank_table(self, cap: int | None = None) -> bytearray:
        """Memoized full rank table over 2^E (capped exhaustive loop)."""
        tab = self._cache.get("table")
        if tab is None:
            config.check_cap(self.n_elements, cap, "rank table")
            tab = kernels.rank_table(self.n_elements, list(self.bases))
            self._cache["table"] = tab
        return tab

    def closure_of(self, s: int) -> int:
        tab = self._cache.get("table")
        if tab is not None:
            return kernels.closure_from_table(self.n_elements, tab, s)
        r = self.rank_of(s)
        out = s
        for i in range(self.n_elements):
            b = 1 << i
            if not s & b and self.rank_of(s | b) == r:
                out |= b
        return out

    def flats(self, cap: int | None = None) -> tuple:
        """All flats as masks, ascending."""
        got = self._cache.get("flats")
        if got is None:
            tab = self.rank_table(cap)
            got = tuple(kernels.flats_from_table(self.n_elements, tab))
            self._cache["flats"] = got
        return got

    @property
    def loops(self) -> int:
        """Mask of elements lying in no basis."""
        u = 0
        for b in self.bases:
            u |= b
        return self.full_mask & ~u

    @property
    def coloops(self) -> int:
        """Mask of elements lying in every basis."""
        a = self.full_mask
        for b in self.bases:
            a &= b
        return a

    def is_loopless(self) -> bool:
        return self.loops == 0


class FlatFamily(NamedTuple):
    """Flats grouped by rank; by_rank[k] is the tuple of rank-k flats."""

    n_elements: int
    by_rank: tuple

    def all_flats(self) -> tuple:
        return tuple(f for group in self.by_rank for f in group)

    def counts(self) -> tuple:
        return tuple(len(g) for g in self.by_rank)


class Degeneracies(NamedTuple):
    loops: int
    coloops: int
    simple: bool
    parallel_pairs: list


def matroid_from_bases(n: int, bases, validate: bool = True) -> Matroid:
    """Validated construction from a basis family (exchange axiom checked)."""
    return Matroid(n, bases, validate=validate)


def rank(m: Matroid, s: int) -> int:
    return m.rank_of(s)


def closure(m: Matroid, s: int) -> int:
    return m.closure_of(s)


def flats_by_rank(m: Matroid, cap: int | None = None) -> FlatFamily:
    """Flats grouped by rank, with the flat-family axioms re-verified.

    The verification (ground set present, intersection-closed, covers of
    each flat partition its complement) can only fail on a kernel bug,
    hence InternalError.
    """
    got = m._cache.get("flat_family")
    if got is not None:
        return got
    tab = m.rank_table(cap)
    flats = m.flats(cap)
    by_rank: list[list[int]] = [[] for _ in range(m.rank + 1)]
    for f in flats:
        by_rank[tab[f]].append(f)
    fam = FlatFamily(m.n_elements, tuple(tuple(g) for g in by_rank))
    _verify_flat_axioms(m, fam, flats, tab)
    m._cache["flat_family"] = fam
    return fam


def _verify_flat_axioms(m, fam, flats, tab):
    full = m.full_mask
    fset = set(flats)
    if full not in fset:
        raise InternalError("ground set is not a flat")
    for f in flats:
        for g in flats:
            if f < g and (f & g) not in fset:
                raise InternalError(f"intersection {f & g:#x} is not a flat")
    # covers of f are exactly the flats of the next rank containing f;
    # their differences must partition E \ f
    for r in range(m.rank):
        for f in fam.by_rank[r]:
            seen = 0
            total = 0
            for g in fam.by_rank[r + 1]:
                if g & f == f:
                    seen |= g
                    total += popcount(g & ~f)
            if seen != full or total != popcount(full & ~f):
                raise InternalError(
                    f"covers of {f:#x} do not partition its complement"
                )


def circuits(m: Matroid, cap: int | None = None) -> list[int]:
    """Inclusion-minimal dependent sets (size ≤ rank+1), ascending by size."""
    tab = m.rank_table(cap)
    out = []
    n = m.n_elements
    for size in range(1, min(m.rank + 1, n) + 1):
        for s in subsets_of_size(n, size):
            if tab[s] != size - 1:
                continue
            minimal = True
            rem = s
            while rem:
                b = rem & -rem
                rem ^= b
                if tab[s ^ b] != size - 1:
                    minimal = False
                    break
            if minimal:
                out.append(s)
    return out


def degeneracies(m: Matroid) -> Degeneracies:
    """Loops, coloops, simplicity, and parallel pairs."""
    loops = m.loops
    coloops = m.coloops
    pairs = []
    nonloop = [i for i in range(m.n_elements) if not loops & (1 << i)]
    for a, b in combinations(nonloop, 2):
        if m.rank_of((1 << a) | (1 << b)) == 1:
            pairs.append((a, b))
    return Degeneracies(loops, coloops, loops == 0 and not pairs, pairs)


def connected_components(m: Matroid) -> list[int]:
    """Partition of E under the transitive closure of basis exchange.

    i ~ j when some bases B, (B∖i)∪j both occur; loops and coloops end up
    as singletons.  Returns component masks ordered by least element.
    """
    n = m.n_elements
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    bset = m.basis_set
    full = m.full_mask
    for b in m.bases:
        for i in bits_of(b):
            rem = b & ~(1 << i)
            for j in bits_of(full & ~b):
                if (rem | (1 << j)) in bset:
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[ri] = rj
    groups: dict[int, int] = {}
    for i in range(n):
        r = find(i)
        groups[r] = groups.get(r, 0) | (1 << i)
    return sorted(groups.values(), key=lambda g: g & -g)


def circuit_components(m: Matroid, cap: int | None = None) -> list[int]:
    """Same partition via the circuit-sharing relation (cross-check route)."""
    n = m.n_elements
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in circuits(m, cap):
        members = bits_of(c)
        for j in members[1:]:
            ri, rj = find(members[0]), find(j)
            if ri != rj:
                parent[ri] = rj
    groups: dict[int, int] = {}
    for i in range(n):
        r = find(i)
        groups[r] = groups.get(r, 0) | (1 << i)
    return sorted(groups.values(), key=lambda g: g & -g)


def export_rank_table(m: Matroid, cap: int | None = None) -> list[int]:
    return list(m.rank_table(cap))


def export_independent_sets(m: Matroid, cap: int | None = None) -> list[int]:
    tab = m.rank_table(cap)
    return [s for s in range(1 << m.n_elements) if tab[s] == popcount(s)]


def export_flats(m: Matroid, cap: int | None = None) -> list[int]:
    return list(m.flats(cap))


def validate_cryptomorphic(kind: str, data) -> Matroid:
    """Check a full axiom system exhaustively and convert to basis form.

    kind is one of 'rank-table', 'flats', 'independents'; data is (n, X)
    where X is the 2^n rank table, the flat mask list, or the independent
    mask list.  Raises AxiomViolation with a witness on any failure.
    """
    if kind == "rank-table":
        return _from_rank_table(*data)
    if kind == "flats":
        return _from_flats(*data)
    if kind == "independents":
        return _from_independents(*data)
    raise ValueError(f"unknown cryptomorphism kind {kind!r}")


def _from_rank_table(n: int, table) -> Matroid:
    table = list(table)
    if len(table) != 1 << n:
        raise AxiomViolation("rank-table", len(table), "table length ≠ 2^n")
    config.check_cap(n, None, "rank-table validation")
    for s in range(1 << n):
        r = table[s]
        if r < 0 or r > popcount(s):
            raise AxiomViolation("rank-table", s, "0 ≤ r(S) ≤ |S| fails")
        for i in range(n):
            b = 1 << i
            if s & b:
                continue
            if table[s | b] < r:
                raise AxiomViolation("rank-table", (s, i), "monotonicity fails")
    # pairwise submodularity when affordable, else the equivalent local form
    if n <= 12:
        size = 1 << n
        for s in range(size):
            rs = table[s]
            for u in range(s + 1, size):
                if table[s | u] + table[s & u] > rs + table[u]:
                    raise AxiomViolation(
                        "rank-table", (s, u), "submodularity fails"
                    )
    else:
        for s in range(1 << n):
            rs = table[s]
            out = [i for i in range(n) if not s & (1 << i)]
            for a in range(len(out)):
                ba = 1 << out[a]
                for b in range(a + 1, len(out)):
                    bb = 1 << out[b]
                    if table[s | ba] + table[s | bb] < table[s | ba | bb] + rs:
                        raise AxiomViolation(
                            "rank-table", (s, out[a], out[b]),
                            "local submodularity fails",
                        )
    r = table[(1 << n) - 1]
    bases = [s for s in subsets_of_size(n, r) if table[s] == r]
    m = matroid_from_bases(n, bases)
    if export_rank_table(m) != table:
        raise AxiomViolation("rank-table", None, "table is not of matroid type")
    return m


def _from_flats(n: int, flat_masks) -> Matroid:
    flats = sorted(set(int(f) for f in flat_masks))
    full = (1 << n) - 1
    if full not in flats:
        raise AxiomViolation("flats", full, "ground set missing")
    fset = set(flats)
    for f, g in combinations(flats, 2):
        if f & g not in fset:
            raise AxiomViolation("flats", (f, g), "intersection not a flat")
    # minimal strict supersets of each flat must partition its complement
    for f in flats:
        sups = [g for g in flats if g != f and g & f == f]
        minimal = [
            g for g in sups
            if not any(h != g and h & g == h for h in sups)
        ]
        seen = 0
        total = 0
        for g in minimal:
            seen |= g
            total += popcount(g & ~f)
        if f != full and (seen != full or total != popcount(full & ~f)):
            raise AxiomViolation(
                "flats", f, "minimal supersets do not partition complement"
            )
    # heights in the containment order give ranks
    height: dict[int, int] = {}
    for f in sorted(flats, key=popcount):
        below = [height[g] for g in flats if g != f and g & f == g and g in height]
        height[f] = max(below) + 1 if below else 0
    r = height[full]
    bases = []
    for s in subsets_of_size(n, r):
        cl = full
        for g in flats:
            if g & s == s and popcount(g) < popcount(cl):
                cl = g
        if cl == full:
            bases.append(s)
    m = matroid_from_bases(n, bases)
    if set(export_flats(m)) != fset:
        raise AxiomViolation("flats", None, "family is not a matroid flat family")
    return m


def _from_independents(n: int, independents) -> Matroid:
    ind = sorted(set(int(s) for s in independents))
    if not ind:
        raise AxiomViolation("independents", None, "family is empty")
    iset = set(ind)
    for s in ind:
        rem = s
        while rem:
            b = rem & -rem
            rem ^= b
            if s ^ b not in iset:
                raise AxiomViolation(
                    "independents", (s, b.bit_length() - 1),
                    "not downward closed",
                )
    for s in ind:
        ps = popcount(s)
        for t in ind:
            if popcount(t) <= ps:
                continue
            cand = t & ~s
            ok = False
            while cand:
                b = cand & -cand
                cand ^= b
                if s | b in iset:
                    ok = True
                    break
            if not ok:
                raise AxiomViolation("independents", (s, t), "augmentation fails")
    r = max(popcount(s) for s in ind)
    bases = [s for s in ind if popcount(s) == r]
    m = matroid_from_bases(n, bases)
    if set(export_independent_sets(m)) != iset:
        raise AxiomViolation(
            "independents", None, "family is not the independents of a matroid"
        )
    return m


def canonicalize(m: Matroid) -> tuple[Matroid, int]:
    """Canonical relabeling (minimal basis-family bitmask) and |Aut(M)|.

    Limited to 8 elements; see kernels.canonical_form.
    """
    if m.n_elements > 8:
        raise GroundSetTooLarge("canonical forms are computed for ≤ 8 elements")
    masks, aut = kernels.canonical_form(m.n_elements, list(m.bases))
    return Matroid(m.n_elements, masks, validate=False), aut


def _element_profiles(m: Matroid) -> list:
    """Per-element invariant: (basis degree, sorted pair degrees)."""
    n = m.n_elements
    deg = [0] * n
    pair = [[0] * n for _ in range(n)]
    for b in m.bases:
        elems = bits_of(b)
        for i in elems:
            deg[i] += 1
        for i, j in combinations(elems, 2):
            pair[i][j] += 1
            pair[j][i] += 1
    return [(deg[i], tuple(sorted(pair[i]))) for i in range(n)]


def is_isomorphic(m1: Matroid, m2: Matroid, cap: int | None = None) -> bool:
    """Ground-set bijection carrying bases onto bases, if one exists.

    Brute force with element-invariant pruning; capped (default 10).
    """
    limit = ISO_CAP if cap is None else cap
    if m1.n_elements > limit or m2.n_elements > limit:
        raise GroundSetTooLarge(
            f"isomorphism search capped at {limit} elements"
        )
    if (
        m1.n_elements != m2.n_elements
        or m1.rank != m2.rank
        or len(m1.bases) != len(m2.bases)
    ):
        return False
    if m1.n_elements <= 8:
        a, _ = kernels.canonical_form(m1.n_elements, list(m1.bases))
        b, _ = kernels.canonical_form(m2.n_elements, list(m2.bases))
        return a == b
    n = m1.n_elements
    prof1 = _element_profiles(m1)
    prof2 = _element_profiles(m2)
    if sorted(prof1) != sorted(prof2):
        return False
    # pair-degree matrices for local consistency pruning
    pc1 = [[0] * n for _ in range(n)]
    pc2 = [[0] * n for _ in range(n)]
    for b in m1.bases:
        for i, j in combinations(bits_of(b), 2):
            pc1[i][j] += 1
            pc1[j][i] += 1
    for b in m2.bases:
        for i, j in combinations(bits_of(b), 2):
            pc2[i][j] += 1
            pc2[j][i] += 1
    images: list[int] = []
    used = [False] * n
    bset2 = m2.basis_set

    def extend(depth: int) -> bool:
        if depth == n:
            mapped = [0] * n
            for i, im in enumerate(images):
                mapped[i] = im
            for b in m1.bases:
                pm = 0
                for i in bits_of(b):
                    pm |= 1 << mapped[i]
                if pm not in bset2:
                    return False
            return True
        for cand in range(n):
            if used[cand] or prof2[cand] != prof1[depth]:
                continue
            if any(
                pc2[cand][images[e]] != pc1[depth][e] for e in range(depth)
            ):
                continue
            used[cand] = True
            images.append(cand)
            if extend(depth + 1):
                return True
            images.pop()
            used[cand] = False
        return False

    return extend(0)
