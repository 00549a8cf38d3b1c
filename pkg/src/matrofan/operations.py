"""The operation algebra: minors, duality, sums, truncation, relaxation,
modular-cut extensions, coextension, minor search, and strong-map checks."""

from itertools import combinations
from typing import NamedTuple

from . import config
from .core import Matroid, bits_of, mask_of, matroid_from_bases, popcount
from .core import is_isomorphic as _is_isomorphic
from .errors import (
    BoundsViolation,
    EmptyGroundSet,
    GroundSetTooLarge,
    InternalError,
    NotAFlat,
    NotCircuitHyperplane,
    NotModularCut,
)


class MinorResult(NamedTuple):
    """A minor together with the dense re-indexing old element → new."""

    matroid: Matroid
    index_map: dict


def _remap(masks, kept: list[int]):
    """Compress masks supported on `kept` onto indices 0..len(kept)-1."""
    pos = {e: i for i, e in enumerate(kept)}
    out = []
    for m in masks:
        nm = 0
        for e in bits_of(m):
            nm |= 1 << pos[e]
        out.append(nm)
    return out, pos


def restrict(m: Matroid, t: int) -> MinorResult:
    """M|_T, re-indexed densely; bases are the largest basis traces on T."""
    if t == 0:
        raise EmptyGroundSet("restriction to the empty set")
    rt = m.rank_of(t)
    traces = {b & t for b in m.bases}
    best = [s for s in traces if popcount(s) == rt]
    kept = bits_of(t)
    masks, pos = _remap(best, kept)
    return MinorResult(Matroid(len(kept), masks, validate=False), pos)


def delete(m: Matroid, x: int) -> MinorResult:
    if x == m.full_mask:
        raise EmptyGroundSet("cannot delete the whole ground set")
    return restrict(m, m.full_mask & ~x)


def contract(m: Matroid, x: int) -> MinorResult:
    """M/X on E∖X: traces of the bases through a fixed maximal independent
    subset of X; rank drops by r(X)."""
    ix = 0
    r = 0
    for e in bits_of(x):
        if m.rank_of(ix | (1 << e)) > r:
            ix |= 1 << e
            r += 1
    rest = m.full_mask & ~x
    bases = [b & ~x for b in m.bases if b & ix == ix]
    kept = bits_of(rest)
    if not kept:
        return MinorResult(Matroid(0, [0], validate=False), {})
    masks, pos = _remap(bases, kept)
    return MinorResult(Matroid(len(kept), masks, validate=False), pos)


def dual(m: Matroid) -> Matroid:
    full = m.full_mask
    return Matroid(m.n_elements, [full & ~b for b in m.bases], validate=False)


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    n = m1.n_elements + m2.n_elements
    if n > config.MAX_GROUND_SET:
        raise GroundSetTooLarge(f"direct sum has {n} > 64 elements")
    shift = m1.n_elements
    bases = [b1 | (b2 << shift) for b1 in m1.bases for b2 in m2.bases]
    return Matroid(n, bases, validate=False)


def truncate(m: Matroid, k: int) -> Matroid:
    """Rank cap r'(S) = min(r(S), k); bases are the independent k-subsets."""
    if k < 0 or k > m.rank:
        raise BoundsViolation(f"truncation rank {k} outside 0..{m.rank}")
    if k == m.rank:
        return m
    bases = {mask_of(c) for b in m.bases for c in combinations(bits_of(b), k)}
    return Matroid(m.n_elements, bases, validate=False)


def relax(m: Matroid, x: int) -> Matroid:
    """Declare a circuit-hyperplane to be a basis."""
    d = m.rank - 1
    if popcount(x) != m.rank or m.rank_of(x) != d:
        raise NotCircuitHyperplane(f"{x:#x} is not a rank-{d} set of size {d + 1}")
    rem = x
    while rem:
        b = rem & -rem
        rem ^= b
        if m.rank_of(x ^ b) != d:
            raise NotCircuitHyperplane(f"{x:#x} is not a circuit")
    if m.closure_of(x) != x:
        raise NotCircuitHyperplane(f"{x:#x} is not a flat")
    return Matroid(m.n_elements, list(m.bases) + [x], validate=True)


def _modular_cut_witness(m: Matroid, family):
    """None if family is a modular cut of M, else a witness tuple."""
    flats = set(m.flats())
    fam = set(family)
    for f in fam:
        if f not in flats:
            return ("not-a-flat", f)
    for f in fam:
        for g in flats:
            if g & f == f and g not in fam:
                return ("not-up-closed", (f, g))
    for f1, f2 in combinations(sorted(fam), 2):
        meet = f1 & f2
        join = m.closure_of(f1 | f2)
        if m.rank_of(f1) + m.rank_of(f2) == m.rank_of(meet) + m.rank_of(join):
            if meet not in fam:
                return ("modular-pair", (f1, f2))
    return None


def is_modular_cut(m: Matroid, family) -> bool:
    return _modular_cut_witness(m, family) is None


def extend(m: Matroid, cut) -> Matroid:
    """Single-element extension M +_cut p with p = new top index.

    Rank of S∪{p} stays r(S) exactly when cl(S) lies in the cut; the new
    bases are therefore the old ones plus I∪{p} for independent I of size
    rank−1 whose closure avoids the cut.  Result is re-validated.
    """
    witness = _modular_cut_witness(m, cut)
    if witness is not None:
        raise NotModularCut(witness[1], witness[0])
    cutset = set(cut)
    p = 1 << m.n_elements
    if not cutset:
        bases = [b | p for b in m.bases]
        return matroid_from_bases(m.n_elements + 1, bases)
    bases = list(m.bases)
    if m.rank >= 1:
        seen = set()
        for b in m.bases:
            for c in combinations(bits_of(b), m.rank - 1):
                i = mask_of(c)
                if i in seen:
                    continue
                seen.add(i)
                if m.closure_of(i) not in cutset:
                    bases.append(i | p)
    return matroid_from_bases(m.n_elements + 1, bases)


def principal_extension(m: Matroid, f: int) -> Matroid:
    """Adjoin a generic element of the flat f."""
    flats = m.flats()
    if f not in flats:
        raise NotAFlat(f"{f:#x} is not a flat")
    cut = [g for g in flats if g & f == f]
    return extend(m, cut)


def free_extension(m: Matroid) -> Matroid:
    return principal_extension(m, m.full_mask)


def free_coextension(m: Matroid) -> Matroid:
    return dual(free_extension(dual(m)))


def has_minor(m: Matroid, target: Matroid, cap: int = 12) -> bool:
    """Exhaustive minor search (documented exponential, capped ground set)."""
    if m.n_elements > cap:
        raise GroundSetTooLarge(f"minor search capped at {cap} elements")
    nt = target.n_elements
    if nt > m.n_elements or target.rank > m.rank:
        return False
    target_nbases = len(target.bases)
    for csize in range(m.n_elements - nt + 1):
        for cc in combinations(range(m.n_elements), csize):
            cmask = mask_of(cc)
            if m.rank - m.rank_of(cmask) < target.rank:
                continue
            mc = contract(m, cmask).matroid if cmask else m
            for tt in combinations(range(mc.n_elements), nt):
                sub = restrict(mc, mask_of(tt)).matroid
                if sub.rank != target.rank or len(sub.bases) != target_nbases:
                    continue
                if _is_isomorphic(sub, target, cap=cap):
                    return True
    return False


def _with_extra_loop(m: Matroid) -> Matroid:
    return direct_sum(m, Matroid(1, [0], validate=False))


def is_strong_map(m1: Matroid, m2: Matroid, f) -> bool:
    """Preimage-of-flats test for f: E1∪{o} → E2∪{o}.

    f is a sequence of length n1+1; index n1 is the basepoint o1 and must
    map to n2 (the basepoint o2 of the loop summand).
    """
    a = _with_extra_loop(m1)
    b = _with_extra_loop(m2)
    if len(f) != a.n_elements or f[m1.n_elements] != m2.n_elements:
        raise BoundsViolation("map must send basepoint to basepoint")
    aflats = set(a.flats())
    for g in b.flats():
        pre = 0
        for i, fi in enumerate(f):
            if g & (1 << fi):
                pre |= 1 << i
        if pre not in aflats:
            return False
    return True


def _linear_subclasses(nh: int, groups):
    """All subsets of {0..nh-1} such that any group with ≥ 2 chosen members
    is wholly chosen (groups = hyperplanes through one coline)."""
    hyper_groups = [[] for _ in range(nh)]
    for gid, g in enumerate(groups):
        for h in g:
            hyper_groups[h].append(gid)
    status = [0] * nh  # 0 undecided, 1 in, -1 out
    out = []

    def close_in(h, trail) -> bool:
        stack = [h]
        while stack:
            x = stack.pop()
            if status[x] == 1:
                continue
            if status[x] == -1:
                return False
            status[x] = 1
            trail.append(x)
            for gid in hyper_groups[x]:
                g = groups[gid]
                members_in = sum(1 for y in g if status[y] == 1)
                if members_in >= 2:
                    for y in g:
                        if status[y] == -1:
                            return False
                        if status[y] == 0:
                            stack.append(y)
        return True

    def dfs(i):
        while i < nh and status[i] != 0:
            i += 1
        if i == nh:
            out.append(tuple(j for j in range(nh) if status[j] == 1))
            return
        status[i] = -1
        dfs(i + 1)
        status[i] = 0
        trail: list[int] = []
        if close_in(i, trail):
            dfs(i + 1)
        for x in trail:
            status[x] = 0

    dfs(0)
    return out


def enumerate_modular_cuts(m: Matroid, validate: bool = True):
    """Every modular cut of M, as frozensets of flats.

    A modular cut is determined by which hyperplanes it contains: two cut
    hyperplanes meeting in a coline force every hyperplane through that
    coline into the cut (they form a modular pair), and a lower flat lies
    in the cut exactly when all the flats covering it do (any two covers
    are a modular pair meeting in it).  So: enumerate the closed
    hyperplane sets, grow each downward by the all-covers rule, and
    re-validate against the definition (validate=False skips that
    quadratic re-check; bulk callers rely on the census cross-checks).
    The empty cut is appended last.
    """
    fam_all = m.flats()
    tab = m.rank_table()
    d1 = m.rank
    by_rank = [[] for _ in range(d1 + 1)]
    for f in fam_all:
        by_rank[tab[f]].append(f)
    hyper = by_rank[d1 - 1] if d1 >= 1 else []
    nh = len(hyper)
    groups_by_coline = {}
    for i, j in combinations(range(nh), 2):
        meet = hyper[i] & hyper[j]
        if tab[meet] == d1 - 2:
            groups_by_coline.setdefault(meet, set()).update((i, j))
    groups = [sorted(g) for g in groups_by_coline.values()]
    cuts = []
    for sub in _linear_subclasses(nh, groups):
        chosen = {m.full_mask}
        chosen.update(hyper[i] for i in sub)
        for r in range(d1 - 2, -1, -1):
            for f in by_rank[r]:
                covers = [g for g in by_rank[r + 1] if g & f == f]
                if covers and all(g in chosen for g in covers):
                    chosen.add(f)
        cut = frozenset(chosen)
        if validate and _modular_cut_witness(m, cut) is not None:
            raise InternalError("reconstructed cut fails validation")
        cuts.append(cut)
    cuts.append(frozenset())
    return cuts
