"""Fans of flats as balanced weights on nested-set cones, with the two
degree-lowering cup operators and the degree pairing.

Everything lives homogenized in Z^(ground size): a k-dimensional cone is
a flag of k proper nonempty subsets, its lattice spanned by their
indicator vectors together with the all-ones vector e_E (shifts along the
diagonal are identified).  A weight assigns integers to the flags of one
fixed length; balancing at a (k−1)-flag τ says the weighted sum of the
inserted-set indicators lies in the lattice of τ.

The two operators come from the piecewise-linear functions
min(w_0..w_n) and min(−w_0..−w_n): on an inserted generator e_S the
first vanishes and the second is −1, and on the lattice of τ their
values are read off the coefficients in the basis {e_G1..e_G(k−1), e_E}.
That turns the general weighted-intersection formula into the closed
forms used below; membership in the lattice is exactly the balancing
condition, so the solve failing raises NotBalanced with a witness.
"""

from typing import NamedTuple

from .core import Matroid, bits_of, flats_by_rank, popcount
from .errors import BoundsViolation, LoopPresent, NotBalanced, WrongDimension
from .invariants import mobius


class MinkowskiWeight(NamedTuple):
    """Sparse integer weight on the flags of one length (= dimension)."""

    n_elements: int
    dimension: int
    values: dict


def _chains(by_rank, r_lo: int, r_hi: int):
    """Flag tuples of flats with ranks exactly r_lo..r_hi, ascending."""
    chains = [(f,) for f in by_rank[r_lo]]
    for r in range(r_lo + 1, r_hi + 1):
        chains = [
            ch + (f,) for ch in chains for f in by_rank[r] if ch[-1] & ~f == 0
        ]
    return chains


def bergman_weight(m: Matroid) -> MinkowskiWeight:
    """Weight 1 on every maximal flag of proper flats (dimension rank−1)."""
    if m.loops:
        raise LoopPresent("fan of flats needs a loopless matroid")
    d = m.rank - 1
    fam = flats_by_rank(m).by_rank
    if d == 0:
        return MinkowskiWeight(m.n_elements, 0, {(): 1})
    return MinkowskiWeight(m.n_elements, d, {ch: 1 for ch in _chains(fam, 1, d)})


def truncation_weight(m: Matroid, r1: int, r2: int) -> MinkowskiWeight:
    """|μ(∅, F_{r1})| on the flags of flats with ranks exactly r1..r2."""
    if m.loops:
        raise LoopPresent("truncation weight needs a loopless matroid")
    d = m.rank - 1
    if not 1 <= r1 <= r2 <= d:
        raise BoundsViolation(f"need 1 <= {r1} <= {r2} <= {d}")
    fam = flats_by_rank(m).by_rank
    mu = mobius(m)
    return MinkowskiWeight(
        m.n_elements,
        r2 - r1 + 1,
        {ch: abs(mu[ch[0]]) for ch in _chains(fam, r1, r2)},
    )


def _solve_flag_coords(tau, vec, n: int):
    """Write vec as Σ b_j·e_{G_j} + b_E·e_E for the flag τ = (G_1..G_k).

    vec must be constant on the consecutive difference blocks; the block
    values then give b_E (last block) and b_j (value step at G_j).
    Returns (b_list, b_E), or (None, residual) when vec is outside the
    lattice, residual being vec minus the nearest block-constant vector.
    """
    blocks = []
    prev = 0
    for g in tau:
        blocks.append(g & ~prev)
        prev = g
    blocks.append(((1 << n) - 1) & ~prev)
    vals = []
    ok = True
    for blk in blocks:
        first = (blk & -blk).bit_length() - 1
        vals.append(vec[first])
        for e in bits_of(blk):
            if vec[e] != vec[first]:
                ok = False
    if not ok:
        recon = [0] * n
        for blk, v in zip(blocks, vals):
            for e in bits_of(blk):
                recon[e] = v
        residual = tuple(x - y for x, y in zip(vec, recon))
        return None, residual
    bs = [vals[j] - vals[j + 1] for j in range(len(tau))]
    return bs, vals[-1]


def _coface_sums(c: MinkowskiWeight):
    """For each one-step subflag τ of the support: the vector
    Σ c(σ)·e_S over cofaces σ in the support (S the inserted subset),
    plus the plain sum Σ c(σ)."""
    n = c.n_elements
    acc = {}
    for sigma, val in c.values.items():
        for i in range(c.dimension):
            tau = sigma[:i] + sigma[i + 1 :]
            s = sigma[i]
            slot = acc.get(tau)
            if slot is None:
                slot = acc[tau] = [[0] * n, 0]
            vec, _ = slot
            for e in bits_of(s):
                vec[e] += val
            slot[1] += val
    return acc


def check_balancing(c: MinkowskiWeight):
    """(True, None) if balanced; else (False, (τ, residual vector))."""
    if c.dimension == 0:
        return True, None
    for tau, (vec, _) in _coface_sums(c).items():
        bs, extra = _solve_flag_coords(tau, vec, c.n_elements)
        if bs is None:
            return False, (tau, extra)
    return True, None


def _cup(c: MinkowskiWeight, kind: str) -> MinkowskiWeight:
    if c.dimension == 0:
        raise WrongDimension("cannot cup a dimension-0 weight")
    out = {}
    for tau, (vec, total) in _coface_sums(c).items():
        bs, b_e = _solve_flag_coords(tau, vec, c.n_elements)
        if bs is None:
            raise NotBalanced(tau, b_e)
        if kind == "alpha":
            v = b_e
        else:
            v = total - sum(bs) - b_e
        if v:
            out[tau] = v
    return MinkowskiWeight(c.n_elements, c.dimension - 1, out)


def cup_alpha(c: MinkowskiWeight) -> MinkowskiWeight:
    return _cup(c, "alpha")


def cup_beta(c: MinkowskiWeight) -> MinkowskiWeight:
    return _cup(c, "beta")


def degree(c: MinkowskiWeight) -> int:
    """Value on the origin of a dimension-0 weight."""
    if c.dimension != 0:
        raise WrongDimension(f"degree of a dimension-{c.dimension} weight")
    return c.values.get((), 0)


def mu_via_intersection(m: Matroid, r: int) -> int:
    """deg(α^(d−r) β^r ∪ fan of flats): the r-th reduced coefficient."""
    d = m.rank - 1
    if not 0 <= r <= d:
        raise BoundsViolation(f"need 0 <= {r} <= {d}")
    w = bergman_weight(m)
    for _ in range(r):
        w = cup_beta(w)
    for _ in range(d - r):
        w = cup_alpha(w)
    return degree(w)


def fink_degree_test(c: MinkowskiWeight) -> bool:
    """deg(α^dim ∪ c) == 1, the normalization a fan of flats satisfies."""
    w = c
    for _ in range(c.dimension):
        w = cup_alpha(w)
    return degree(w) == 1


def verify_truncation_identity(m: Matroid, r1: int, r2: int) -> bool:
    """α^(d−r2) β^(r1−1) ∪ (fan of flats) compared flag-by-flag with the
    direct truncation weight."""
    d = m.rank - 1
    if not 1 <= r1 <= r2 <= d:
        raise BoundsViolation(f"need 1 <= {r1} <= {r2} <= {d}")
    w = bergman_weight(m)
    for _ in range(r1 - 1):
        w = cup_beta(w)
    for _ in range(d - r2):
        w = cup_alpha(w)
    target = truncation_weight(m, r1, r2)
    return w.dimension == target.dimension and w.values == target.values
