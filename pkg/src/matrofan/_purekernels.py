"""Pure-Python bitmask kernels.

These are the reference implementations of the hot loops: rank tables,
basis-exchange validation, rank/size tallies over 2^E, flat enumeration,
canonical forms under ground-set permutations, and the Ingleton scan.
`_fastkernels.pyx` mirrors this module function for function; `kernels`
picks whichever is available.  Masks are plain ints, bit i = element i.
"""

from itertools import permutations

IMPLEMENTATION = "pure"

_POP16 = bytes(bin(i).count("1") for i in range(1 << 16))


def popcount(x: int) -> int:
    c = 0
    while x:
        c += _POP16[x & 0xFFFF]
        x >>= 16
    return c


def rank_table(n: int, bases) -> bytearray:
    """Table t of length 2^n with t[S] = max over bases of |B ∩ S|.

    Built by seeding every subset of every basis with its size, then a
    subset-sum max sweep; O(2^n·n + Σ 2^|B|) instead of O(2^n·|bases|).
    """
    size = 1 << n
    tab = bytearray(size)
    for b in bases:
        sub = b
        while True:
            c = popcount(sub)
            if tab[sub] < c:
                tab[sub] = c
            if sub == 0:
                break
            sub = (sub - 1) & b
    for i in range(n):
        bit = 1 << i
        for s in range(size):
            if s & bit:
                t = tab[s ^ bit]
                if tab[s] < t:
                    tab[s] = t
    return tab


def validate_bases(n: int, bases):
    """Exchange check for every ordered pair; None or a witness (B1, B2, i).

    For each i in B1∖B2 some j in B2∖B1 must make (B1∖i)∪j a basis.
    """
    bset = set(bases)
    for a in bases:
        for b in bases:
            if a == b:
                continue
            diff = a & ~b
            while diff:
                ibit = diff & -diff
                diff ^= ibit
                rem = a ^ ibit
                cand = b & ~a
                ok = False
                while cand:
                    jbit = cand & -cand
                    cand ^= jbit
                    if (rem | jbit) in bset:
                        ok = True
                        break
                if not ok:
                    return (a, b, ibit.bit_length() - 1)
    return None


def rank_size_counts(n: int, table) -> list:
    """counts[r][s] = number of subsets of rank r and size s."""
    rmax = table[(1 << n) - 1]
    counts = [[0] * (n + 1) for _ in range(rmax + 1)]
    for s in range(1 << n):
        counts[table[s]][popcount(s)] += 1
    return counts


def flats_from_table(n: int, table) -> list:
    """Masks S with rank(S ∪ {i}) > rank(S) for every i outside S."""
    out = []
    full = (1 << n) - 1
    for s in range(1 << n):
        r = table[s]
        rest = full & ~s
        closed = True
        while rest:
            b = rest & -rest
            rest ^= b
            if table[s | b] == r:
                closed = False
                break
        if closed:
            out.append(s)
    return out


def closure_from_table(n: int, table, s: int) -> int:
    r = table[s]
    out = s
    for i in range(n):
        b = 1 << i
        if not s & b and table[s | b] == r:
            out |= b
    return out


def canonical_form(n: int, bases):
    """Lexicographically minimal relabeling of the basis family (n ≤ 8).

    The family of basis masks is packed into a 2^n-bit integer (bit m set
    iff m is a basis); the canonical form is the relabeling minimizing that
    integer.  Returns (sorted mask tuple, automorphism count).
    """
    if n > 8:
        raise ValueError("canonical_form is limited to 8 elements")
    best = None
    aut = 0
    for perm in permutations(range(n)):
        fam = 0
        for m in bases:
            pm = 0
            rem = m
            while rem:
                b = rem & -rem
                rem ^= b
                pm |= 1 << perm[b.bit_length() - 1]
            fam |= 1 << pm
        if best is None or fam < best:
            best = fam
            aut = 1
        elif fam == best:
            aut += 1
    masks = []
    m = 0
    while best:
        if best & 1:
            masks.append(m)
        best >>= 1
        m += 1
    return tuple(masks), aut


def ingleton_scan(flats, table) -> list:
    """All 4-tuples of flats violating the Ingleton rank inequality."""
    out = []
    nf = len(flats)
    for a in range(nf):
        fa = flats[a]
        ra = table[fa]
        for b in range(nf):
            fb = flats[b]
            mab = fa | fb
            rab = table[mab]
            lhs0 = ra + table[fb]
            rhs0 = rab
            for c in range(nf):
                fc = flats[c]
                mabc = mab | fc
                lhs1 = lhs0 + table[mabc]
                rhs1 = rhs0 + table[fa | fc] + table[fb | fc]
                for d in range(nf):
                    fd = flats[d]
                    lhs = lhs1 + table[mab | fd] + table[fc | fd]
                    rhs = rhs1 + table[fa | fd] + table[fb | fd]
                    if lhs > rhs:
                        out.append((fa, fb, fc, fd))
    return out
