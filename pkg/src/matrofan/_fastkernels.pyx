# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled bitmask kernels; function-for-function mirror of _purekernels."""

from cpython.mem cimport PyMem_Malloc, PyMem_Free

from itertools import permutations as _py_permutations

IMPLEMENTATION = "compiled"

ctypedef unsigned long long u64

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define MF_POPCNT(x) __builtin_popcountll(x)
    #else
    static int MF_POPCNT(unsigned long long x)
    { int c = 0; while (x) { x &= x - 1; c++; } return c; }
    #endif
    """
    int MF_POPCNT(u64 x) nogil


def popcount(x):
    return MF_POPCNT(<u64> x)


cdef u64 *_as_u64_array(list masks) except NULL:
    cdef Py_ssize_t k = len(masks)
    cdef u64 *arr = <u64 *> PyMem_Malloc(k * sizeof(u64))
    if arr == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(k):
        arr[i] = <u64> masks[i]
    return arr


def rank_table(n, bases):
    """Table t of length 2^n with t[S] = max over bases of |B ∩ S|."""
    cdef int cn = n
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << cn
    tab = bytearray(size)
    cdef unsigned char[::1] t = tab
    cdef list blist = list(bases)
    cdef u64 *barr = _as_u64_array(blist)
    cdef Py_ssize_t nb = len(blist)
    cdef Py_ssize_t i, s
    cdef u64 b, sub
    cdef int c, j
    cdef unsigned char v
    try:
        with nogil:
            for i in range(nb):
                b = barr[i]
                sub = b
                while True:
                    c = MF_POPCNT(sub)
                    if t[<Py_ssize_t> sub] < c:
                        t[<Py_ssize_t> sub] = <unsigned char> c
                    if sub == 0:
                        break
                    sub = (sub - 1) & b
            for j in range(cn):
                b = (<u64> 1) << j
                for s in range(size):
                    if s & b:
                        v = t[s ^ <Py_ssize_t> b]
                        if t[s] < v:
                            t[s] = v
    finally:
        PyMem_Free(barr)
    return tab


def validate_bases(n, bases):
    """Exchange check for every ordered pair; None or a witness (B1, B2, i)."""
    cdef list blist = list(bases)
    cdef Py_ssize_t nb = len(blist)
    cdef u64 *barr = _as_u64_array(blist)
    cdef int cn = n
    cdef u64 *member = NULL
    cdef Py_ssize_t words = 0, w
    cdef set bset = None
    cdef Py_ssize_t ia, ib
    cdef u64 a, b, diff, ibit, jbit, rem, cand, probe
    cdef bint ok
    cdef bint small = cn <= 20
    try:
        if small:
            words = ((<Py_ssize_t> 1) << cn) // 64 + 1
            member = <u64 *> PyMem_Malloc(words * sizeof(u64))
            if member == NULL:
                raise MemoryError()
            for w in range(words):
                member[w] = 0
            for ia in range(nb):
                a = barr[ia]
                member[a >> 6] |= (<u64> 1) << (a & 63)
        else:
            bset = set(blist)
        for ia in range(nb):
            a = barr[ia]
            for ib in range(nb):
                b = barr[ib]
                if a == b:
                    continue
                diff = a & ~b
                while diff:
                    ibit = diff & (<u64> 0 - diff)
                    diff ^= ibit
                    rem = a ^ ibit
                    cand = b & ~a
                    ok = False
                    while cand:
                        jbit = cand & (<u64> 0 - cand)
                        cand ^= jbit
                        probe = rem | jbit
                        if small:
                            if member[probe >> 6] & ((<u64> 1) << (probe & 63)):
                                ok = True
                                break
                        else:
                            if probe in bset:
                                ok = True
                                break
                    if not ok:
                        bl = int(ibit).bit_length() - 1
                        return (int(a), int(b), bl)
        return None
    finally:
        PyMem_Free(barr)
        if member != NULL:
            PyMem_Free(member)


def rank_size_counts(n, table):
    """counts[r][s] = number of subsets of rank r and size s."""
    cdef int cn = n
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << cn
    cdef const unsigned char[::1] t = table
    cdef int rmax = t[size - 1]
    cdef Py_ssize_t stride = cn + 1
    cdef long long *acc = <long long *> PyMem_Malloc(
        (rmax + 1) * stride * sizeof(long long))
    if acc == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, s
    for i in range((rmax + 1) * stride):
        acc[i] = 0
    try:
        with nogil:
            for s in range(size):
                acc[t[s] * stride + MF_POPCNT(<u64> s)] += 1
        return [
            [acc[r * stride + c] for c in range(stride)]
            for r in range(rmax + 1)
        ]
    finally:
        PyMem_Free(acc)


def flats_from_table(n, table):
    """Masks S with rank(S ∪ {i}) > rank(S) for every i outside S."""
    cdef int cn = n
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << cn
    cdef const unsigned char[::1] t = table
    cdef Py_ssize_t s
    cdef u64 full = (size - 1), rest, b
    cdef unsigned char r
    cdef bint closed
    out = []
    for s in range(size):
        r = t[s]
        rest = full & ~(<u64> s)
        closed = True
        while rest:
            b = rest & (<u64> 0 - rest)
            rest ^= b
            if t[s | <Py_ssize_t> b] == r:
                closed = False
                break
        if closed:
            out.append(s)
    return out


def closure_from_table(n, table, s):
    cdef int cn = n
    cdef const unsigned char[::1] t = table
    cdef Py_ssize_t cs = s
    cdef unsigned char r = t[cs]
    cdef Py_ssize_t out = cs, b
    cdef int i
    for i in range(cn):
        b = (<Py_ssize_t> 1) << i
        if not cs & b and t[cs | b] == r:
            out |= b
    return out


# Flattened permutation arrays per ground-set size, built once on demand.
_perm_cache = {}


cdef _perms_flat(int n):
    key = n
    got = _perm_cache.get(key)
    if got is not None:
        return got
    flat = bytearray()
    for perm in _py_permutations(range(n)):
        flat.extend(perm)
    _perm_cache[key] = bytes(flat)
    return _perm_cache[key]


def canonical_form(n, bases):
    """Lexicographically minimal relabeling of the basis family (n ≤ 8)."""
    cdef int cn = n
    if cn > 8:
        raise ValueError("canonical_form is limited to 8 elements")
    cdef bytes perms = _perms_flat(cn)
    cdef const unsigned char[::1] p = perms
    cdef Py_ssize_t nperm = len(perms) // cn if cn else 1
    cdef list blist = list(bases)
    cdef u64 *barr = _as_u64_array(blist)
    cdef Py_ssize_t nb = len(blist)
    cdef u64 best[4]
    cdef u64 fam[4]
    cdef bint have = False
    cdef long aut = 0
    cdef Py_ssize_t ip, i, base
    cdef u64 m, rem, bbit, pm
    cdef int cmp, w
    try:
        with nogil:
            for ip in range(nperm):
                base = ip * cn
                fam[0] = fam[1] = fam[2] = fam[3] = 0
                for i in range(nb):
                    m = barr[i]
                    pm = 0
                    rem = m
                    while rem:
                        bbit = rem & (<u64> 0 - rem)
                        rem ^= bbit
                        pm |= (<u64> 1) << p[base + MF_POPCNT(bbit - 1)]
                    fam[pm >> 6] |= (<u64> 1) << (pm & 63)
                if not have:
                    best[0] = fam[0]; best[1] = fam[1]
                    best[2] = fam[2]; best[3] = fam[3]
                    have = True
                    aut = 1
                else:
                    cmp = 0
                    for w in range(3, -1, -1):
                        if fam[w] < best[w]:
                            cmp = -1
                            break
                        if fam[w] > best[w]:
                            cmp = 1
                            break
                    if cmp < 0:
                        best[0] = fam[0]; best[1] = fam[1]
                        best[2] = fam[2]; best[3] = fam[3]
                        aut = 1
                    elif cmp == 0:
                        aut += 1
    finally:
        PyMem_Free(barr)
    masks = []
    cdef Py_ssize_t mm
    for mm in range(1 << cn):
        if best[mm >> 6] & ((<u64> 1) << (mm & 63)):
            masks.append(mm)
    return tuple(masks), aut


def ingleton_scan(flats, table):
    """All 4-tuples of flats violating the Ingleton rank inequality."""
    cdef list flist = list(flats)
    cdef Py_ssize_t nf = len(flist)
    cdef u64 *farr = _as_u64_array(flist)
    cdef const unsigned char[::1] t = table
    cdef Py_ssize_t a, b, c, d
    cdef u64 fa, fb, fc, fd, mab, mabc
    cdef int ra, rab, lhs0, rhs0, lhs1, rhs1, lhs, rhs
    out = []
    try:
        for a in range(nf):
            fa = farr[a]
            ra = t[<Py_ssize_t> fa]
            for b in range(nf):
                fb = farr[b]
                mab = fa | fb
                rab = t[<Py_ssize_t> mab]
                lhs0 = ra + t[<Py_ssize_t> fb]
                rhs0 = rab
                for c in range(nf):
                    fc = farr[c]
                    mabc = mab | fc
                    lhs1 = lhs0 + t[<Py_ssize_t> mabc]
                    rhs1 = (rhs0 + t[<Py_ssize_t> (fa | fc)]
                            + t[<Py_ssize_t> (fb | fc)])
                    with nogil:
                        for d in range(nf):
                            fd = farr[d]
                            lhs = lhs1 + t[<Py_ssize_t> (mab | fd)] \
                                + t[<Py_ssize_t> (fc | fd)]
                            rhs = rhs1 + t[<Py_ssize_t> (fa | fd)] \
                                + t[<Py_ssize_t> (fb | fd)]
                            if lhs > rhs:
                                with gil:
                                    out.append(
                                        (int(fa), int(fb), int(fc), int(fd)))
        return out
    finally:
        PyMem_Free(farr)
