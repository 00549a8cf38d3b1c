"""Polynomial invariants: Möbius tables, characteristic and Tutte
polynomials by independent algorithms, Whitney numbers, f-vectors,
log-concavity reports, the chain invariant, and finite-field point counts.

Every polynomial is exact: arbitrary-precision integer coefficients,
never floats.
"""

from fractions import Fraction
from itertools import permutations, product
from math import comb
from typing import NamedTuple

from . import config, kernels
from .core import Matroid, flats_by_rank, popcount
from .errors import (
    CapExceeded,
    InternalError,
    GroundSetTooLarge,
    LoopPresent,
    NonPrimeModulus,
    NonzeroRemainder,
)
from .operations import contract, delete


class IntPolynomial:
    """Univariate integer polynomial; coeffs[i] holds q^(degree-i), so the
    tuple reads in descending powers and the lead entry is nonzero (the
    zero polynomial is the empty tuple)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs_desc=()):
        cs = [int(c) for c in coeffs_desc]
        i = 0
        while i < len(cs) and cs[i] == 0:
            i += 1
        object.__setattr__(self, "coeffs", tuple(cs[i:]))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, power: int) -> int:
        idx = self.degree - power
        if idx < 0 or power < 0:
            return 0
        return self.coeffs[idx]

    def _ascending(self):
        return tuple(reversed(self.coeffs))

    @classmethod
    def from_ascending(cls, asc):
        return cls(tuple(reversed(list(asc))))

    @classmethod
    def constant(cls, c: int):
        return cls((c,))

    @classmethod
    def variable(cls):
        return cls((1, 0))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self._ascending(), other._ascending()
        n = max(len(a), len(b))
        out = [0] * n
        for i, c in enumerate(a):
            out[i] += c
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial.from_ascending(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        a, b = self._ascending(), other._ascending()
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial.from_ascending(out)

    __rmul__ = __mul__

    def evaluate(self, x):
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def substitute(self, inner: "IntPolynomial") -> "IntPolynomial":
        acc = IntPolynomial()
        for c in self.coeffs:
            acc = acc * inner + IntPolynomial.constant(c)
        return acc

    def divide_exact(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """Quotient in Z[q]; raises NonzeroRemainder unless it divides."""
        if not divisor:
            raise NonzeroRemainder("division by the zero polynomial")
        if not self:
            return IntPolynomial()
        rem = list(self.coeffs)
        dc = divisor.coeffs
        lead = dc[0]
        qlen = len(rem) - len(dc) + 1
        if qlen < 1:
            raise NonzeroRemainder(f"degree {self.degree} < {divisor.degree}")
        quot = [0] * qlen
        for i in range(qlen):
            c = rem[i]
            if c % lead:
                raise NonzeroRemainder(f"leading term {c} not divisible by {lead}")
            f = c // lead
            quot[i] = f
            for j, d in enumerate(dc):
                rem[i + j] -= f * d
        if any(rem):
            raise NonzeroRemainder(f"remainder {rem[qlen:]} is not zero")
        return IntPolynomial(quot)

    def render(self, var: str = "q") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            p = self.degree - i
            mag = abs(c)
            if p == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else str(mag)
                body = f"{head}{var}" if p == 1 else f"{head}{var}^{p}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"IntPolynomial({self.render()})"


ZERO = IntPolynomial()
ONE = IntPolynomial((1,))
Q = IntPolynomial((1, 0))
Q_MINUS_1 = IntPolynomial((1, -1))


class BivariatePolynomial:
    """Dense integer grid; grid[i][j] is the coefficient of x^i y^j."""

    __slots__ = ("grid",)

    def __init__(self, grid=((0,),)):
        rows = [tuple(int(c) for c in row) for row in grid]
        w = max((len(r) for r in rows), default=1)
        rows = [r + (0,) * (w - len(r)) for r in rows]
        while len(rows) > 1 and not any(rows[-1]):
            rows.pop()
        while w > 1 and all(r[w - 1] == 0 for r in rows):
            w -= 1
            rows = [r[:w] for r in rows]
        object.__setattr__(self, "grid", tuple(rows) if rows else ((0,),))

    def __setattr__(self, name, value):
        raise AttributeError("BivariatePolynomial is immutable")

    def coefficient(self, i: int, j: int) -> int:
        if 0 <= i < len(self.grid) and 0 <= j < len(self.grid[0]):
            return self.grid[i][j]
        return 0

    def __eq__(self, other):
        return isinstance(other, BivariatePolynomial) and self.grid == other.grid

    def __hash__(self):
        return hash(self.grid)

    def __add__(self, other):
        h = max(len(self.grid), len(other.grid))
        w = max(len(self.grid[0]), len(other.grid[0]))
        return BivariatePolynomial(
            [
                [self.coefficient(i, j) + other.coefficient(i, j) for j in range(w)]
                for i in range(h)
            ]
        )

    def __mul__(self, other):
        h = len(self.grid) + len(other.grid) - 1
        w = len(self.grid[0]) + len(other.grid[0]) - 1
        out = [[0] * w for _ in range(h)]
        for i, row in enumerate(self.grid):
            for j, c in enumerate(row):
                if c:
                    for k, orow in enumerate(other.grid):
                        for l, d in enumerate(orow):
                            out[i + k][j + l] += c * d
        return BivariatePolynomial(out)

    def evaluate(self, x, y):
        acc = 0
        for i, row in enumerate(self.grid):
            rv = 0
            for c in reversed(row):
                rv = rv * y + c
            acc += rv * x**i
        return acc

    def substitute(self, px: IntPolynomial, py: IntPolynomial) -> IntPolynomial:
        """Univariate image under x -> px(q), y -> py(q)."""
        acc = ZERO
        for row in reversed(self.grid):
            rv = ZERO
            for c in reversed(row):
                rv = rv * py + IntPolynomial.constant(c)
            acc = acc * px + rv
        return acc

    def swap(self) -> "BivariatePolynomial":
        h, w = len(self.grid), len(self.grid[0])
        return BivariatePolynomial(
            [[self.grid[i][j] for i in range(h)] for j in range(w)]
        )

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for row in self.grid for c in row)

    def render(self, varx: str = "x", vary: str = "y") -> str:
        terms = []
        for i in range(len(self.grid) - 1, -1, -1):
            for j in range(len(self.grid[0]) - 1, -1, -1):
                c = self.grid[i][j]
                if c == 0:
                    continue
                mag = abs(c)
                body = ""
                if i:
                    body += varx if i == 1 else f"{varx}^{i}"
                if j:
                    body += vary if j == 1 else f"{vary}^{j}"
                if not body:
                    body = str(mag)
                elif mag != 1:
                    body = f"{mag}{body}"
                if not terms:
                    terms.append(body if c > 0 else f"-{body}")
                else:
                    terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms) if terms else "0"

    def __repr__(self):
        return f"BivariatePolynomial({self.render()})"


def mobius(m: Matroid):
    """μ(∅, F) for every flat F of a loopless matroid, bottom-up: μ of the
    bottom is 1 and each flat cancels the sum over its proper subflats."""
    if m.loops:
        raise LoopPresent(f"loops {m.loops:#x} collapse the lattice bottom")
    flats = sorted(m.flats(), key=popcount)
    table = {}
    for f in flats:
        if f == 0:
            table[f] = 1
            continue
        table[f] = -sum(v for g, v in table.items() if g & f == g and g != f)
    return table


def weisner_check(m: Matroid, table=None) -> bool:
    """μ(∅,F) = −Σ μ(∅,F') over flats F' covered by F avoiding a, for
    every flat F ≠ ∅ and every a ∈ F."""
    if table is None:
        table = mobius(m)
    tab = m.rank_table()
    flats = sorted(table, key=lambda f: tab[f])
    for f in flats:
        if f == 0:
            continue
        covers = [g for g in flats if g & f == g and tab[g] == tab[f] - 1]
        rem = f
        while rem:
            a = rem & -rem
            rem ^= a
            s = -sum(table[g] for g in covers if not g & a)
            if s != table[f]:
                return False
    return True


def charpoly(m: Matroid, algorithm: str = "whitney") -> IntPolynomial:
    """Characteristic polynomial; identically 0 when M has a loop.

    whitney: signed subset sum over the full rank table (needs 2^n).
    mobius: Möbius sum over the lattice of flats.
    delcon: deletion/contraction recursion, memoized on minors.
    """
    if algorithm == "whitney":
        config.check_cap(m.n_elements, what="whitney charpoly")
        if m.loops:
            return ZERO
        counts = kernels.rank_size_counts(m.n_elements, m.rank_table())
        asc = [0] * (m.rank + 1)
        for r, row in enumerate(counts):
            for s, cnt in enumerate(row):
                if cnt:
                    asc[m.rank - r] += cnt if s % 2 == 0 else -cnt
        return IntPolynomial.from_ascending(asc)
    if algorithm == "mobius":
        if m.loops:
            return ZERO
        table = mobius(m)
        tab = m.rank_table()
        asc = [0] * (m.rank + 1)
        for f, v in table.items():
            asc[m.rank - tab[f]] += v
        return IntPolynomial.from_ascending(asc)
    if algorithm == "delcon":
        return _charpoly_delcon(m, {})
    raise ValueError(f"unknown charpoly algorithm {algorithm!r}")


def _charpoly_delcon(m: Matroid, memo) -> IntPolynomial:
    if m.loops:
        return ZERO
    key = (m.n_elements, m.bases)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if m.n_elements == 0:
        return ONE
    col = m.coloops
    if col:
        e = col & -col
        out = Q_MINUS_1 * _charpoly_delcon(contract(m, e).matroid, memo)
    else:
        e = 1 << (m.n_elements - 1)
        out = _charpoly_delcon(delete(m, e).matroid, memo) - _charpoly_delcon(
            contract(m, e).matroid, memo
        )
    memo[key] = out
    return out


def mu_from_flats(m: Matroid, a: int):
    """μ^k as the signed Möbius sum over rank-k flats avoiding element a."""
    if m.loops:
        raise LoopPresent("reduced invariants need a loopless matroid")
    table = mobius(m)
    tab = m.rank_table()
    out = [0] * m.rank
    bit = 1 << a
    for f, v in table.items():
        if not f & bit and tab[f] < m.rank:
            out[tab[f]] += v
    return tuple(v if k % 2 == 0 else -v for k, v in enumerate(out))


def reduced_charpoly(m: Matroid):
    """(χ/(q−1), (μ^0..μ^d)); exact division, cross-checked against the
    flat-sum route for the first element."""
    if m.loops:
        raise LoopPresent("reduced charpoly needs a loopless matroid")
    algorithm = "whitney" if m.n_elements <= config.exhaustive_cap() else "mobius"
    chi = charpoly(m, algorithm)
    red = chi.divide_exact(Q_MINUS_1)
    d = m.rank - 1
    mu_list = tuple(
        red.coefficient(d - k) if k % 2 == 0 else -red.coefficient(d - k)
        for k in range(m.rank)
    )
    if m.n_elements >= 1 and mu_list != mu_from_flats(m, 0):
        raise InternalError("flat-sum route disagrees with polynomial division")
    if mu_list and mu_list[0] != 1:
        raise InternalError(f"mu^0 = {mu_list[0]} should be 1")
    return red, mu_list


def tutte(m: Matroid, algorithm: str = "rankgen") -> BivariatePolynomial:
    """Tutte polynomial T(x,y).

    rankgen: substitute (x−1, y−1) into the corank-nullity subset sum.
    delcon: loop/coloop split plus deletion/contraction, memoized.
    """
    if algorithm == "rankgen":
        config.check_cap(m.n_elements, what="rank-generating sum")
        counts = kernels.rank_size_counts(m.n_elements, m.rank_table())
        du = m.rank
        dv = m.n_elements - m.rank
        racc = [[0] * (dv + 1) for _ in range(du + 1)]
        for r, row in enumerate(counts):
            for s, cnt in enumerate(row):
                if cnt:
                    racc[m.rank - r][s - r] += cnt
        grid = [
            [
                sum(
                    racc[a][b]
                    * comb(a, i)
                    * comb(b, j)
                    * (-1) ** (a - i + b - j)
                    for a in range(i, du + 1)
                    for b in range(j, dv + 1)
                )
                for j in range(dv + 1)
            ]
            for i in range(du + 1)
        ]
        return BivariatePolynomial(grid)
    if algorithm == "delcon":
        return _tutte_delcon(m, {})
    raise ValueError(f"unknown tutte algorithm {algorithm!r}")


_BIV_ONE = BivariatePolynomial(((1,),))
_BIV_X = BivariatePolynomial(((0,), (1,)))
_BIV_Y = BivariatePolynomial(((0, 1),))


def _tutte_delcon(m: Matroid, memo) -> BivariatePolynomial:
    key = (m.n_elements, m.bases)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if m.n_elements == 0:
        return _BIV_ONE
    loops = m.loops
    col = m.coloops
    if loops | col == m.full_mask:
        lc, cc = popcount(loops), popcount(col)
        grid = [[0] * (lc + 1) for _ in range(cc + 1)]
        grid[cc][lc] = 1
        out = BivariatePolynomial(grid)
    elif loops:
        e = loops & -loops
        out = _BIV_Y * _tutte_delcon(delete(m, e).matroid, memo)
    elif col:
        e = col & -col
        out = _BIV_X * _tutte_delcon(contract(m, e).matroid, memo)
    else:
        e = 1 << (m.n_elements - 1)
        out = _tutte_delcon(delete(m, e).matroid, memo) + _tutte_delcon(
            contract(m, e).matroid, memo
        )
    memo[key] = out
    return out


def whitney_numbers(m: Matroid):
    """Flat counts by rank, W_0 .. W_rank."""
    return flats_by_rank(m).counts()


def f_vector(m: Matroid):
    """f_i = number of independent sets of size i, i = 0..rank."""
    config.check_cap(m.n_elements, what="independent-set counting")
    counts = kernels.rank_size_counts(m.n_elements, m.rank_table())
    return tuple(counts[i][i] for i in range(m.rank + 1))


def h_polynomial(m: Matroid) -> IntPolynomial:
    """h(q) = f(q−1) for f(q) = Σ f_i q^(rank−i)."""
    f = IntPolynomial(f_vector(m))
    return f.substitute(Q_MINUS_1)


class LogConcavityReport(NamedTuple):
    ok: bool
    violation_index: int | None
    internal_zeros: tuple
    strict: bool


def is_log_concave(coeffs) -> LogConcavityReport:
    """|c_{i-1} c_{i+1}| ≤ c_i² on absolute values for interior i, plus a
    report of zeros strictly between the outermost nonzero entries."""
    cs = [abs(int(c)) for c in coeffs]
    nz = [i for i, c in enumerate(cs) if c]
    zeros = tuple(i for i in range(nz[0], nz[-1] + 1) if cs[i] == 0) if nz else ()
    violation = None
    strict = True
    for i in range(1, len(cs) - 1):
        lhs = cs[i - 1] * cs[i + 1]
        rhs = cs[i] * cs[i]
        if lhs > rhs:
            violation = i
            break
        if lhs == rhs:
            strict = False
    ok = violation is None
    return LogConcavityReport(ok, violation, zeros, ok and strict and not zeros)


def derksen_g(m: Matroid):
    """Chain invariant: for every ordering of the ground set, the
    composition with entries rank(E_i) − rank(E_{i-1}) + 1; returned as a
    composition → count table with (n)! total weight."""
    n = m.n_elements
    if n > 10:
        raise GroundSetTooLarge(f"chain invariant enumerates {n}! orderings")
    tab = m.rank_table()
    out = {}
    for perm in permutations(range(n)):
        mask = 0
        prev = 0
        comp = [0] * n
        for i, e in enumerate(perm):
            mask |= 1 << e
            r = tab[mask]
            comp[i] = r - prev + 1
            prev = r
        key = tuple(comp)
        out[key] = out.get(key, 0) + 1
    return out


def torus_point_count(p: int, rows) -> int:
    """Number of vectors in the row space over GF(p) with every coordinate
    nonzero; the finite-field bridge equates it with χ at q = p."""
    from .constructions import _is_prime

    if not _is_prime(p):
        raise NonPrimeModulus(f"{p} is not prime")
    work = [[int(x) % p for x in row] for row in rows]
    if not work or not work[0]:
        return 0
    ncols = len(work[0])
    basis = []
    pivots = []
    for row in work:
        cur = row[:]
        for b, c in zip(basis, pivots):
            f = cur[c]
            if f:
                cur = [(x - f * y) % p for x, y in zip(cur, b)]
        piv = next((j for j, x in enumerate(cur) if x), None)
        if piv is None:
            continue
        inv = pow(cur[piv], p - 2, p)
        basis.append([(x * inv) % p for x in cur])
        pivots.append(piv)
    k = len(basis)
    if p**k > 10_000_000:
        raise CapExceeded(f"{p}^{k} row-space vectors is past the cap")
    count = 0
    for cf in product(range(p), repeat=k):
        vec = [0] * ncols
        for c, b in zip(cf, basis):
            if c:
                for j, x in enumerate(b):
                    if x:
                        vec[j] = (vec[j] + c * x) % p
        if all(vec):
            count += 1
    return count
