"""Polynomial types, Möbius values, characteristic and Tutte polynomials."""

import random
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matrofan import constructions as cs
from matrofan import errors
from matrofan import invariants as iv
from matrofan import operations as op
from matrofan.core import bits_of, flats_by_rank, matroid_from_bases

small_ints = st.lists(st.integers(-50, 50), min_size=0, max_size=6)


def poly(coeffs):
    return iv.IntPolynomial.from_ascending(coeffs)


# ---------------------------------------------------------------- polynomials

class TestIntPolynomial:
    def test_descending_storage(self):
        p = iv.IntPolynomial((1, -4, 3))
        assert p.coeffs == (1, -4, 3)
        assert p.degree == 2
        assert p.coefficient(2) == 1
        assert p.coefficient(0) == 3

    def test_leading_zeros_trimmed(self):
        assert iv.IntPolynomial((0, 0, 5, 1)).coeffs == (5, 1)
        assert iv.IntPolynomial(()).coeffs == ()
        assert iv.ZERO.coeffs == ()

    def test_render_fixtures(self):
        assert iv.IntPolynomial((1, -4, 3)).render() == "q^2 - 4q + 3"
        assert iv.IntPolynomial((1, -7, 14, -8)).render() == "q^3 - 7q^2 + 14q - 8"
        assert iv.ZERO.render() == "0"
        assert iv.ONE.render() == "1"
        assert (iv.Q - iv.ONE).render() == "q - 1"
        assert iv.IntPolynomial((-2, 0, 1)).render() == "-2q^2 + 1"

    @given(small_ints, small_ints)
    def test_add_commutes(self, a, b):
        assert poly(a) + poly(b) == poly(b) + poly(a)

    @given(small_ints, small_ints, small_ints)
    def test_mul_distributes(self, a, b, c):
        p, q, r = poly(a), poly(b), poly(c)
        assert p * (q + r) == p * q + p * r

    @given(small_ints, small_ints)
    def test_evaluate_is_ring_hom(self, a, b):
        p, q = poly(a), poly(b)
        for x in (-3, 0, 1, 7):
            assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
            assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)

    @given(small_ints, small_ints)
    def test_divide_exact_inverts_mul(self, a, b):
        p, q = poly(a), poly(b)
        if q == iv.ZERO:
            return
        assert (p * q).divide_exact(q) == p

    def test_divide_exact_rejects_remainder(self):
        with pytest.raises(errors.NonzeroRemainder):
            (iv.Q + iv.ONE).divide_exact(iv.Q_MINUS_1)

    @given(small_ints, small_ints)
    def test_substitute_composes(self, a, b):
        p, s = poly(a), poly(b)
        for x in (-2, 0, 3):
            assert p.substitute(s).evaluate(x) == p.evaluate(s.evaluate(x))


class TestBivariatePolynomial:
    def test_grid_trimmed(self):
        t = iv.BivariatePolynomial(((0, 0), (0, 0)))
        assert t.grid == ((0,),)

    def test_mul_matches_evaluate(self):
        rng = random.Random(9)
        for _ in range(20):
            a = iv.BivariatePolynomial(
                tuple(tuple(rng.randint(-4, 4) for _ in range(3)) for _ in range(3)))
            b = iv.BivariatePolynomial(
                tuple(tuple(rng.randint(-4, 4) for _ in range(2)) for _ in range(2)))
            ab = a * b
            for x in (-1, 2):
                for y in (0, 3):
                    assert ab.evaluate(x, y) == a.evaluate(x, y) * b.evaluate(x, y)

    def test_swap_involution(self):
        t = iv.tutte(cs.named("fano"))
        assert t.swap().swap() == t

    def test_is_nonnegative(self):
        assert iv.tutte(cs.uniform(2, 4)).is_nonnegative()
        assert not iv.BivariatePolynomial(((0, 1), (-1, 0))).is_nonnegative()


# ---------------------------------------------------------------- moebius

def test_mobius_u24():
    mb = iv.mobius(cs.uniform(2, 4))
    assert mb[0] == 1
    assert all(mb[1 << e] == -1 for e in range(4))
    assert mb[0b1111] == 3


def test_mobius_fano():
    mb = iv.mobius(cs.named("fano"))
    fam = flats_by_rank(cs.named("fano"))
    assert all(mb[f] == -1 for f in fam.by_rank[1])
    assert all(mb[f] == 2 for f in fam.by_rank[2])
    assert mb[cs.named("fano").full_mask] == -8


def test_mobius_rejects_loops():
    with pytest.raises(errors.LoopPresent):
        iv.mobius(matroid_from_bases(2, [0b01]))


def test_mobius_alternates_in_sign(corpus):
    for m in corpus:
        if not m.is_loopless():
            continue
        mb = iv.mobius(m)
        table = m.rank_table()
        for f, v in mb.items():
            assert v != 0
            assert (v > 0) == (table[f] % 2 == 0)


def test_weisner_recurrence(corpus):
    for m in corpus:
        if m.is_loopless():
            assert iv.weisner_check(m)


def test_mu_from_flats_matches_mobius():
    for m in (cs.uniform(2, 4), cs.named("fano"), cs.named("vamos")):
        mb = iv.mobius(m)
        fam = flats_by_rank(m)
        for a in range(m.n_elements):
            got = iv.mu_from_flats(m, a)
            want = []
            for k in range(m.rank + 1):
                s = sum(mb[f] for f in fam.by_rank[k] if not f >> a & 1)
                want.append(abs(s))
            assert list(got) == want[: len(got)]
            # independent of the basepoint: equals the reduced coefficients
            assert tuple(got) == iv.reduced_charpoly(m)[1]


# ---------------------------------------------------------------- charpoly

def test_charpoly_fixtures():
    assert iv.charpoly(cs.uniform(1, 1)) == iv.Q_MINUS_1
    assert iv.charpoly(cs.uniform(2, 4)).coeffs == (1, -4, 3)
    assert iv.charpoly(cs.named("fano")).coeffs == (1, -7, 14, -8)
    assert iv.charpoly(cs.named("nonfano")).coeffs == (1, -7, 15, -9)


def test_charpoly_of_loopy_matroid_is_zero():
    assert iv.charpoly(matroid_from_bases(2, [0b01])) == iv.ZERO


def test_charpoly_three_algorithms_agree(corpus):
    for m in corpus:
        w = iv.charpoly(m, algorithm="whitney")
        assert w == iv.charpoly(m, algorithm="mobius")
        assert w == iv.charpoly(m, algorithm="delcon")


def test_charpoly_whitney_oracle():
    # independent implementation: alternating sum over all subsets
    for m in (cs.uniform(2, 4), cs.named("fano"), cs.uniform(3, 5)):
        coeffs = [0] * (m.rank + 1)
        for s in range(1 << m.n_elements):
            coeffs[m.rank - m.rank_of(s)] += (-1) ** bin(s).count("1")
        assert iv.charpoly(m) == iv.IntPolynomial.from_ascending(coeffs)


def test_charpoly_deletion_contraction_pointwise():
    rng = random.Random(12)
    for m in (cs.named("fano"), cs.uniform(3, 6), cs.named("nonpappus")):
        for _ in range(5):
            e = rng.randrange(m.n_elements)
            bit = 1 << e
            if m.loops & bit or m.coloops & bit:
                continue
            left = iv.charpoly(op.delete(m, bit).matroid)
            right = iv.charpoly(op.contract(m, bit).matroid)
            assert iv.charpoly(m) == left - right


def test_charpoly_multiplicative_over_direct_sum():
    a, b = cs.uniform(2, 4), cs.named("fano")
    assert iv.charpoly(op.direct_sum(a, b)) == iv.charpoly(a) * iv.charpoly(b)


def test_reduced_charpoly():
    red, mus = iv.reduced_charpoly(cs.named("fano"))
    assert mus == (1, 6, 8)
    assert red * iv.Q_MINUS_1 == iv.charpoly(cs.named("fano"))
    red24, mus24 = iv.reduced_charpoly(cs.uniform(2, 4))
    assert mus24 == (1, 3)
    assert red24.coeffs == (1, -3)


def test_reduced_charpoly_positive_alternating(corpus):
    for m in corpus:
        if not m.is_loopless():
            continue
        _, mus = iv.reduced_charpoly(m)
        assert mus[0] == 1
        assert all(v > 0 for v in mus)


# ---------------------------------------------------------------- tutte

def test_tutte_u24():
    assert iv.tutte(cs.uniform(2, 4)).grid == ((0, 2, 1), (2, 0, 0), (1, 0, 0))


def test_tutte_two_algorithms_agree(corpus):
    for m in corpus:
        assert iv.tutte(m, algorithm="rankgen") == iv.tutte(m, algorithm="delcon")


def test_tutte_classic_evaluations(corpus):
    for m in corpus:
        t = iv.tutte(m)
        n = m.n_elements
        n_indep = sum(1 for s in range(1 << n) if m.rank_of(s) == bin(s).count("1"))
        n_span = sum(1 for s in range(1 << n) if m.rank_of(s) == m.rank)
        assert t.evaluate(1, 1) == len(m.bases)
        assert t.evaluate(2, 1) == n_indep
        assert t.evaluate(1, 2) == n_span
        assert t.evaluate(2, 2) == 1 << n


def test_tutte_duality(corpus):
    for m in corpus:
        assert iv.tutte(op.dual(m)) == iv.tutte(m).swap()


def test_charpoly_from_tutte(corpus):
    for m in corpus:
        t = iv.tutte(m)
        sign = -1 if m.rank % 2 else 1
        via = iv.IntPolynomial.constant(sign) * t.substitute(iv.ONE - iv.Q, iv.ZERO)
        assert via == iv.charpoly(m)


def test_tutte_monomial_base_cases():
    loop = matroid_from_bases(1, [0b0])
    coloop = matroid_from_bases(1, [0b1])
    assert iv.tutte(loop).grid == ((0, 1),)
    assert iv.tutte(coloop).grid == ((0,), (1,))


# ---------------------------------------------------------------- vectors

def test_whitney_numbers():
    assert iv.whitney_numbers(cs.named("fano")) == (1, 7, 7, 1)
    assert iv.whitney_numbers(cs.named("vamos")) == (1, 8, 28, 41, 1)
    assert iv.whitney_numbers(cs.uniform(2, 4)) == (1, 4, 1)


def test_f_vector():
    assert iv.f_vector(cs.uniform(2, 4)) == (1, 4, 6)
    assert iv.f_vector(cs.named("fano")) == (1, 7, 21, 28)
    assert iv.f_vector(cs.uniform(3, 6)) == (1, 6, 15, 20)


def test_h_polynomial_is_tutte_at_y_one(corpus):
    for m in corpus:
        want = iv.tutte(m).substitute(iv.Q, iv.ONE)
        assert iv.h_polynomial(m) == want


def test_coextension_charpoly_encodes_f_vector(corpus):
    # |chi coefficients| of the free coextension = consecutive f-vector sums
    for m in corpus:
        if not m.is_loopless():
            continue
        co = op.free_coextension(m)
        chi = iv.charpoly(co)
        f = iv.f_vector(m)
        rhs = (iv.Q + iv.ONE) * iv.IntPolynomial.from_ascending(f)
        assert tuple(abs(c) for c in chi.coeffs) == tuple(reversed(rhs.coeffs))


def test_log_concavity_report():
    assert iv.is_log_concave((1, 3, 2)).ok
    assert iv.is_log_concave((1, 7, 14, 8)).ok
    bad = iv.is_log_concave((1, 2, 5))
    assert not bad.ok
    assert bad.violation_index == 1
    gap = iv.is_log_concave((1, 0, 2))
    assert not gap.ok
    assert gap.internal_zeros
    assert iv.is_log_concave((5,)).ok
    assert iv.is_log_concave(()).ok


def test_charpoly_coefficients_log_concave(corpus):
    for m in corpus:
        if not m.is_loopless():
            continue
        assert iv.is_log_concave([abs(c) for c in iv.charpoly(m).coeffs]).ok


# ---------------------------------------------------------------- others

def test_derksen_g_u24():
    assert iv.derksen_g(cs.uniform(2, 4)) == {(2, 2, 1, 1): 24}


def test_derksen_g_total_and_invariance():
    import math

    fano = cs.named("fano")
    g = iv.derksen_g(fano)
    assert sum(g.values()) == math.factorial(7)
    perm = [3, 0, 6, 2, 5, 1, 4]
    relabeled = matroid_from_bases(
        7, [sum(1 << perm[e] for e in bits_of(b)) for b in fano.bases])
    assert iv.derksen_g(relabeled) == g


def test_torus_point_count_u23_gf5():
    rows = ((1, 0, 1), (0, 1, 1))
    assert iv.torus_point_count(5, rows) == 12
    assert iv.charpoly(cs.linear_matroid(rows, 5)).evaluate(5) == 12


def test_torus_point_count_matches_charpoly():
    rng = random.Random(20)
    for _ in range(12):
        p = rng.choice((3, 5))
        ncols = rng.randint(1, 5)
        rows = tuple(tuple(rng.randrange(p) for _ in range(ncols))
                     for _ in range(rng.randint(1, 4)))
        m = cs.linear_matroid(rows, p)
        assert iv.torus_point_count(p, rows) == iv.charpoly(m).evaluate(p)
