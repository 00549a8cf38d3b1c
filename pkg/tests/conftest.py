"""Shared corpus builders for the test suite.

Everything here is deterministic: random choices go through seeded Random
instances so failures reproduce.
"""

import random

import pytest

from matrofan import constructions as cs
from matrofan import operations as op
from matrofan.core import Matroid


def assorted_matroids():
    """A fixed bag of small matroids touching every construction path."""
    mats = []
    for n in range(1, 6):
        for r in range(n + 1):
            mats.append(cs.uniform(r, n))
    for name in ("fano", "nonfano", "pappus", "nonpappus", "vamos"):
        mats.append(cs.named(name))
    k4 = cs.Graph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
    mats.append(cs.graphic(k4))
    mats.append(cs.cographic(k4))
    mats.append(cs.graphic(cs.Graph(5, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)))))
    mats.append(cs.transversal(6, [0b000111, 0b011100, 0b110001]))
    mats.append(op.dual(cs.named("fano")))
    mats.append(op.truncate(cs.named("pappus"), 2))
    mats.append(op.direct_sum(cs.uniform(1, 2), cs.uniform(2, 3)))
    mats.append(op.contract(cs.named("vamos"), 0b11).matroid)
    mats.append(cs.linear_matroid(((1, 0, 1, 1, 2), (0, 1, 1, 2, 1)), 3))
    return mats


def random_graph(rng: random.Random, max_v: int = 6):
    nv = rng.randint(2, max_v)
    pool = [(u, v) for u in range(nv) for v in range(u + 1, nv)]
    ne = rng.randint(1, len(pool))
    edges = [rng.choice(pool) for _ in range(ne)]  # repeats give parallel elements
    return cs.Graph(nv, tuple(edges))


def random_matrix(rng: random.Random, p: int, max_rows: int = 4, max_cols: int = 6):
    rows = rng.randint(1, max_rows)
    cols = rng.randint(1, max_cols)
    return tuple(tuple(rng.randrange(p) for _ in range(cols)) for _ in range(rows))


def random_matroid(rng: random.Random) -> Matroid:
    kind = rng.randrange(4)
    if kind == 0:
        n = rng.randint(1, 7)
        return cs.uniform(rng.randint(0, n), n)
    if kind == 1:
        return cs.graphic(random_graph(rng))
    if kind == 2:
        p = rng.choice((2, 3, 5))
        return cs.linear_matroid(random_matrix(rng, p), p)
    m = cs.named(rng.choice(("fano", "nonfano", "pappus", "vamos")))
    if rng.random() < 0.5:
        keep = rng.randint(2, m.n_elements - 1)
        t = 0
        for e in rng.sample(range(m.n_elements), keep):
            t |= 1 << e
        return op.restrict(m, t).matroid
    return m


def random_linear(rng: random.Random, p: int) -> Matroid:
    return cs.linear_matroid(random_matrix(rng, p), p)


@pytest.fixture(scope="session")
def corpus():
    return assorted_matroids()


@pytest.fixture(scope="session")
def bundled_db():
    from matrofan import db

    return db.load_database()
