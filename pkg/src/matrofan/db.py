"""The bundled matroid census: every isomorphism class on up to 8
elements, stored one per line in revlex form.

Generation walks up by ground-set size: each class on n+1 elements is a
single-element extension of its own deletion, so extending every class
on n elements by every modular cut and deduplicating by the canonical
relabeling is exhaustive.  The class counts per size and the labeled
counts Σ n!/|Aut| are cross-checked against the published census.
"""

from importlib import resources
from itertools import combinations
from math import factorial

from . import kernels
from .core import Matroid, canonicalize, mask_of
from .errors import ParseError
from .operations import enumerate_modular_cuts, extend

UNLABELED_COUNTS = (1, 2, 4, 8, 17, 38, 98, 306, 1724)
LABELED_COUNTS = (1, 2, 5, 16, 68, 406, 3807, 75164, 10607540)


def revlex_order(n: int, r: int):
    """r-subsets of 0..n-1 sorted by their reversed tuples ascending."""
    return sorted(combinations(range(n), r), key=lambda c: tuple(reversed(c)))


def to_revlex_line(m: Matroid) -> str:
    """One-line form: "n r count string", '*' basis / '0' non-basis."""
    chars = [
        "*" if mask_of(c) in m.basis_set else "0"
        for c in revlex_order(m.n_elements, m.rank)
    ]
    return f"{m.n_elements} {m.rank} {len(m.bases)} {''.join(chars)}"


def from_revlex(n: int, r: int, s: str, validate: bool = True) -> Matroid:
    order = revlex_order(n, r)
    if len(s) != len(order):
        raise ParseError(f"expected {len(order)} characters, got {len(s)}")
    bases = []
    for ch, c in zip(s, order):
        if ch == "*":
            bases.append(mask_of(c))
        elif ch != "0":
            raise ParseError(f"bad character {ch!r}", column=s.index(ch) + 1)
    return Matroid(n, bases, validate=validate)


def generate_database(max_n: int, validate_cuts: bool = False):
    """Canonical representatives by ground-set size, 0..max_n."""
    reps = {0: [Matroid(0, [0], validate=False)]}
    for n in range(max_n):
        seen = {}
        for m in reps[n]:
            m.rank_table()
            for cut in enumerate_modular_cuts(m, validate=validate_cuts):
                ext = extend(m, cut)
                key, _aut = kernels.canonical_form(ext.n_elements, list(ext.bases))
                if key not in seen:
                    seen[key] = Matroid(n + 1, key, validate=False)
        reps[n + 1] = sorted(
            seen.values(), key=lambda m2: (m2.rank, len(m2.bases), m2.bases)
        )
    return reps


def labeled_census(mats) -> int:
    """Σ n!/|Aut| over one size class = number of labeled matroids."""
    total = 0
    for m in mats:
        _, aut = canonicalize(m)
        total += factorial(m.n_elements) // aut
    return total


def save_database(path: str, reps: dict) -> None:
    with open(path, "w") as fh:
        for n in sorted(reps):
            if n == 0:
                continue
            for m in reps[n]:
                fh.write(to_revlex_line(m) + "\n")


def _parse_line(line: str, lineno: int) -> Matroid:
    parts = line.split()
    if len(parts) != 4:
        raise ParseError(f"expected 4 fields, got {len(parts)}", line=lineno)
    n, r, count, s = int(parts[0]), int(parts[1]), int(parts[2]), parts[3]
    m = from_revlex(n, r, s, validate=False)
    if len(m.bases) != count:
        raise ParseError(f"{len(m.bases)} bases, header says {count}", line=lineno)
    return m


def load_database(path=None, min_n: int = 1, max_n: int = 8):
    """Bundled census (or another file), grouped by ground-set size.

    Returns {n: [matroids]} for min_n <= n <= max_n, in file order.
    Entries are canonical representatives and skip re-validation; the
    test suite re-validates samples and regenerates the small sizes.
    """
    if path is None:
        ref = resources.files("matrofan").joinpath("data", "matroids_le8.revlex")
        text = ref.read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    out = {}
    for i, line in enumerate(text.splitlines()):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        m = _parse_line(line, i + 1)
        if min_n <= m.n_elements <= max_n:
            out.setdefault(m.n_elements, []).append(m)
    return out
