"""Command-line front end.

Subcommands cover single-matroid queries (info, charpoly, tutte, fvector,
mobius), ground-set surgery (dual, minor, relax, extend), optimization
(greedy), fan computations (bergman weight|cup|deg-mu), the Ingleton scan,
and whole-database sweeps.  Input formats:

  bases    "n r" header, then basis tokens; each token concatenates base-36
           element digits ("01 02 12"), "-" is the empty basis
  revlex   "n r count" header followed by the */0 string over all r-subsets
           in revlex order (whitespace between header and string is free)
  matrix   field line ("gf p" or "rationals"), then "rows cols", then the
           row-major entries; "/" may stand for a newline
  graph    "vertices edges" followed by one "u v" pair per edge
  named    fixture name (fano, nonfano, pappus, nonpappus, vamos, u<r><n>)

Text output prints polynomials in descending powers with explicit signs;
--output jsonl emits one JSON record per result with raw coefficient arrays.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import bergman, db, invariants, operations, polytope, representability
from . import constructions
from .core import Matroid, bits_of, connected_components, matroid_from_bases
from .errors import MatroidError, ParseError

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


# ---------------------------------------------------------------- parsing

def _mask_from_token(tok: str, n: int) -> int:
    if tok == "-":
        return 0
    mask = 0
    for ch in tok:
        if ch not in _DIGITS:
            raise ParseError(f"bad element digit {ch!r} in {tok!r}")
        e = _DIGITS.index(ch)
        if e >= n:
            raise ParseError(f"element {e} out of range for n={n}")
        mask |= 1 << e
    return mask


def _token_from_mask(mask: int) -> str:
    if mask == 0:
        return "-"
    return "".join(_DIGITS[e] for e in bits_of(mask))


def _mask_from_csv(text: str, n: int) -> int:
    """Parse a comma-separated element list like "0,2,5" into a bitmask."""
    mask = 0
    if text.strip() == "":
        return 0
    for part in text.split(","):
        e = int(part)
        if not 0 <= e < n:
            raise ParseError(f"element {e} out of range for n={n}")
        mask |= 1 << e
    return mask


def parse_bases(text: str) -> Matroid:
    toks = text.split()
    if len(toks) < 3:
        raise ParseError("bases format needs 'n r' then at least one basis")
    n, r = int(toks[0]), int(toks[1])
    bases = [_mask_from_token(t, n) for t in toks[2:]]
    m = matroid_from_bases(n, bases)
    if m.rank != r:
        raise ParseError(f"declared rank {r} but bases have size {m.rank}")
    return m


def parse_revlex(text: str) -> Matroid:
    toks = text.split()
    if len(toks) < 4:
        raise ParseError("revlex format needs 'n r count' then the */0 string")
    n, r, count = int(toks[0]), int(toks[1]), int(toks[2])
    s = "".join(toks[3:])
    m = db.from_revlex(n, r, s)
    if len(m.bases) != count:
        raise ParseError(f"header count {count} but string marks {len(m.bases)} bases")
    return m


def parse_matrix(text: str) -> Matroid:
    lines = [ln for ln in (s.strip() for s in text.replace("/", "\n").splitlines()) if ln]
    if len(lines) < 2:
        raise ParseError("matrix format needs a field line and a shape line")
    field_toks = lines[0].split()
    if field_toks[0] == "gf" and len(field_toks) == 2:
        field = int(field_toks[1])
    elif field_toks == ["rationals"]:
        field = constructions.RATIONALS
    else:
        raise ParseError(f"bad field line {lines[0]!r}; use 'gf p' or 'rationals'")
    shape = lines[1].split()
    if len(shape) != 2:
        raise ParseError(f"bad shape line {lines[1]!r}; use 'rows cols'")
    nrows, ncols = int(shape[0]), int(shape[1])
    entries = " ".join(lines[2:]).split()
    if len(entries) != nrows * ncols:
        raise ParseError(f"expected {nrows * ncols} entries, got {len(entries)}")
    vals = [int(e) for e in entries]
    rows = [tuple(vals[i * ncols:(i + 1) * ncols]) for i in range(nrows)]
    return constructions.linear_matroid(rows, field)


def parse_graph(text: str) -> Matroid:
    toks = text.split()
    if len(toks) < 2:
        raise ParseError("graph format needs 'vertices edges' then the edge pairs")
    nv, ne = int(toks[0]), int(toks[1])
    if len(toks) != 2 + 2 * ne:
        raise ParseError(f"expected {2 * ne} endpoints, got {len(toks) - 2}")
    edges = tuple((int(toks[2 + 2 * i]), int(toks[3 + 2 * i])) for i in range(ne))
    return constructions.graphic(constructions.Graph(nv, edges))


def parse_named(name: str) -> Matroid:
    key = name.strip().lower()
    try:
        return constructions.named(key)
    except MatroidError:
        pass
    # u24, u2_4, u_2_4 all mean the uniform matroid of rank 2 on 4 elements
    stripped = key.lstrip("u").replace("_", "").replace(",", "")
    if key.startswith("u") and len(stripped) == 2 and stripped.isdigit():
        return constructions.uniform(int(stripped[0]), int(stripped[1]))
    raise ParseError(f"unknown name {name!r}; try fano, nonfano, pappus, nonpappus, vamos, u24")


_PARSERS = {
    "bases": parse_bases,
    "revlex": parse_revlex,
    "matrix": parse_matrix,
    "graph": parse_graph,
    "named": parse_named,
}


def load_matroid(args) -> Matroid:
    if getattr(args, "named", None):
        return parse_named(args.named)
    if not args.path:
        raise ParseError("no input: pass --in FILE (or '-' for stdin) or --named NAME")
    if args.path == "-":
        text = sys.stdin.read()
    else:
        with open(args.path) as fh:
            text = fh.read()
    return _PARSERS[args.format](text)


def serialize_bases(m: Matroid) -> str:
    toks = " ".join(_token_from_mask(b) for b in m.bases)
    return f"{m.n_elements} {m.rank}\n{toks}"


def _emit_matroid(m: Matroid, args) -> None:
    if args.output == "jsonl":
        rec = {
            "n": m.n_elements,
            "rank": m.rank,
            "bases": [_token_from_mask(b) for b in m.bases],
        }
        print(json.dumps(rec))
    elif args.format == "revlex":
        print(db.to_revlex_line(m))
    else:
        print(serialize_bases(m))


def _set_repr(mask: int) -> str:
    return "{" + ",".join(str(e) for e in bits_of(mask)) + "}"


# ---------------------------------------------------------------- commands

def cmd_info(args) -> int:
    m = load_matroid(args)
    fv = invariants.f_vector(m)
    wn = invariants.whitney_numbers(m)
    comps = connected_components(m)
    if args.output == "jsonl":
        print(json.dumps({
            "n": m.n_elements,
            "rank": m.rank,
            "n_bases": len(m.bases),
            "loops": bits_of(m.loops),
            "coloops": bits_of(m.coloops),
            "components": [bits_of(c) for c in comps],
            "flats_per_rank": list(wn),
            "f_vector": list(fv),
        }))
    else:
        print(f"elements: {m.n_elements}")
        print(f"rank: {m.rank}")
        print(f"bases: {len(m.bases)}")
        print(f"loops: {_set_repr(m.loops) if m.loops else '-'}")
        print(f"coloops: {_set_repr(m.coloops) if m.coloops else '-'}")
        print(f"connected components: {len(comps)}")
        print("flats per rank: " + " ".join(str(w) for w in wn))
        print("independent sets by size: " + " ".join(str(f) for f in fv))
    return 0


def cmd_charpoly(args) -> int:
    m = load_matroid(args)
    p = invariants.charpoly(m, algorithm=args.algorithm)
    if args.output == "jsonl":
        print(json.dumps({"n": m.n_elements, "rank": m.rank,
                          "coefficients": list(p.coeffs)}))
    else:
        print(p.render())
    return 0


def cmd_tutte(args) -> int:
    m = load_matroid(args)
    t = invariants.tutte(m, algorithm=args.algorithm)
    if args.output == "jsonl":
        print(json.dumps({"n": m.n_elements, "rank": m.rank,
                          "coefficients": [list(row) for row in t.grid]}))
    else:
        print(t.render())
    return 0


def cmd_fvector(args) -> int:
    m = load_matroid(args)
    fv = invariants.f_vector(m)
    if args.output == "jsonl":
        print(json.dumps({"n": m.n_elements, "rank": m.rank, "f_vector": list(fv)}))
    else:
        print(" ".join(str(f) for f in fv))
    return 0


def cmd_mobius(args) -> int:
    m = load_matroid(args)
    mb = invariants.mobius(m)
    flats = sorted(mb, key=lambda f: (bin(f).count("1"), f))
    if args.output == "jsonl":
        print(json.dumps({"n": m.n_elements, "rank": m.rank,
                          "values": [[bits_of(f), mb[f]] for f in flats]}))
    else:
        for f in flats:
            print(f"mu({_set_repr(f)}) = {mb[f]}")
    return 0


def cmd_dual(args) -> int:
    m = load_matroid(args)
    _emit_matroid(operations.dual(m), args)
    return 0


def cmd_minor(args) -> int:
    m = load_matroid(args)
    cx = _mask_from_csv(args.contract, m.n_elements)
    dx = _mask_from_csv(args.delete, m.n_elements)
    if cx & dx:
        raise ParseError("contract and delete sets overlap")
    if cx:
        res = operations.contract(m, cx)
        m = res.matroid
        dx = sum(1 << res.index_map[e] for e in bits_of(dx))
    if dx:
        m = operations.delete(m, dx).matroid
    _emit_matroid(m, args)
    return 0


def cmd_relax(args) -> int:
    m = load_matroid(args)
    x = _mask_from_csv(args.set, m.n_elements)
    _emit_matroid(operations.relax(m, x), args)
    return 0


def cmd_extend(args) -> int:
    m = load_matroid(args)
    if args.flat is not None:
        f = _mask_from_csv(args.flat, m.n_elements)
        out = operations.principal_extension(m, f)
    elif args.cut is not None:
        spec = args.cut.strip()
        if spec in ("", "empty"):
            cut = []
        else:
            cut = [_mask_from_csv(part, m.n_elements) for part in spec.split(";")]
        out = operations.extend(m, cut)
    else:
        out = operations.free_extension(m)
    _emit_matroid(out, args)
    return 0


def cmd_greedy(args) -> int:
    m = load_matroid(args)
    weights = [Fraction(w) for w in args.weights.split(",")]
    if len(weights) != m.n_elements:
        raise ParseError(f"need {m.n_elements} weights, got {len(weights)}")
    basis, total = polytope.greedy_basis(m, weights, sense=args.sense)
    wt = int(total) if total.denominator == 1 else str(total)
    if args.output == "jsonl":
        print(json.dumps({"n": m.n_elements, "rank": m.rank,
                          "basis": bits_of(basis), "weight": wt}))
    else:
        print("basis: " + ",".join(str(e) for e in bits_of(basis)))
        print(f"weight: {wt}")
    return 0


def _print_weight(w, args) -> None:
    if args.output == "jsonl":
        rec = {
            "n": w.n_elements,
            "dimension": w.dimension,
            "weights": [[[bits_of(f) for f in flag], w.values[flag]]
                        for flag in sorted(w.values)],
        }
        print(json.dumps(rec))
    else:
        print(f"dimension: {w.dimension}")
        for flag in sorted(w.values):
            chain = " < ".join(_set_repr(f) for f in flag) if flag else "()"
            print(f"{chain} : {w.values[flag]}")


def cmd_bergman(args) -> int:
    m = load_matroid(args)
    if not m.is_loopless():
        print("error: matroid has loops; fan computations need a loopless matroid",
              file=sys.stderr)
        return 2
    if args.op == "weight":
        if (args.r1 is None) != (args.r2 is None):
            raise ParseError("--r1 and --r2 go together")
        if args.r1 is not None:
            w = bergman.truncation_weight(m, args.r1, args.r2)
        else:
            w = bergman.bergman_weight(m)
        _print_weight(w, args)
    elif args.op == "cup":
        w = bergman.bergman_weight(m)
        for _ in range(args.beta):
            w = bergman.cup_beta(w)
        for _ in range(args.alpha):
            w = bergman.cup_alpha(w)
        _print_weight(w, args)
    else:  # deg-mu
        d = m.rank - 1
        rs = [args.r] if args.r is not None else list(range(d + 1))
        mus = [bergman.mu_via_intersection(m, r) for r in rs]
        if args.output == "jsonl":
            print(json.dumps({"n": m.n_elements, "rank": m.rank, "mu": mus}))
        else:
            for r, v in zip(rs, mus):
                print(f"mu^{r} = {v}")
    return 0


def cmd_ingleton(args) -> int:
    m = load_matroid(args)
    label = args.named if getattr(args, "named", None) else (args.path or "matroid")
    hits = representability.ingleton_violations(m)
    if args.output == "jsonl":
        print(json.dumps({
            "n": m.n_elements,
            "rank": m.rank,
            "violations": len(hits),
            "witnesses": [[bits_of(x) for x in quad] for quad in hits[:5]],
        }))
    elif hits:
        quad = hits[0]
        parts = " ".join(f"X{i + 1}={_set_repr(x)}" for i, x in enumerate(quad))
        print(f"{label}: {len(hits)} Ingleton violations; first {parts}")
    else:
        print(f"{label}: no Ingleton violations")
    return 0


# ---------------------------------------------------------------- sweep

def _sweep_one(item, checks):
    """Run the named checks on one (n, rank, bases) triple; returns a dict."""
    n, rank, bases = item
    m = Matroid(n, bases, validate=False)
    out = {}
    loopless = m.is_loopless()
    d = rank - 1
    for name in checks:
        if name == "logconcave":
            if not loopless:
                out[name] = True  # chi vanishes; nothing to test
                continue
            full = invariants.charpoly(m)
            red, _ = invariants.reduced_charpoly(m)
            out[name] = (invariants.is_log_concave(full.coeffs).ok
                         and invariants.is_log_concave(red.coeffs).ok)
        elif name == "fvector-logconcave":
            out[name] = invariants.is_log_concave(invariants.f_vector(m)).ok
        elif name == "balancing":
            if not loopless:
                out[name] = True
                continue
            ok, _ = bergman.check_balancing(bergman.bergman_weight(m))
            for r1 in range(1, d + 1):
                if not ok:
                    break
                for r2 in range(r1, d + 1):
                    ok2, _ = bergman.check_balancing(bergman.truncation_weight(m, r1, r2))
                    if not ok2:
                        ok = False
                        break
            out[name] = ok
        elif name == "mu-identity":
            if not loopless:
                out[name] = True
                continue
            _, mus = invariants.reduced_charpoly(m)
            out[name] = all(bergman.mu_via_intersection(m, r) == mus[r]
                            for r in range(d + 1))
        elif name == "fink":
            if not loopless:
                out[name] = True
                continue
            out[name] = bergman.fink_degree_test(bergman.bergman_weight(m))
        elif name == "truncation-identity":
            if not loopless or n > 7:
                out[name] = True
                continue
            out[name] = all(bergman.verify_truncation_identity(m, r1, r2)
                            for r1 in range(1, d + 1)
                            for r2 in range(r1, d + 1))
        elif name == "identities":
            cw = invariants.charpoly(m, algorithm="whitney")
            ok = (cw == invariants.charpoly(m, algorithm="mobius")
                  == invariants.charpoly(m, algorithm="delcon"))
            t = invariants.tutte(m, algorithm="rankgen")
            ok = ok and t == invariants.tutte(m, algorithm="delcon")
            ok = ok and t.swap() == invariants.tutte(operations.dual(m))
            sign = -1 if rank % 2 else 1
            via_t = t.substitute(invariants.ONE - invariants.Q, invariants.ZERO)
            ok = ok and invariants.IntPolynomial.constant(sign) * via_t == cw
            out[name] = ok
        else:
            raise ParseError(f"unknown check {name!r}")
    return out


def _sweep_chunk(items, checks):
    return [_sweep_one(it, checks) for it in items]


def cmd_sweep(args) -> int:
    import random

    checks = [c.strip() for c in args.check.split(",") if c.strip()]
    for c in checks:
        if c not in ("logconcave", "fvector-logconcave", "balancing", "mu-identity",
                     "fink", "truncation-identity", "identities"):
            raise ParseError(f"unknown check {c!r}")
    groups = db.load_database(args.db)
    items = []
    for n in sorted(groups):
        if n > args.max_n:
            continue
        for m in groups[n]:
            items.append((m.n_elements, m.rank, m.bases))
    if args.sample is not None and args.sample < len(items):
        rng = random.Random(args.seed)
        items = [items[i] for i in sorted(rng.sample(range(len(items)), args.sample))]

    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        step = max(1, len(items) // (args.jobs * 8))
        chunks = [items[i:i + step] for i in range(0, len(items), step)]
        results = []
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for part in pool.map(_sweep_chunk, chunks, [checks] * len(chunks)):
                results.extend(part)
    else:
        results = _sweep_chunk(items, checks)

    fails = {c: 0 for c in checks}
    for (n, rank, bases), res in zip(items, results):
        for c in checks:
            if not res[c]:
                fails[c] += 1
        if args.output == "jsonl":
            print(json.dumps({"n": n, "rank": rank, "n_bases": len(bases),
                              "checks": res}))
    total_fail = sum(fails.values())
    summary = "; ".join(f"{c}: {fails[c]} failures" for c in checks)
    if args.output == "jsonl":
        print(json.dumps({"summary": True, "matroids": len(items), "failures": fails}))
    else:
        print(f"checked {len(items)} matroids: {summary}")
    return 1 if total_fail else 0


def cmd_gendb(args) -> int:
    reps = db.generate_database(args.max_n)
    counts = [len(reps[n]) for n in sorted(reps)]
    db.save_database(args.out, reps)
    expected = list(db.UNLABELED_COUNTS[:args.max_n + 1])
    status = "ok" if counts == expected else f"MISMATCH (expected {expected})"
    print(f"wrote {args.out}: counts {counts} {status}")
    return 0 if counts == expected else 1


# ---------------------------------------------------------------- driver

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="path", metavar="FILE",
                        help="input file, '-' for stdin")
    common.add_argument("--named", metavar="NAME",
                        help="built-in matroid instead of --in")
    common.add_argument("--format", choices=sorted(_PARSERS), default="bases",
                        help="input format (default: bases)")
    common.add_argument("--output", choices=("text", "jsonl"), default="text")
    common.add_argument("--cap", type=int, metavar="N",
                        help="override the exhaustive-enumeration cap")
    common.add_argument("--seed", type=int, default=0, metavar="S")
    common.add_argument("--jobs", type=int, default=1, metavar="J")

    top = argparse.ArgumentParser(prog="matrofan", description=__doc__,
                                  formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = top.add_subparsers(dest="command", required=True)

    sub.add_parser("info", parents=[common]).set_defaults(fn=cmd_info)

    p = sub.add_parser("charpoly", parents=[common])
    p.add_argument("--algorithm", choices=("whitney", "mobius", "delcon"),
                   default="whitney")
    p.set_defaults(fn=cmd_charpoly)

    p = sub.add_parser("tutte", parents=[common])
    p.add_argument("--algorithm", choices=("rankgen", "delcon"), default="rankgen")
    p.set_defaults(fn=cmd_tutte)

    sub.add_parser("fvector", parents=[common]).set_defaults(fn=cmd_fvector)
    sub.add_parser("mobius", parents=[common]).set_defaults(fn=cmd_mobius)
    sub.add_parser("dual", parents=[common]).set_defaults(fn=cmd_dual)

    p = sub.add_parser("minor", parents=[common])
    p.add_argument("--delete", default="", metavar="SET", help="elements like 0,2")
    p.add_argument("--contract", default="", metavar="SET")
    p.set_defaults(fn=cmd_minor)

    p = sub.add_parser("relax", parents=[common])
    p.add_argument("--set", required=True, metavar="SET",
                   help="circuit-hyperplane to promote")
    p.set_defaults(fn=cmd_relax)

    p = sub.add_parser("extend", parents=[common])
    g = p.add_mutually_exclusive_group()
    g.add_argument("--flat", metavar="SET", help="principal extension at this flat")
    g.add_argument("--cut", metavar="F1;F2;...",
                   help="modular cut, ';'-separated flats ('' = coloop)")
    p.set_defaults(fn=cmd_extend)

    p = sub.add_parser("greedy", parents=[common])
    p.add_argument("--weights", required=True, metavar="W1,W2,...")
    p.add_argument("--sense", choices=("max", "min"), default="max")
    p.set_defaults(fn=cmd_greedy)

    p = sub.add_parser("bergman", parents=[common])
    p.add_argument("op", choices=("weight", "cup", "deg-mu"))
    p.add_argument("--r1", type=int)
    p.add_argument("--r2", type=int)
    p.add_argument("--alpha", type=int, default=0, metavar="A")
    p.add_argument("--beta", type=int, default=0, metavar="B")
    p.add_argument("--r", type=int, help="deg-mu: single exponent instead of all")
    p.set_defaults(fn=cmd_bergman)

    sub.add_parser("ingleton", parents=[common]).set_defaults(fn=cmd_ingleton)

    p = sub.add_parser("sweep", parents=[common])
    p.add_argument("--db", required=True, metavar="FILE")
    p.add_argument("--check", default="logconcave,balancing,mu-identity",
                   metavar="C1,C2,...")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--sample", type=int, metavar="K",
                   help="check a seeded random subset of K matroids")
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("gendb", parents=[common])
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--out", required=True, metavar="FILE")
    p.set_defaults(fn=cmd_gendb)

    return top


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.cap is not None:
        os.environ["MATROID_CAP"] = str(args.cap)
    try:
        return args.fn(args)
    except MatroidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
