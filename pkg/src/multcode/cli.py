"""Command-line front end and the text formats it reads and writes.

Exit codes: 0 success (decoded), 1 decoding failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import os
import random
import statistics
import sys
import time
from typing import Optional, Sequence

from .field import PrimeField
from .mcode import (CodeParams, Grid, ReceivedWord, delta_mult, encode, hamming,
                    unique_decoding_radius, within_radius)
from .poly import Jet, MultiPoly, graded_exponents, random_poly
from . import channel, gmd, mvdec, oracle

FORMAT_TAG = "mword/1"

EXIT_OK, EXIT_FAIL, EXIT_BAD_INPUT = 0, 1, 2


class FormatError(ValueError):
    pass


# ---------------------------------------------------------------- word files

def write_mword(word: ReceivedWord) -> str:
    """Canonical text form: header, one ``T`` line per axis, then one line of
    graded-lex jet coefficients per grid point in lexicographic order."""
    pr = word.params
    lines = [FORMAT_TAG, f"p {pr.field.p}", f"m {pr.m}", f"s {pr.s}", f"d {pr.d}"]
    lines += ["T " + " ".join(map(str, T)) for T in pr.grid.sets]
    for pt in pr.grid.points():
        lines.append(" ".join(map(str, word.symbols[pt].vector())))
    return "\n".join(lines) + "\n"


def _ints(tokens, what: str) -> list:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"non-integer value in {what}: {' '.join(tokens)}") from None


def _header_value(line: str, key: str) -> int:
    parts = line.split()
    if len(parts) != 2 or parts[0] != key:
        raise FormatError(f"expected '{key} <int>', got {line!r}")
    return _ints(parts[1:], key)[0]


def read_mword(text: str) -> ReceivedWord:
    lines = [ln.rstrip("\r") for ln in text.split("\n")]
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines or lines[0].strip() != FORMAT_TAG:
        raise FormatError(f"missing '{FORMAT_TAG}' header")
    if len(lines) < 5:
        raise FormatError("truncated header")
    p, m, s, d = (_header_value(lines[i], k) for i, k in zip(range(1, 5), "pmsd"))
    if m < 1:
        raise FormatError("m must be positive")
    if len(lines) < 5 + m:
        raise FormatError("missing evaluation set lines")
    sets = []
    for ln in lines[5:5 + m]:
        parts = ln.split()
        if not parts or parts[0] != "T":
            raise FormatError(f"expected 'T v1 v2 ...', got {ln!r}")
        sets.append(_ints(parts[1:], "evaluation set"))
    params = CodeParams(s, d, Grid(PrimeField(p), tuple(sets)))
    pts = list(params.grid.points())
    body = lines[5 + m:]
    if len(body) != len(pts):
        raise FormatError(f"expected {len(pts)} records, found {len(body)}")
    width = len(graded_exponents(m, s))
    syms = {}
    for pt, ln in zip(pts, body):
        vals = _ints(ln.split(), f"record for {pt}")
        if len(vals) != width:
            raise FormatError(f"record for {pt} has {len(vals)} coefficients, expected {width}")
        if any(not 0 <= v < p for v in vals):
            raise FormatError(f"record for {pt} has a value outside [0, {p})")
        syms[pt] = Jet.from_vector(params.field, m, s, vals)
    return ReceivedWord(params, syms)


def write_poly(P: MultiPoly) -> str:
    return "".join(" ".join(map(str, e)) + f" {c}\n" for e, c in P.terms())


def read_poly(text: str, field: PrimeField, m: int) -> MultiPoly:
    coeffs = {}
    for ln in text.splitlines():
        ln = ln.split("#", 1)[0].strip()
        if not ln:
            continue
        vals = _ints(ln.split(), "polynomial term")
        if len(vals) != m + 1:
            raise FormatError(f"term line {ln!r} needs {m} exponents and a value")
        if any(v < 0 for v in vals[:m]):
            raise FormatError(f"negative exponent in {ln!r}")
        e = tuple(vals[:m])
        coeffs[e] = (coeffs.get(e, 0) + vals[m]) % field.p
    return MultiPoly(field, m, coeffs)


def parse_sets(text: str, m: int) -> list:
    """Evaluation sets from a file (one axis per line) or inline text.

    Inline forms: ``0,1,2`` (same set on every axis), ``0,1;2,3`` (one group
    per axis) or ``range:6`` (``0..5`` on every axis).
    """
    if os.path.isfile(text):
        with open(text, encoding="ascii") as fh:
            rows = [ln.replace(",", " ").split() for ln in fh if ln.strip()]
        groups = [_ints(r, "evaluation set") for r in rows]
    elif text.startswith("range:"):
        groups = [list(range(_ints([text[6:]], "range")[0]))]
    else:
        groups = [_ints([t for t in g.split(",") if t.strip()], "evaluation set")
                  for g in text.split(";")]
    if len(groups) == 1:
        groups = groups * m
    if len(groups) != m:
        raise FormatError(f"got {len(groups)} evaluation sets for m={m}")
    return groups


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii", newline="") as fh:
        return fh.read()


def _write(path: Optional[str], text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)


# ------------------------------------------------------------------ commands

def cmd_encode(args) -> int:
    field = PrimeField(args.prime)
    params = CodeParams(args.s, args.d, Grid(field, tuple(parse_sets(args.sets, args.m))))
    P = read_poly(_read(args.poly), field, args.m) if args.poly else MultiPoly.zero(field, args.m)
    _write(args.out, write_mword(encode(P, params)))
    return EXIT_OK


def cmd_corrupt(args) -> int:
    word = read_mword(_read(args.inp))
    rng = random.Random(args.seed)
    try:
        if args.symbols is not None:
            out = channel.corrupt_symbols(word, args.symbols, rng)
        else:
            out = channel.corrupt_exact(word, args.budget, rng, args.mode, args.cutoff)
    except channel.BudgetUnreachable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    print(f"delta_mult {delta_mult(out, word)}", file=sys.stderr)
    _write(args.out, write_mword(out))
    return EXIT_OK


def cmd_decode(args) -> int:
    word = read_mword(_read(args.inp))
    if word.params.m == 1:
        raise FormatError("decode expects m >= 2; univariate words go through the library")
    P = mvdec.decode(word)
    if P is None:
        print("fail: no codeword within the unique decoding radius", file=sys.stderr)
        return EXIT_FAIL
    _write(args.out, write_poly(P))
    return EXIT_OK


def cmd_oracle(args) -> int:
    word = read_mword(_read(args.inp))
    best = oracle.nearest_codeword(word)
    radius = unique_decoding_radius(word.params)
    sys.stdout.write(write_poly(best.poly))
    print(f"# distance {best.dist}  unique {str(best.unique).lower()}  "
          f"radius {float(radius)}  within {str(within_radius(best.dist, word.params)).lower()}")
    return EXIT_OK


def cmd_gmd(args) -> int:
    code = gmd.ConcatCode(args.p_out, tuple(_ints(args.S.split(","), "S")), args.K, args.q,
                          tuple(tuple(_ints(r.split(","), "generator")) for r in args.generator.split(";")))
    msg = _ints(args.msg.split(","), "message")
    sent = gmd.concat_encode(msg, code)
    flat = list(sent.flat())
    for pos in _ints([t for t in args.flip.split(",") if t], "flip positions") if args.flip else []:
        if not 0 <= pos < len(flat):
            raise FormatError(f"flip position {pos} outside [0, {len(flat)})")
        flat[pos] = (flat[pos] + 1) % code.q
    n_in = code.n_in
    recv = gmd.GmdReceived(tuple(tuple(flat[i:i + n_in]) for i in range(0, len(flat), n_in)))
    symbols, W = gmd.block_weights(recv, code)
    print(f"code: N={code.N} K={code.K} D={code.D} n_in={n_in} d_in={code.d_in} "
          f"radius {code.D * code.d_in / 2}")
    print(f"received {' '.join(''.join(map(str, b)) for b in recv.blocks)}")
    print(f"inner decisions {symbols} weights {W}")
    out = gmd.gmd_decode(recv, code)
    if out is None:
        print("fail")
        return EXIT_FAIL
    print("decoded " + ",".join(map(str, out)))
    return EXIT_OK


def _cube_params(args) -> CodeParams:
    field = PrimeField(args.prime)
    if args.n > args.prime:
        raise FormatError(f"n={args.n} points do not fit in GF({args.prime})")
    return CodeParams(args.s, args.d, Grid.cube(field, range(args.n), args.m))


def cmd_szsweep(args) -> int:
    params = _cube_params(args)
    n, m, s, d = params.n, params.m, params.s, params.d
    bound = n ** (m - 1) * (s * n - d)
    lo, violations, obs_violations = None, 0, 0
    for t in range(args.trials):
        rng = random.Random(args.seed + t)
        P = random_poly(params.field, m, d, rng)
        Q = random_poly(params.field, m, d, rng)
        while Q == P:
            Q = random_poly(params.field, m, d, rng)
        cp, cq = encode(P, params), encode(Q, params)
        dist = delta_mult(cp, cq)
        lo = dist if lo is None else min(lo, dist)
        violations += dist < bound
        obs_violations += dist > s * hamming(cp, cq)
    print(f"trials {args.trials}  min delta_mult {lo}  bound {bound}  violations {violations}  "
          f"delta_mult>s*hamming {obs_violations}")
    return EXIT_OK if violations == obs_violations == 0 else EXIT_FAIL


def cmd_bench(args) -> int:
    params = _cube_params(args)
    budget = (unique_decoding_radius(params).twice - 1) // 2
    times, ok = [], 0
    for t in range(args.trials):
        rng = random.Random(args.seed + t)
        P = random_poly(params.field, params.m, params.d, rng)
        f = channel.corrupt_random(encode(P, params), budget, rng)
        start = time.perf_counter()
        out = mvdec.decode(f)
        times.append(time.perf_counter() - start)
        ok += out == P
        print(f"trial {t}: {times[-1]:.4f}s  delta_mult {delta_mult(f, encode(P, params))}  "
              f"{'ok' if out == P else 'WRONG'}")
    print(f"p={args.prime} m={params.m} n={params.n} s={params.s} d={params.d}: "
          f"{ok}/{args.trials} recovered, median {statistics.median(times):.4f}s, max {max(times):.4f}s")
    return EXIT_OK if ok == args.trials else EXIT_FAIL


# -------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="multcode", description="Multiplicity code toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    e = sub.add_parser("encode", help="encode a polynomial file into a word file")
    e.add_argument("--prime", type=int, required=True)
    e.add_argument("--m", type=int, required=True)
    e.add_argument("--s", type=int, required=True)
    e.add_argument("--d", type=int, required=True)
    e.add_argument("--sets", required=True, help="file, '0,1,2', '0,1;2,3' or 'range:N'")
    e.add_argument("--poly", help="term file 'e1 ... em value' (default: zero polynomial)")
    e.add_argument("--out")
    e.set_defaults(func=cmd_encode)

    c = sub.add_parser("corrupt", help="seeded error injection")
    c.add_argument("--in", dest="inp", required=True)
    c.add_argument("--out")
    c.add_argument("--seed", type=int, default=0)
    amount = c.add_mutually_exclusive_group(required=True)
    amount.add_argument("--budget", type=int, help="exact multiplicity distance to inflict")
    amount.add_argument("--symbols", type=int, help="number of whole symbols to replace")
    c.add_argument("--mode", choices=("symbol", "lowdeg"), default="symbol")
    c.add_argument("--cutoff", type=int, default=1, help="lowest z-degree touched in lowdeg mode")
    c.set_defaults(func=cmd_corrupt)

    dcd = sub.add_parser("decode", help="unique decoding; exit 1 on failure")
    dcd.add_argument("--in", dest="inp", required=True)
    dcd.add_argument("--out")
    dcd.set_defaults(func=cmd_decode)

    o = sub.add_parser("oracle", help="brute-force nearest codeword")
    o.add_argument("--in", dest="inp", required=True)
    o.set_defaults(func=cmd_oracle)

    g = sub.add_parser("gmd", help="concatenated code round trip with bit flips")
    g.add_argument("--p-out", type=int, default=3)
    g.add_argument("--S", default="0,1,2")
    g.add_argument("--K", type=int, default=1)
    g.add_argument("--q", type=int, default=2)
    g.add_argument("--generator", default="1,0,1;0,1,1")
    g.add_argument("--msg", default="1")
    g.add_argument("--flip", default="", help="comma-separated positions in the flat word")
    g.set_defaults(func=cmd_gmd)

    for name, func, helptext in (("szsweep", cmd_szsweep, "distance lower bound sweep"),
                                 ("bench", cmd_bench, "decoder timings")):
        b = sub.add_parser(name, help=helptext)
        b.add_argument("--prime", type=int, default=13)
        b.add_argument("--m", type=int, default=2)
        b.add_argument("--n", type=int, default=6)
        b.add_argument("--s", type=int, default=2)
        b.add_argument("--d", type=int, default=5)
        b.add_argument("--trials", type=int, default=1000 if name == "szsweep" else 5)
        b.add_argument("--seed", type=int, default=0)
        b.set_defaults(func=func)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
