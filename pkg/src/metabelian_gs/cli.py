"""Command-line front end and the presentation file format.

File format::

    field Q                      # or: field GF(7)
    generators: z < y < x
    relations:
    [x,y,z] - 2*[x,z] + y
    1/2*x

A bracket ``[g1,g2,...]`` is the left-normed product.  A token followed by
``*`` is a coefficient; everything else is a generator name.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
import time
from typing import Optional

from .completion import (
    COMPLETE,
    Presentation,
    is_gs_basis,
    monomial_complete,
    oracle_quotient_dims,
    reduce_basis,
    shirshov_complete,
)
from .poly import MPoly, bracket_left_normed
from .presentations import (
    circuit,
    circuit_theorem_basis,
    classify_cu3,
    cube,
    format_graph,
    graph_presentation,
    parse_graph,
    random_presentation,
    random_tree,
    tree_graph,
    tree_parent_ranks,
    tree_parents,
    tree_presentation,
    tree_word_irreducible,
)
from .reduction import Reducer, irr_up_to
from .scalars import Field
from .words import Alphabet, enumerate_regular_words, key

CU4_EXPECTED = 268


class ParseError(ValueError):
    def __init__(self, msg: str, line: int = 0, col: int = 0):
        self.msg, self.line, self.col = msg, line, col
        where = f"line {line}, column {col}: " if line else ""
        super().__init__(where + msg)


# -- expressions -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+/\d+)|(?P<name>[A-Za-z0-9_]+)|(?P<op>[\[\],+\-*])|(?P<bad>\S))")


def _tokens(text: str, line: int):
    out = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        pos = m.end()
        col = m.start(m.lastgroup) + 1
        if m.lastgroup == "bad":
            raise ParseError(f"unexpected character {m.group('bad')!r}", line, col)
        out.append((m.lastgroup, m.group(m.lastgroup), col))
    if text[pos:].strip():
        raise ParseError("unexpected trailing text", line, pos + 1)
    return out


def parse_expression(text: str, alphabet: Alphabet, field: Field, line: int = 0) -> MPoly:
    toks = _tokens(text, line)
    if not toks:
        raise ParseError("empty expression", line, 1)
    i = 0
    end_col = len(text) + 1

    def peek(j=0):
        return toks[i + j] if i + j < len(toks) else (None, None, end_col)

    def gen(tok):
        kind, val, col = tok
        if kind != "name":
            raise ParseError(f"expected a generator, got {val!r}" if val else "expected a generator",
                             line, col)
        if val not in alphabet:
            raise ParseError(f"unknown generator {val!r}", line, col)
        return alphabet.rank(val)

    def coeff(tok):
        kind, val, col = tok
        try:
            return field(val)
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"malformed rational {val!r}: {e}", line, col) from None

    def term():
        nonlocal i
        c = field(1)
        kind, val, col = peek()
        if kind in ("num", "name") and peek(1)[1] == "*":
            c = coeff(peek())
            i += 2
            kind, val, col = peek()
        if kind == "num":
            raise ParseError(f"coefficient {val!r} must be followed by '*'", line, col)
        if val == "[":
            i += 1
            gs = [gen(peek())]
            i += 1
            while peek()[1] == ",":
                i += 1
                gs.append(gen(peek()))
                i += 1
            if peek()[1] != "]":
                raise ParseError("expected ']'", line, peek()[2])
            if len(gs) < 2:
                raise ParseError("a bracket needs at least two generators", line, col)
            i += 1
            return bracket_left_normed(gs).scale(c)
        g = gen(peek())
        i += 1
        return MPoly.letter(g, c)

    total = MPoly()
    sign = 1
    if peek()[1] in ("+", "-"):
        sign = -1 if peek()[1] == "-" else 1
        i += 1
    while True:
        t = term()
        total = total + (t if sign > 0 else -t)
        if i == len(toks):
            break
        kind, val, col = peek()
        if val not in ("+", "-"):
            raise ParseError(f"expected '+' or '-', got {val!r}", line, col)
        sign = -1 if val == "-" else 1
        i += 1
    return total


# -- presentation files ------------------------------------------------------

_FIELD_RE = re.compile(r"^field\s+(Q|GF\((\d+)\))\s*$")


def parse_presentation(text: str) -> Presentation:
    field = Field()
    alphabet = None
    rels, origins = [], []
    in_rel = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        if not in_rel and stripped.startswith("field"):
            m = _FIELD_RE.match(stripped)
            if not m:
                raise ParseError("expected 'field Q' or 'field GF(p)'", lineno, 1)
            try:
                field = Field(int(m.group(2))) if m.group(2) else Field()
            except ValueError as e:
                raise ParseError(str(e), lineno, 1) from None
        elif not in_rel and stripped.startswith("generators:"):
            body = stripped[len("generators:"):]
            names = [n.strip() for n in body.split("<")]
            if names == [""]:
                raise ParseError("empty generator list", lineno, 1)
            try:
                alphabet = Alphabet(tuple(names))
            except ValueError as e:
                raise ParseError(str(e), lineno, 1) from None
        elif not in_rel and stripped == "relations:":
            if alphabet is None:
                raise ParseError("'relations:' before 'generators:'", lineno, 1)
            in_rel = True
        elif in_rel:
            offset = len(line) - len(line.lstrip())
            try:
                f = parse_expression(stripped, alphabet, field, lineno)
            except ParseError as e:
                raise ParseError(e.msg, lineno, e.col + offset) from None
            if not f:
                print(f"warning: line {lineno}: relation is zero, dropped", file=sys.stderr)
                continue
            rels.append(f)
            origins.append(stripped)
        else:
            raise ParseError(f"unexpected line {stripped!r}", lineno, 1)
    if alphabet is None:
        raise ParseError("empty generator list: missing 'generators:' line")
    return Presentation(alphabet, rels, field, origins)


def format_presentation(P: Presentation) -> str:
    lines = [f"field {P.field.name}", "generators: " + " < ".join(P.alphabet.names), "relations:"]
    lines += [r.format(P.alphabet) for r in P.relations]
    return "\n".join(lines) + "\n"


# -- shared helpers ------------------------------------------------------------


def _load(path: str) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read())


def _complete(P: Presentation, args):
    res = shirshov_complete(P, args.max_deg, workers=args.workers, strict=args.strict_def32)
    basis = reduce_basis(res.basis)
    return res, basis


def _origin_map(res) -> dict:
    out: dict = {}
    for f, o in zip(res.basis, res.origins):
        out.setdefault(f.lead_word, o)
    return out


def result_json(P: Presentation, res, basis) -> str:
    org = _origin_map(res)
    data = {
        "status": res.status,
        "degree_bound": res.degree_bound,
        "basis": [
            {"leading": P.alphabet.format_word(f.lead_word),
             "polynomial": f.format(P.alphabet),
             "origin": org.get(f.lead_word) or "input"}
            for f in basis
        ],
        "stats": dict(res.stats, reduced=len(basis), total=len(res.basis)),
    }
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def result_text(P: Presentation, res, basis) -> str:
    org = _origin_map(res)
    out = [f"status: {res.status}", f"degree_bound: {res.degree_bound}",
           f"field: {P.field.name}", f"basis ({len(basis)}):"]
    for f in basis:
        out.append(f"  {f.format(P.alphabet)}    # {org.get(f.lead_word) or 'input'}")
    st = dict(res.stats, reduced=len(basis), total=len(res.basis))
    out.append("stats: " + " ".join(f"{k}={st[k]}" for k in sorted(st)))
    return "\n".join(out) + "\n"


def _status_code(res) -> int:
    return 0 if res.status == COMPLETE else 2


# -- commands ----------------------------------------------------------------


def cmd_complete(args, out) -> int:
    P = _load(args.file)
    res, basis = _complete(P, args)
    out.write(result_json(P, res, basis) if args.format == "json" else result_text(P, res, basis))
    if args.log:
        with open(args.log, "w", encoding="utf-8") as fh:
            for ev in res.events:
                fh.write(json.dumps(ev, sort_keys=True) + "\n")
    return _status_code(res)


def cmd_nf(args, out) -> int:
    P = _load(args.file)
    res, basis = _complete(P, args)
    f = parse_expression(args.expr, P.alphabet, P.field)
    nf = Reducer(basis).normal_form(f)
    if args.format == "json":
        out.write(json.dumps({"input": f.format(P.alphabet), "normal_form": nf.format(P.alphabet),
                              "status": res.status}, sort_keys=True, indent=2) + "\n")
    else:
        out.write(nf.format(P.alphabet) + "\n")
    return _status_code(res)


def cmd_irr(args, out) -> int:
    P = _load(args.file)
    res, basis = _complete(P, args)
    words, counts = irr_up_to(basis, P.k, args.max_len)
    by_len: dict = {}
    for w in words:
        by_len.setdefault(len(w), []).append(P.alphabet.format_word(w))
    if args.format == "json":
        out.write(json.dumps({"status": res.status, "counts": counts,
                              "words": {str(n): by_len.get(n, []) for n in range(1, args.max_len + 1)}},
                             sort_keys=True, indent=2) + "\n")
    else:
        for n in range(1, args.max_len + 1):
            ws = by_len.get(n, [])
            out.write(f"{n} ({len(ws)}): {', '.join(ws)}".rstrip() + "\n")
    return _status_code(res)


def cmd_dims(args, out) -> int:
    P = _load(args.file)
    res, basis = _complete(P, args)
    _, counts = irr_up_to(basis, P.k, args.max_len)
    code = _status_code(res)
    data = {"status": res.status, "dims": counts}
    lines = ["dims: " + " ".join(map(str, counts))]
    if args.oracle:
        orc = oracle_quotient_dims(P, (), args.max_len)
        verdict = "MATCH" if orc == counts else "MISMATCH"
        data.update(oracle=orc, verdict=verdict)
        lines += ["oracle: " + " ".join(map(str, orc)), verdict]
        if verdict == "MISMATCH":
            code = 1
    if args.format == "json":
        out.write(json.dumps(data, sort_keys=True, indent=2) + "\n")
    else:
        out.write("\n".join(lines) + "\n")
    return code


def _tree_from_args(args):
    if args.random is not None:
        rng = random.Random(args.seed)
        parent, root = random_tree(args.random, rng)
        return parent, root
    if not args.file:
        raise ValueError("tree needs FILE or --random N")
    with open(args.file, encoding="utf-8") as fh:
        G = parse_graph(fh.read())
    return tree_parents(G)


def cmd_gen(args, out) -> int:
    what = args.what
    if what == "circuit":
        P = graph_presentation(circuit(args.n))
    elif what == "cube":
        P = graph_presentation(cube(args.n))
    elif what == "tree":
        parent, root = _tree_from_args(args)
        if args.graph:
            out.write(format_graph(tree_graph(parent, root)))
            return 0
        P = tree_presentation(parent, root)
    elif what == "graph":
        with open(args.file, encoding="utf-8") as fh:
            P = graph_presentation(parse_graph(fh.read()))
    elif what == "random":
        P = random_presentation(random.Random(args.seed))
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(what)
    out.write(format_presentation(P))
    return 0


def _verify_circuit(n: int, args, out) -> bool:
    P = graph_presentation(circuit(n))
    res, basis = _complete(P, args)
    expected = {f.make_monic() for f in circuit_theorem_basis(n)}
    got = set(basis)
    out.write(f"circuit {n}: status {res.status}, basis size {len(basis)} (expected {2 * n - 3})\n")
    if res.status != COMPLETE or got != expected:
        missing = sorted(expected - got, key=lambda f: key(f.lead_word))
        extra = sorted(got - expected, key=lambda f: key(f.lead_word))
        if missing:
            out.write(f"  first missing: {missing[0].format(P.alphabet)}\n")
        if extra:
            out.write(f"  first extra: {extra[0].format(P.alphabet)}\n")
        return False
    return True


def _verify_tree(args, out) -> bool:
    parent, root = _tree_from_args(args)
    P = tree_presentation(parent, root)
    res, basis = _complete(P, args)
    ok, wit = is_gs_basis(P.relations, P.k)
    out.write(f"tree: {P.k} vertices, adjoined {res.stats['adjoined']}, gs_basis {ok}\n")
    good = res.stats["adjoined"] == 0 and ok
    pr = tree_parent_ranks(P)
    R = Reducer(P.relations)
    max_len = min(args.max_len, 5)
    for n in range(1, max_len + 1):
        for w in enumerate_regular_words(P.k, n):
            if tree_word_irreducible(w, pr) != R.is_irreducible(w):
                out.write(f"  irreducibility mismatch at {P.alphabet.format_word(w)}\n")
                return False
    out.write(f"  irreducible-word criterion checked to length {max_len}\n")
    return good


def _verify_cu3(args, out) -> bool:
    P = graph_presentation(cube(3))
    res, basis = _complete(P, args)
    ok, _ = is_gs_basis(basis, P.k)
    _, counts = irr_up_to(basis, P.k, 6)
    orc = oracle_quotient_dims(P, (), 6)
    rep = classify_cu3([f.lead_word for f in basis])
    out.write(f"cu3: status {res.status}, basis size {len(basis)}, gs_basis {ok}\n")
    out.write(f"  irr counts   {' '.join(map(str, counts))}\n")
    out.write(f"  oracle dims  {' '.join(map(str, orc))}  {'MATCH' if orc == counts else 'MISMATCH'}\n")
    fams = " ".join(f"{k}={v}" for k, v in rep["counts"].items())
    out.write(f"  families: {fams} unmatched={len(rep['unmatched'])}\n")
    for w in rep["unmatched"]:
        out.write(f"    unmatched {P.alphabet.format_word(w)}\n")
    return res.status == COMPLETE and ok and orc == counts


def _verify_cu4(args, out) -> bool:
    P = graph_presentation(cube(4))
    t = time.perf_counter()
    res = monomial_complete(P)
    basis = reduce_basis(res.basis)
    dt = time.perf_counter() - t
    out.write(f"cu4: {len(P.relations)} edge relations, algorithm output {len(res.basis)}, "
              f"reduced basis {len(basis)} (expected {CU4_EXPECTED})\n")
    if args.timing:
        out.write(f"  time {dt:.2f}s\n")
    return len(basis) == CU4_EXPECTED


def cmd_verify(args, out) -> int:
    what = args.what
    if what == "circuit":
        ok = _verify_circuit(args.n, args, out)
    elif what == "tree":
        ok = _verify_tree(args, out)
    elif what == "cu3":
        ok = _verify_cu3(args, out)
    elif what == "cu4":
        ok = _verify_cu4(args, out)
    else:  # pragma: no cover
        raise ValueError(what)
    out.write("PASS\n" if ok else "FAIL\n")
    return 0 if ok else 1


# -- argument parsing ----------------------------------------------------------


def _engine_flags(p):
    p.add_argument("--max-deg", type=int, default=None,
                   help="largest composition word length examined (default 2*|X|)")
    p.add_argument("--strict-def32", action="store_true",
                   help="skip type I compositions whose tails are coprime")
    p.add_argument("--workers", type=int, default=1, help="process pool size for reductions")
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="metabelian-gs",
                                 description="Groebner-Shirshov bases for metabelian Lie algebras")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("complete", help="complete a presentation and print the reduced basis")
    p.add_argument("file")
    p.add_argument("--log", help="write the composition event log as JSON lines")
    _engine_flags(p)
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("nf", help="normal form of an expression")
    p.add_argument("file")
    p.add_argument("-e", "--expr", required=True)
    _engine_flags(p)
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("irr", help="list irreducible words by length")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, default=4)
    _engine_flags(p)
    p.set_defaults(func=cmd_irr)

    p = sub.add_parser("dims", help="dimensions of the quotient by length")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--oracle", action="store_true", help="compare with brute-force linear algebra")
    _engine_flags(p)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("gen", help="emit a presentation file")
    p.add_argument("what", choices=("circuit", "cube", "tree", "graph", "random"))
    p.add_argument("arg", nargs="?", help="n for circuit/cube, adjacency-list FILE for tree/graph")
    p.add_argument("--random", type=int, metavar="N", help="random tree on N vertices")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--graph", action="store_true", help="for tree: print the adjacency list instead")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a theorem instance")
    p.add_argument("what", choices=("circuit", "tree", "cu3", "cu4"))
    p.add_argument("arg", nargs="?", help="n for circuit, adjacency-list FILE for tree")
    p.add_argument("--random", type=int, metavar="N", help="random tree on N vertices")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-len", type=int, default=5)
    p.add_argument("--timing", action="store_true", help="print elapsed time (cu4)")
    _engine_flags(p)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: Optional[list] = None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    args = ap.parse_args(argv)
    what = getattr(args, "what", None)
    if what in ("circuit", "cube"):
        try:
            args.n = int(args.arg)
        except (TypeError, ValueError):
            ap.error(f"{what} needs an integer n")
    args.file = args.arg if what in ("tree", "graph") else getattr(args, "file", None)
    if what == "graph" and not args.file:
        ap.error("graph needs FILE")
    try:
        return args.func(args, out)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
