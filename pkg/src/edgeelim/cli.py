"""Command-line front end.

    edgeelim compute --poly eep --algo rec --edges "2 1;1 2"
    edgeelim check --corpus all-n4
    edgeelim transform --from eep --to scp --n 2 --input xi.txt
    edgeelim deck --g6 "Bw"
    edgeelim reconstruct --deck deck.txt --brute-force
    edgeelim degseq --edges "3 2;1 2;2 3"

Exit codes: 0 ok, 1 failed identity, 2 parse error, 3 size guard,
4 invalid flags, 5 non-polynomial transform result, 6 reconstruction
found zero or several candidates.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import encodings as enc
from . import invariants as inv
from . import transforms as tr
from .checks import run_identity_suite
from .corpus import all_labeled_graphs, parse_corpus_name
from .errors import (
    EnumerationGuardExceeded,
    NonPolynomialResult,
    ParseError,
    PolynomialParseError,
    SizeGuardExceeded,
)
from .graphcore import Graph, parse_edgelist, parse_graph6
from .polylib import Polynomial, parse_polynomial, to_canonical_text, to_json

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_GUARD = 3
EXIT_FLAGS = 4
EXIT_NONPOLY = 5
EXIT_RECONSTRUCT = 6

CORPUS_MAX_N = 5

# (poly, algo) -> function of a graph
ALGORITHMS = {
    ("eep", "rec"): inv.eep_recurrence,
    ("scp", "def"): inv.scp_subset,
    ("scp", "induced"): inv.scp_induced,
    ("scp", "rec"): inv.scp_recurrence,
    ("tcp", "expansion"): inv.tcp_expansion,
    ("tcp", "rec"): inv.tcp_recurrence,
    ("potts", "def"): inv.potts_subset,
    ("potts", "rec"): inv.potts_recurrence,
    ("badcol", "def"): inv.badcol_subset,
    ("badcol", "rec"): inv.badcol_recurrence,
    ("bivchrom", "expansion"): inv.bivariate_chromatic,
    ("bivchrom", "rec"): inv.bivchrom_recurrence,
    ("scomp", "def"): inv.scomp_subset,
}
DEFAULT_ALGO = {
    "eep": "rec",
    "scp": "def",
    "tcp": "expansion",
    "potts": "def",
    "badcol": "def",
    "bivchrom": "expansion",
    "scomp": "def",
}


class FlagError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise FlagError(message)


def parse_inline_edges(text: str) -> Graph:
    """``"n m;u v;u v"`` is the edgelist format with ';' for newlines."""
    return parse_edgelist(text.replace(";", "\n"))


def _read_graph(args) -> Graph:
    sources = [s for s in (args.graph, args.g6, args.edges) if s is not None]
    if len(sources) != 1:
        raise FlagError("give exactly one of --graph, --g6, --edges")
    if args.g6 is not None:
        return parse_graph6(args.g6)
    if args.edges is not None:
        return parse_inline_edges(args.edges)
    path = Path(args.graph)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".g6":
        return parse_graph6(text)
    return parse_edgelist(text)


def _add_graph_flags(p):
    p.add_argument("--graph", help="edgelist file (or graph6 if it ends in .g6)")
    p.add_argument("--g6", help="inline graph6 string")
    p.add_argument("--edges", help='inline edgelist, e.g. "3 2;1 2;2 3"')


def _emit(p: Polynomial, as_json: bool) -> None:
    print(to_json(p) if as_json else to_canonical_text(p))


def cmd_compute(args) -> int:
    algo = args.algo or DEFAULT_ALGO[args.poly]
    fn = ALGORITHMS.get((args.poly, algo))
    if fn is None:
        valid = sorted(a for p, a in ALGORITHMS if p == args.poly)
        raise FlagError(f"--poly {args.poly} supports --algo {', '.join(valid)}")
    _emit(fn(_read_graph(args)), args.json)
    return EXIT_OK


def _format_table(rows: list[tuple[str, int, int, int]]) -> str:
    width = max(len(name) for name, *_ in rows)
    lines = [f"{'identity'.ljust(width)}  pass  fail  n/a  status"]
    for name, ok, bad, na in rows:
        status = "FAIL" if bad else ("PASS" if ok else "N/A")
        lines.append(f"{name.ljust(width)}  {ok:4d}  {bad:4d}  {na:3d}  {status}")
    return "\n".join(lines)


def cmd_check(args) -> int:
    if args.corpus is not None:
        if any(s is not None for s in (args.graph, args.g6, args.edges)):
            raise FlagError("--corpus cannot be combined with a graph source")
        try:
            k = parse_corpus_name(args.corpus)
        except ValueError as exc:
            raise FlagError(str(exc)) from None
        if k > CORPUS_MAX_N:
            raise FlagError(f"--corpus all-n<k> is capped at k <= {CORPUS_MAX_N}")
        graphs = list(all_labeled_graphs(k))
    else:
        graphs = [_read_graph(args)]

    tally: dict[str, list[int]] = {}
    failures = []
    for idx, g in enumerate(graphs):
        inv.SizeGuard.default().check(g)
        for res in run_identity_suite(g, seed=args.seed):
            row = tally.setdefault(res.name, [0, 0, 0])
            if res.passed is None:
                row[2] += 1
            elif res.passed:
                row[0] += 1
            else:
                row[1] += 1
                failures.append((idx, res.name))
    print(f"graphs checked: {len(graphs)}")
    print(_format_table([(name, *counts) for name, counts in tally.items()]))
    for idx, name in failures[:20]:
        print(f"failed: graph #{idx}: {name}", file=sys.stderr)
    return EXIT_CHECK_FAILED if failures else EXIT_OK


def cmd_transform(args) -> int:
    src, dst = args.source, args.target
    if src == dst:
        raise FlagError("--from and --to must differ")
    needs_n = "scp" in (src, dst)
    if needs_n and args.n is None:
        raise FlagError("--n is required for transforms involving scp")
    text = Path(args.input).read_text(encoding="utf-8") if args.input else sys.stdin.read()
    p = parse_polynomial(text)
    # route through xi
    xi = {"eep": lambda q: q, "tcp": tr.eep_from_tcp, "scp": lambda q: tr.eep_from_scp(q, args.n)}[src](p)
    out = {"eep": lambda q: q, "tcp": tr.tcp_from_eep, "scp": lambda q: tr.scp_from_eep(q, args.n)}[dst](xi)
    _emit(out, args.json)
    return EXIT_OK


def cmd_deck(args) -> int:
    g = _read_graph(args)
    inv.SizeGuard.default().check(g)
    sys.stdout.write(enc.polynomial_deck(g).to_text())
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    deck = enc.PolyDeck.from_text(Path(args.deck).read_text(encoding="utf-8"))
    lower = enc.reconstruct_lower_coeffs(deck)
    if not args.brute_force:
        _emit(lower, args.json)
        return EXIT_OK
    candidates = enc.brute_force_reconstruct_check(deck)
    if len(candidates) != 1:
        print(f"lower strata: {to_canonical_text(lower)}", file=sys.stderr)
        print(f"brute force found {len(candidates)} candidates", file=sys.stderr)
        for c in candidates:
            print(to_canonical_text(c), file=sys.stderr)
        return EXIT_RECONSTRUCT
    _emit(candidates[0], args.json)
    return EXIT_OK


def cmd_degseq(args) -> int:
    g = _read_graph(args)
    hist = enc.degree_histogram_from_tcp(inv.tcp_expansion(g))
    if hist.counts:
        print(hist.to_text())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="edgeelim", description="Edge elimination polynomial toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="compute a graph polynomial")
    p.add_argument("--poly", required=True, choices=sorted(DEFAULT_ALGO))
    p.add_argument("--algo", choices=["def", "rec", "induced", "expansion"])
    _add_graph_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("check", help="run the identity suite")
    _add_graph_flags(p)
    p.add_argument("--corpus", help="all-n<k>: every labeled simple graph on k <= 5 vertices")
    p.add_argument("--seed", type=int, default=0, help="seed for random pivot choice")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("transform", help="convert between xi, H and P~")
    p.add_argument("--from", dest="source", required=True, choices=["eep", "scp", "tcp"])
    p.add_argument("--to", dest="target", required=True, choices=["eep", "scp", "tcp"])
    p.add_argument("--n", type=int, help="vertex count (needed when scp is involved)")
    p.add_argument("--input", help="polynomial file in canonical text (default: stdin)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("deck", help="write the polynomial deck of H")
    _add_graph_flags(p)
    p.set_defaults(func=cmd_deck)

    p = sub.add_parser("reconstruct", help="reconstruct H from a deck file")
    p.add_argument("--deck", required=True)
    p.add_argument("--brute-force", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("degseq", help="degree histogram read off P~")
    _add_graph_flags(p)
    p.set_defaults(func=cmd_degseq)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except FlagError as exc:
        print(f"edgeelim: {exc}", file=sys.stderr)
        return EXIT_FLAGS
    except (ParseError, PolynomialParseError) as exc:
        print(f"edgeelim: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"edgeelim: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (SizeGuardExceeded, EnumerationGuardExceeded) as exc:
        print(f"edgeelim: size guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except NonPolynomialResult as exc:
        print(f"edgeelim: {exc}", file=sys.stderr)
        return EXIT_NONPOLY
    except ValueError as exc:
        # malformed but parseable input, e.g. a polynomial in the wrong variables
        print(f"edgeelim: invalid input: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
