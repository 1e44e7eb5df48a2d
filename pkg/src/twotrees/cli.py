"""Command-line interface: ``twotrees <subcommand> ...``.

Exit status is 0 on success or acceptance, 1 on rejection or a failed
verification, and 2 on usage or input errors.  Data goes to stdout and
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import Optional, Sequence, TextIO

from .degseq import DegreeSequence, SequenceError, format_sequence, parse_sequence
from .graph import (
    GraphError,
    check_two_tree,
    degree_sequence,
    ear_adjacency_witness,
    format_edge_list,
    parse_edge_list,
    to_dot,
)
from .ktree import PASS_MESSAGE, check_ktree_necessary
from .oracle import MAX_ORACLE_N, OracleBoundError, census_entries
from .realizer import NotRealizableError, random_two_tree, realize
from .recognizer import recognize

__all__ = ["main", "run", "build_parser"]

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Bad input detected after argument parsing; reported with exit status 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D401 - argparse hook
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_source(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def _sequence_arg(args, stdin: TextIO) -> DegreeSequence:
    if args.file is not None and args.seq is not None:
        raise UsageError("give either SEQ or --file, not both")
    if args.file is not None:
        text = _read_source(args.file, stdin)
    elif args.seq is not None:
        text = stdin.read() if args.seq == "-" else args.seq
    else:
        raise UsageError("a sequence is required (SEQ or --file)")
    try:
        seq = parse_sequence(text)
    except SequenceError as exc:
        raise UsageError(str(exc)) from None
    if seq.n == 0:
        raise UsageError("empty sequence")
    return seq


def _parse_seq_text(text: str) -> DegreeSequence:
    try:
        return parse_sequence(text)
    except SequenceError as exc:
        raise UsageError(str(exc)) from None


# -- subcommands ---------------------------------------------------------------------

def _cmd_recognize(args, out, err, stdin) -> int:
    seq = _sequence_arg(args, stdin)
    verdict = recognize(seq)
    if verdict.accepted:
        out.write("2-tree: yes\n")
        return EXIT_OK
    out.write(f"2-tree: no (condition {verdict.violated})\n")
    return EXIT_REJECT


def _cmd_realize(args, out, err, stdin) -> int:
    seq = _sequence_arg(args, stdin)
    ell = args.ell
    if ell is not None and ell not in seq:
        raise UsageError(f"--ell {ell} does not occur in the sequence")
    if ell is not None and ell < 3 and seq.n > 3:
        raise UsageError("--ell must be at least 3")
    try:
        result = realize(seq, ell)
    except NotRealizableError as exc:
        err.write(f"2-tree: no (condition {exc.condition})\n")
        return EXIT_REJECT
    trailer = f"ell-vertex={result.ell_vertex} witness-ear={result.witness_ear}"
    if args.dot:
        out.write(to_dot(result.graph))
        out.write(f"// {trailer}\n")
    else:
        out.write(format_edge_list(result.graph))
        out.write(trailer + "\n")
    return EXIT_OK


def _cmd_verify(args, out, err, stdin) -> int:
    try:
        g = parse_edge_list(_read_source(args.graph, stdin))
    except GraphError as exc:
        raise UsageError(f"bad graph: {exc}") from None
    ok = True
    check = check_two_tree(g)
    if check.ok:
        out.write("2-tree: yes\n")
    else:
        out.write(f"2-tree: no ({check.reason})\n")
        ok = False
    if args.seq is not None:
        want = _parse_seq_text(args.seq)
        have = degree_sequence(g)
        if have == want:
            out.write("degree-sequence: match\n")
        else:
            out.write(f"degree-sequence: mismatch (graph has {format_sequence(have)})\n")
            ok = False
    if args.ell is not None:
        found = ear_adjacency_witness(g, args.ell) if check.ok else None
        if found is None:
            out.write(f"witness: none for ell={args.ell}\n")
            ok = False
        else:
            out.write(f"witness: ell-vertex={found[0]} witness-ear={found[1]}\n")
    return EXIT_OK if ok else EXIT_REJECT


def _cmd_census(args, out, err, stdin) -> int:
    try:
        entries = census_entries(args.n)
    except OracleBoundError as exc:
        raise UsageError(str(exc)) from None
    if not args.graphs:
        seen = []
        for e in entries:
            if not seen or seen[-1] != e.sequence:
                seen.append(e.sequence)
        out.writelines(format_sequence(s) + "\n" for s in seen)
        return EXIT_OK
    for e in entries:
        out.write(f"degree-sequence={format_sequence(e.sequence)}\n")
        out.write(format_edge_list(e.graph.to_graph()))
    return EXIT_OK


def _cmd_random(args, out, err, stdin) -> int:
    if args.n < 3:
        raise UsageError("N must be at least 3")
    g = random_two_tree(args.n, args.seed)
    out.write(format_edge_list(g))
    out.write(f"degree-sequence={format_sequence(degree_sequence(g))}\n")
    return EXIT_OK


def _cmd_ktree(args, out, err, stdin) -> int:
    if args.k < 1:
        raise UsageError("-k must be at least 1")
    seq = _sequence_arg(args, stdin)
    violated = check_ktree_necessary(seq, args.k)
    if not violated:
        out.write(PASS_MESSAGE + "\n")
        return EXIT_OK
    out.writelines(f"violates condition ({tag})\n" for tag in violated)
    return EXIT_REJECT


# -- wiring ---------------------------------------------------------------------------

def _add_seq_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("seq", nargs="?", metavar="SEQ", help='sequence text such as "2^4 5 5"; - reads stdin')
    p.add_argument("--file", metavar="F", help="read the sequence from F (- for stdin)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twotrees", description="Degree sequences of 2-trees.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("recognize", help="decide whether SEQ is a 2-tree degree sequence")
    _add_seq_args(p)
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("realize", help="print a 2-tree realizing SEQ")
    _add_seq_args(p)
    p.add_argument("--ell", type=int, help="degree whose vertex must touch an ear (default: max)")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead of an edge list")
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("verify", help="check that an edge list is a 2-tree")
    p.add_argument("--graph", required=True, metavar="F", help="edge list file (- for stdin)")
    p.add_argument("--seq", metavar="SEQ", help="expected degree sequence")
    p.add_argument("--ell", type=int, help="require a degree-ELL vertex next to an ear")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("census", help="degree sequences of all 2-trees on N vertices")
    p.add_argument("n", type=int, metavar="N", help=f"3..{MAX_ORACLE_N}")
    p.add_argument("--graphs", action="store_true", help="also print one edge list per class")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("random", help="a random 2-tree on N vertices")
    p.add_argument("n", type=int, metavar="N")
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_random)

    p = sub.add_parser("ktree-check", help="screen SEQ against necessary k-tree conditions")
    p.add_argument("-k", type=int, required=True, metavar="K")
    _add_seq_args(p)
    p.set_defaults(func=_cmd_ktree)
    return parser


def main(
    argv: Optional[Sequence[str]] = None,
    *,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
    stdin: Optional[TextIO] = None,
) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    inp = stdin or sys.stdin
    parser = build_parser()
    # argparse prints usage and --help through sys.std*; honour the given streams
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out, err, inp)
    except UsageError as exc:
        err.write(f"twotrees {args.command}: error: {exc}\n")
        return EXIT_USAGE


run = main
