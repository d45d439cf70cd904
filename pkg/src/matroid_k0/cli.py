"""Command-line front end: ``matroid-k0 {check,tutte,k0,corpus}``.

Exit status is 0 on success, 1 on invalid input and 2 when the two Tutte
routes disagree.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .corpus import FAMILIES, write_corpus
from .errors import AxiomViolation, MatroidError
from .io import load_matroid
from .ktheory import K0IsoElement, gamma, k0_iso, tg_invariant
from .matroid import bases, circuits, isthmuses, loops, nondegenerate_elements, rank
from .trees import build_indecomposable_tree, to_dot
from .tutte import tutte, tutte_oracle

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2


def _fmt_set(s) -> str:
    return "{" + ",".join(str(e) for e in sorted(s)) + "}"


def _fmt_family(fam) -> str:
    items = sorted((tuple(sorted(s)) for s in fam), key=lambda s: (len(s), s))
    return " ".join(_fmt_set(s) for s in items) if items else "none"


def _fmt_elems(elems) -> str:
    return " ".join(str(e) for e in elems) if elems else "none"


def cmd_check(args, out) -> int:
    try:
        m = load_matroid(args.file)
    except AxiomViolation as exc:
        witness = " ".join(_fmt_set(s) for s in exc.witness)
        print(f"invalid: AxiomViolation({exc.axiom}): {exc}", file=out)
        print(f"witness: {witness}", file=out)
        return EXIT_INVALID
    print(f"ground set: {_fmt_set(m.ground)}", file=out)
    print(f"rank: {rank(m)}", file=out)
    print(f"bases: {len(bases(m))}", file=out)
    print(f"circuits: {_fmt_family(circuits(m))}", file=out)
    print(f"loops: {_fmt_elems(loops(m))}", file=out)
    print(f"isthmuses: {_fmt_elems(isthmuses(m))}", file=out)
    print(f"non-degenerate: {_fmt_elems(nondegenerate_elements(m))}", file=out)
    return EXIT_OK


def cmd_tutte(args, out) -> int:
    m = load_matroid(args.file)
    poly = tutte(m)
    print(poly, file=out)
    status = EXIT_OK
    if args.oracle:
        check = tutte_oracle(m)
        print(f"oracle: {check}", file=out)
        if check == poly:
            print("MATCH", file=out)
        else:
            print("MISMATCH", file=out)
            status = EXIT_MISMATCH
    if args.tree:
        Path(args.tree).write_text(to_dot(build_indecomposable_tree(m)), encoding="utf-8")
    if args.eval is not None:
        print(tg_invariant(m, *args.eval), file=out)
    return status


def _signed_terms(terms):
    for term in terms:
        if term.startswith("+"):
            yield 1, term[1:]
        elif term.startswith("-"):
            yield -1, term[1:]
        else:
            yield 1, term


def cmd_k0(args, out) -> int:
    if not args.terms:
        raise MatroidError("k0 needs at least one +FILE or -FILE term")
    total = K0IsoElement()
    for sign, path in _signed_terms(args.terms):
        total = total + k0_iso(load_matroid(path)) * sign
    print(f"Z[M]: {total}", file=out)
    print(f"gamma: {gamma(total)}", file=out)
    return EXIT_OK


def cmd_corpus(args, out) -> int:
    families = tuple(f.strip() for f in args.families.split(",") if f.strip())
    for fam in families:
        if fam not in FAMILIES:
            raise MatroidError(f"unknown family {fam!r}; choose from {', '.join(FAMILIES)}")
    lines = write_corpus(args.out_dir, args.max_elements, families, args.seed)
    print(f"wrote {len(lines)} documents and manifest.tsv to {args.out_dir}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="matroid-k0", description="Matroids, Tutte polynomials and K0 of matroids.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="validate a matroid document and print its invariants")
    c.add_argument("file")
    c.set_defaults(run=cmd_check)

    t = sub.add_parser("tutte", help="print the Tutte polynomial")
    t.add_argument("file")
    t.add_argument("--oracle", action="store_true", help="also run the subset-sum oracle and compare")
    t.add_argument("--tree", metavar="DOT", help="write the default deletion-contraction tree as DOT")
    t.add_argument("--eval", nargs=2, type=int, metavar=("A", "B"), help="print T(M; A, B)")
    t.set_defaults(run=cmd_tutte)

    k = sub.add_parser("k0", help="a signed sum of matroids in Z[M] and its image in Z[ε,σ]")
    k.add_argument("terms", nargs="*", metavar="±FILE")
    k.set_defaults(run=cmd_k0)

    g = sub.add_parser("corpus", help="write a test corpus and its manifest")
    g.add_argument("out_dir")
    g.add_argument("--max-elements", type=int, default=4)
    g.add_argument("--families", default="exhaustive", help=f"comma-separated subset of {','.join(FAMILIES)}")
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(run=cmd_corpus)
    return p


def main(argv=None, out=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    # "-M.json" would otherwise be read as an option
    if argv and argv[0] == "k0" and "--" not in argv:
        argv.insert(1, "--")
    args = build_parser().parse_args(argv)
    try:
        return args.run(args, out)
    except MatroidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
