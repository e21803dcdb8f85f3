"""Command-line front end.

Exit status is 0 on success or a passing check, 1 when a check finds
counterexamples and 2 on usage errors.  JSON output is one document per
line; large integers are written as decimal strings.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import branching, charzero, labels
from .crystal import crystal_graph, eps_vector
from .partitions import Char, Partition, a_parity, block_content, enumerate_rpp, is_restricted
from .verify import list_lemmas, verify


class UsageError(Exception):
    pass


def _char(text: str) -> Char:
    try:
        return Char(int(text))
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {value}")
    return value


def _positive(text: str) -> int:
    value = _natural(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _emit(obj) -> None:
    print(json.dumps(obj))


def _require_restricted(c: Char, lam: Partition) -> None:
    if not is_restricted(c, lam):
        raise UsageError(f"{lam} is not a restricted {c.p}-strict partition")


def cmd_enumerate(args) -> int:
    for lam in enumerate_rpp(args.p, args.n):
        if args.json:
            _emit({"p": str(args.p.p), "n": str(args.n), "partition": str(lam)})
        else:
            print(lam)
    return 0


def cmd_classify(args) -> int:
    c, lam = args.p, args.lam
    _require_restricted(c, lam)
    n = lam.n
    out = {
        "partition": str(lam),
        "n": str(n),
        "eps": eps_vector(c, lam) if lam else [],
        "js": "",
        "four_cases": None,
        "labels": [],
        "type": "Q" if a_parity(c, lam) else "M",
        "block_content": {str(i): str(k) for i, k in block_content(c, lam).items()},
        "d_lower": {},
        "dim_lower_bound": None,
    }
    if n:
        cls = branching.js_class(c, lam)
        out["js"] = str(cls)
        if cls.is_js and lam != labels.alpha_label(c, n):
            out["four_cases"] = branching.four_cases(c, lam)
        out["labels"] = [name for name, cands in labels.labels(c, n).items() if lam in cands]
        out["d_lower"] = {str(j): str(branching.d_lower(c, lam, j)) for j in (1, 2) if n - j >= 1}
        out["dim_lower_bound"] = str(branching.dim_lower_bound(c, lam))
    _emit(out)
    return 0


def cmd_crystal(args) -> int:
    graph = crystal_graph(args.p, args.nmax)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(graph.to_dot())
    _emit({"p": str(args.p.p), "nmax": str(args.nmax),
           "level_sizes": [str(k) for k in graph.level_sizes()],
           "edges": str(len(graph.edges))})
    return 0


def cmd_dims(args) -> int:
    if args.lo < 5 or args.lo > args.hi:
        raise UsageError("dims needs 5 <= --from <= --to")
    for n in range(args.lo, args.hi + 1):
        _emit(labels.dims(args.p, n).to_dict())
    return 0


def cmd_schur(args) -> int:
    lam = args.lam
    if any(x == y for x, y in zip(lam, lam[1:])):
        raise UsageError(f"{lam} is not strict")
    _emit({"partition": str(lam), "schur_dim": str(charzero.schur_dim(lam)),
           "super_dim": str(charzero.super_dim(lam))})
    return 0


def cmd_dimlb(args) -> int:
    c, lam = args.p, args.lam
    _require_restricted(c, lam)
    if not lam:
        raise UsageError("the empty partition has no dimension bound")
    _emit({"p": str(c.p), "partition": str(lam),
           "dim_lower_bound": str(branching.dim_lower_bound(c, lam))})
    return 0


def _report(report, as_json: bool) -> int:
    if as_json:
        print(report.to_json())
    else:
        print(report.summary())
        for p, lam, detail in report.counterexamples:
            print(f"  p={p} ({lam}): {detail}")
    return 0 if report.passed else 1


def cmd_verify(args) -> int:
    try:
        report = verify(args.lemma, args.p, args.lo, args.hi, threads=args.threads)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _report(report, args.json)


def cmd_check_main(args) -> int:
    if not 12 <= args.lo <= args.hi:
        raise UsageError("check-main needs 12 <= --from <= --to")
    report = verify("MainThm_char0", Char(0), args.lo, args.hi, threads=args.threads)
    return _report(report, True)


def cmd_list_lemmas(args) -> int:
    for lemma_id in list_lemmas():
        print(lemma_id)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinbranch",
        description="Restricted p-strict partitions, crystal operators and branching bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_p(sp):
        sp.add_argument("--p", type=_char, required=True, help="characteristic: 0 or an odd prime")
        return sp

    sp = with_p(sub.add_parser("enumerate", help="list RP_p(n)"))
    sp.add_argument("--n", type=_natural, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_enumerate)

    sp = with_p(sub.add_parser("classify", help="epsilon vector, JS class, labels and bounds"))
    sp.add_argument("--lambda", dest="lam", type=_partition, required=True)
    sp.set_defaults(func=cmd_classify)

    sp = with_p(sub.add_parser("crystal", help="build the crystal graph up to a degree"))
    sp.add_argument("--nmax", type=_natural, required=True)
    sp.add_argument("--dot", metavar="PATH", help="write the graph in DOT format")
    sp.set_defaults(func=cmd_crystal)

    sp = with_p(sub.add_parser("dims", help="basic and second basic dimension formulas"))
    sp.add_argument("--from", dest="lo", type=_natural, required=True)
    sp.add_argument("--to", dest="hi", type=_natural, required=True)
    sp.set_defaults(func=cmd_dims)

    sp = sub.add_parser("schur", help="characteristic-zero spin dimensions of a strict partition")
    sp.add_argument("--lambda", dest="lam", type=_partition, required=True)
    sp.set_defaults(func=cmd_schur)

    sp = with_p(sub.add_parser("dimlb", help="recursive dimension lower bound"))
    sp.add_argument("--lambda", dest="lam", type=_partition, required=True)
    sp.set_defaults(func=cmd_dimlb)

    sp = with_p(sub.add_parser("verify", help="run one registered lemma check"))
    sp.add_argument("lemma")
    sp.add_argument("--from", dest="lo", type=_natural, required=True)
    sp.add_argument("--to", dest="hi", type=_natural, required=True)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--threads", type=_positive, default=1)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("check-main", help="characteristic-zero dimension classification")
    sp.add_argument("--from", dest="lo", type=_natural, required=True)
    sp.add_argument("--to", dest="hi", type=_natural, required=True)
    sp.add_argument("--threads", type=_positive, default=1)
    sp.set_defaults(func=cmd_check_main)

    sp = sub.add_parser("list-lemmas", help="list registered lemma ids")
    sp.set_defaults(func=cmd_list_lemmas)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"spinbranch {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
