"""Batch command line front end.

Every command prints one document to stdout: a JSON object with ``command``,
``inputs``, ``result`` and ``version`` keys (``--format json``, the default),
CSV rows, or ``key: value`` lines.  Exit status is 0 when the query was
answered and every check passed, 1 when an identity check failed, and 2 for
usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .cauchy import verify_cauchy
from .dominoes import (
    NoTiling,
    enumerate_sdt,
    enumerate_tilings,
    flip_graph,
    nice_and_bad_counts,
    nv_minus_bv,
    sign_domino,
    spin_sum,
    vertical_count,
)
from .identities import OddN, OddSize, check_proposition, sweep, verify_theorem1
from .shapes import BoundTooSmall, MalformedPartition, parse_partition, parse_shape
from .tableaux import enumerate_syt, imbalance, permutation_sign, reading_word

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _shape(text):
    try:
        return parse_shape(text)
    except MalformedPartition as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _partition(text):
    try:
        return parse_partition(text)
    except MalformedPartition as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _even_list(text):
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _non_negative(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _domino_json(dom, **extra):
    return {"cell": [dom.row, dom.col], "orientation": dom.orientation.value, **extra}


def cmd_imbalance(args):
    shape = args.shape
    count = sum(1 for _ in enumerate_syt(shape))
    return {"shape": str(shape), "imbalance": imbalance(shape), "syt_count": count}, True


def cmd_syt(args):
    tableaux = []
    for t in enumerate_syt(args.shape):
        word = reading_word(t)
        tableaux.append({"rows": t.rows(), "reading_word": list(word), "sign": permutation_sign(word)})
    return {"shape": str(args.shape), "count": len(tableaux), "tableaux": tableaux}, True


def cmd_dominoes(args):
    shape = args.shape
    tableaux = []
    for d in enumerate_sdt(shape):
        nv, bv = nice_and_bad_counts(d)
        tableaux.append({
            "dominoes": [_domino_json(dom, label=label) for dom, label in d.dominoes],
            "sign": sign_domino(d),
            "vertical_count": vertical_count(d),
            "nv": nv,
            "bv": bv,
        })
    total = spin_sum(shape)
    return {
        "shape": str(shape),
        "count": len(tableaux),
        "tableaux": tableaux,
        "spin_sum": {"re": total.re, "im": total.im},
    }, True


def cmd_tilings(args):
    shape = args.shape
    tilings = [
        {
            "dominoes": [_domino_json(dom) for dom in t.sorted_dominoes()],
            "vertical_count": vertical_count(t),
            "nv_minus_bv": nv_minus_bv(t),
        }
        for t in enumerate_tilings(shape)
    ]
    result = {"shape": str(shape), "count": len(tilings), "tilings": tilings}
    ok = True
    if args.flip_graph:
        graph = flip_graph(shape)
        result["flip_graph"] = graph._asdict()
        ok = graph.connected
    return result, ok


def cmd_check_prop(args):
    report = check_proposition(args.shape)
    return report.to_dict(), report.ok


def cmd_verify_theorem1(args):
    report = verify_theorem1(args.alpha, args.n)
    return report.to_dict(), report.equal


def cmd_verify_cauchy(args):
    report = verify_cauchy(args.alpha, args.beta, args.xvars, args.yvars, args.max_dominoes)
    return report.to_dict(), report.equal


def cmd_sweep(args):
    report = sweep(args.max_alpha, args.n_list, max_cells=args.max_cells, jobs=args.jobs)
    return report.to_dict(), report.ok


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "plain"), default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=_non_negative, default=argparse.SUPPRESS,
                        help="worker processes for sweeps")

    parser = _Parser(prog="skewsign", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--format", choices=("json", "csv", "plain"), default="json")
    parser.add_argument("--jobs", type=_non_negative, default=1)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def shape_cmd(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("--shape", type=_shape, required=True, help="OUTER/INNER, e.g. [3,2]/[1]")
        p.set_defaults(func=func)
        return p

    shape_cmd("imbalance", cmd_imbalance, "sign-imbalance of a skew shape")
    shape_cmd("syt", cmd_syt, "list standard Young tableaux with signs")
    shape_cmd("dominoes", cmd_dominoes, "list standard domino tableaux with statistics")
    p = shape_cmd("tilings", cmd_tilings, "list domino tilings")
    p.add_argument("--flip-graph", action="store_true", help="also check flip connectivity")
    shape_cmd("check-prop", cmd_check_prop, "check the squared imbalance against the spin sum")

    p = sub.add_parser("verify-theorem1", parents=[common], help="check the skew sign-imbalance identity")
    p.add_argument("--alpha", type=_partition, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_verify_theorem1)

    p = sub.add_parser("verify-cauchy", parents=[common], help="truncated skew domino Cauchy identity")
    p.add_argument("--alpha", type=_partition, required=True)
    p.add_argument("--beta", type=_partition, required=True)
    p.add_argument("--xvars", type=_non_negative, default=2)
    p.add_argument("--yvars", type=_non_negative, default=2)
    p.add_argument("--max-dominoes", type=_non_negative, default=2)
    p.set_defaults(func=cmd_verify_cauchy)

    p = sub.add_parser("sweep", parents=[common], help="exhaustive checks over small families")
    p.add_argument("--max-alpha", type=_non_negative, required=True)
    p.add_argument("--n-list", type=_even_list, default=[2])
    p.add_argument("--max-cells", type=_non_negative, default=None,
                   help="also check every skew shape whose outer partition has at most this many cells")
    p.set_defaults(func=cmd_sweep)
    return parser


def _flatten(prefix, value, out):
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else k, value[k], out)
    elif isinstance(value, str):
        out[prefix] = value
    else:
        out[prefix] = json.dumps(value, sort_keys=True, separators=(",", ":"))


def render(document: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(document, sort_keys=True, indent=2) + "\n"
    flat: dict = {}
    _flatten("", document, flat)
    if fmt == "plain":
        return "".join(f"{k}: {v}\n" for k, v in flat.items())
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["key", "value"])
    writer.writerows(flat.items())
    return buf.getvalue()


def _inputs(args) -> dict:
    skip = {"func", "command", "format", "jobs"}
    out = {}
    for k, v in sorted(vars(args).items()):
        if k in skip:
            continue
        out[k] = v if isinstance(v, (int, bool, list, type(None))) else str(v)
    return out


def run(argv: list[str], stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        result, ok = args.func(args)
    except SystemExit as exc:  # --help / --version
        return EXIT_OK if not exc.code else EXIT_USAGE
    except (UsageError, OddN, OddSize, NoTiling, BoundTooSmall, MalformedPartition) as exc:
        print(f"skewsign: error: {exc}", file=stderr)
        return EXIT_USAGE
    document = {
        "command": args.command,
        "inputs": _inputs(args),
        "result": result,
        "version": __version__,
    }
    stdout.write(render(document, args.format))
    return EXIT_OK if ok else EXIT_FAILED


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
