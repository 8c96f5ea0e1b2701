"""Command-line front end.

Subcommands: ``bott`` (classify one weight), ``verify`` / ``endo`` /
``ktheory`` (build a collection and report on it), ``selftest`` (run the
acceptance suite).  Exit codes: 0 success or verified, 1 mathematical failure
(a vanishing or triangularity condition is violated), 2 usage error.

Weights are passed as ``--``-terminated integer lists so negatives survive
option parsing, e.g. ``bottcheck bott A 3 -- -1 0 2``.  JSON reports are
versioned (``schema_version``) and byte-identical for identical inputs,
independent of ``--jobs``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .bott import CohomologyResult, bott_classify
from .csa import CsaLabel, split_components, tits_dimension
from .endo import endo_structure, gldim_bound, offdiagonal_nilpotent
from .ktheory import k0_decomposition
from .rootdata import is_dominant_for, root_datum
from .selftest import run_selftest
from .tilting import ExtReport, TiltingCollection, build_gsb, build_inv, build_sb, verify

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_MATH_FAILURE = 1
EXIT_USAGE = 2


class _UsageError(Exception):
    pass


def _label_json(label: CsaLabel) -> dict:
    return {
        "kind": label.kind,
        "base_degree": label.base_degree,
        "exponent": label.exponent,
        "dimension": tits_dimension(label),
        "split_components": split_components(label),
        "display": label.display(),
    }


def _result_json(res: CohomologyResult) -> dict:
    if res.singular:
        return {"singular": True}
    return {
        "singular": False,
        "degree": res.degree,
        "dominant": list(res.dominant),
        "dim": res.dim,
    }


def _collection_json(c: TiltingCollection) -> list[dict]:
    out = []
    for s in c.summands:
        out.append(
            {
                "index": s.order_index,
                "label": s.label,
                "tits": _label_json(s.tits),
                "pieces": [[list(w), m] for w, m in s.bundle.pieces],
                "scalar_mult": s.bundle.scalar_mult,
                "rank": s.bundle.rank,
            }
        )
    return out


def _report_json(c: TiltingCollection, report: ExtReport) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "family": c.family,
        "params": c.params(),
        "summands": _collection_json(c),
        "verdict": report.verdict,
        "witness": None,
        "triangular_direction": report.triangular_direction,
        "weight_counts": report.weight_counts,
        "ext_table": [
            [{str(d): dim for d, dim in sorted(cell.items())} for cell in row]
            for row in report.ext
        ],
        "hom_matrix": [list(row) for row in report.hom],
    }
    if report.witness is not None:
        i, j, degree = report.witness
        doc["witness"] = {"source": i, "target": j, "degree": degree}
    if report.is_tilting:
        structure = endo_structure(c, report)
        doc["endo"] = {
            "blocks": [_label_json(b) for b in structure.blocks],
            "block_spans": [list(span) for span in structure.block_spans],
            "triangular_direction": structure.triangular_direction,
            "offdiagonal_nilpotent": offdiagonal_nilpotent(structure),
        }
        doc["gldim_bound"] = gldim_bound(structure)
        k = k0_decomposition(c)
        doc["k0"] = {
            "factors": [_label_json(f) for f in k.factors],
            "rank_split": k.k0_rank_split,
        }
    else:
        doc["endo"] = None
        doc["gldim_bound"] = None
        doc["k0"] = None
    return doc


def _emit_json(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _matrix_text(matrix) -> str:
    cells = [[str(x) for x in row] for row in matrix]
    width = max((len(x) for row in cells for x in row), default=1)
    return "\n".join("  " + " ".join(x.rjust(width) for x in row) for row in cells)


def _parse_parabolic(arg: str | None, rank: int) -> frozenset[int]:
    if arg is None or arg.strip() == "":
        return frozenset()
    try:
        marked = frozenset(int(x) for x in arg.split(","))
    except ValueError:
        raise _UsageError(f"cannot parse parabolic {arg!r}: expected comma-separated indices")
    if not all(1 <= i <= rank for i in marked):
        raise _UsageError(f"parabolic indices {sorted(marked)} out of range 1..{rank}")
    return marked


def _cmd_bott(args) -> int:
    try:
        datum = root_datum(args.family, args.rank)
    except ValueError as exc:
        raise _UsageError(str(exc))
    weight = tuple(args.coords)
    if len(weight) != datum.rank:
        raise _UsageError(
            f"expected {datum.rank} weight coordinates for {args.family}_{args.rank}, got {len(weight)}"
        )
    if args.parabolic is not None:
        marked = _parse_parabolic(args.parabolic, datum.rank)
        if not is_dominant_for(datum, marked, weight):
            print(
                f"warning: weight {list(weight)} is not dominant for parabolic {sorted(marked)}",
                file=sys.stderr,
            )
    res = bott_classify(datum, weight)
    if args.json:
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "bott",
                "family": args.family,
                "rank": args.rank,
                "weight": list(weight),
                "result": _result_json(res),
            }
        )
    elif res.singular:
        print("Singular")
    else:
        print(f"H^{res.degree}, dim {res.dim}, dominant weight {list(res.dominant)}")
    return EXIT_OK


def _build_collection(family: str, params: list[int]) -> TiltingCollection:
    try:
        if family == "sb":
            if len(params) != 1:
                raise _UsageError("sb takes one parameter: n")
            return build_sb(params[0])
        if family == "gsb":
            if len(params) != 2:
                raise _UsageError("gsb takes two parameters: n r")
            return build_gsb(params[0], params[1])
        if len(params) != 1:
            raise _UsageError("inv takes one parameter: n")
        return build_inv(params[0])
    except ValueError as exc:
        raise _UsageError(str(exc))


def _cmd_verify(args) -> int:
    c = _build_collection(args.family, args.params)
    start = time.perf_counter()
    report = verify(c, jobs=args.jobs)
    elapsed = time.perf_counter() - start
    if args.json:
        _emit_json(_report_json(c, report))
    else:
        names = [s.label for s in c.summands]
        print(f"family {c.family} {c.params()}: {len(names)} summands")
        print("summands: " + ", ".join(names))
        print("hom matrix (rows map into columns):")
        print(_matrix_text(report.hom))
        print(f"triangular direction: {report.triangular_direction}")
        print(
            "weights classified: "
            + ", ".join(f"{k}={v}" for k, v in sorted(report.weight_counts.items()))
        )
        if report.is_tilting:
            structure = endo_structure(c, report)
            k = k0_decomposition(c)
            print(f"verdict: tilting ({elapsed:.2f}s)")
            print(f"gldim(End T) <= {gldim_bound(structure)}")
            print(f"K-theory: {k.display()}  (split K0 rank {k.k0_rank_split})")
        else:
            i, j, degree = report.witness
            print(
                f"verdict: FAILURE at Ext^{degree}({c.summands[i].label}, "
                f"{c.summands[j].label}) ({elapsed:.2f}s)"
            )
    return EXIT_OK if report.is_tilting else EXIT_MATH_FAILURE


def _cmd_endo(args) -> int:
    c = _build_collection(args.family, args.params)
    report = verify(c, jobs=args.jobs)
    if not report.is_tilting:
        i, j, degree = report.witness
        print(
            f"cannot assemble End(T): verification failed at Ext^{degree} for pair ({i}, {j})",
            file=sys.stderr,
        )
        return EXIT_MATH_FAILURE
    structure = endo_structure(c, report)
    if args.json:
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "endo",
                "family": c.family,
                "params": c.params(),
                "blocks": [_label_json(b) for b in structure.blocks],
                "block_spans": [list(span) for span in structure.block_spans],
                "hom_dims": [list(row) for row in structure.hom_dims],
                "triangular_direction": structure.triangular_direction,
                "gldim_bound": gldim_bound(structure),
                "offdiagonal_nilpotent": offdiagonal_nilpotent(structure),
            }
        )
    else:
        print("diagonal blocks: " + ", ".join(b.display() for b in structure.blocks))
        print("hom dimension matrix (rows map into columns):")
        print(_matrix_text(structure.hom_dims))
        print(f"triangular direction: {structure.triangular_direction}")
        print(f"gldim(End T) <= {gldim_bound(structure)}")
        print(f"off-diagonal nilpotent: {offdiagonal_nilpotent(structure)}")
    return EXIT_OK


def _cmd_ktheory(args) -> int:
    c = _build_collection(args.family, args.params)
    k = k0_decomposition(c)
    if args.json:
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "ktheory",
                "family": c.family,
                "params": c.params(),
                "factors": [_label_json(f) for f in k.factors],
                "rank_split": k.k0_rank_split,
            }
        )
    else:
        print(f"K_*({c.family} {c.params()}) = {k.display()}")
        print(f"split K0 rank: {k.k0_rank_split} (= {len(c.summands)} summands)")
    return EXIT_OK


def _cmd_selftest(args) -> int:
    return run_selftest(quick=args.quick)


def _add_collection_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("family", choices=["sb", "gsb", "inv"])
    sub.add_argument("params", type=int, nargs="+", help="sb: n; gsb: n r; inv: n")
    sub.add_argument("--json", action="store_true", help="emit a JSON report")
    sub.add_argument("--jobs", type=int, default=1, help="parallel pair computations")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bottcheck",
        description="Borel-Weil-Bott cohomology and tilting-sheaf verification "
        "for Severi-Brauer and involution varieties",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bott = sub.add_parser("bott", help="classify the cohomology of one weight")
    p_bott.add_argument("family", choices=["A", "D"])
    p_bott.add_argument("rank", type=int)
    p_bott.add_argument(
        "coords", type=int, nargs="*", help="fundamental coordinates (after --)"
    )
    p_bott.add_argument("--parabolic", help="comma-separated marked simple roots")
    p_bott.add_argument("--json", action="store_true")
    p_bott.set_defaults(fn=_cmd_bott)

    for name, fn, blurb in (
        ("verify", _cmd_verify, "build a collection and verify the tilting conditions"),
        ("endo", _cmd_endo, "print the endomorphism-algebra block structure"),
        ("ktheory", _cmd_ktheory, "print the K-theory decomposition"),
    ):
        p = sub.add_parser(name, help=blurb)
        _add_collection_args(p)
        p.set_defaults(fn=fn)

    p_self = sub.add_parser("selftest", help="run the acceptance suite")
    p_self.add_argument("--quick", action="store_true", help="halved ranges")
    p_self.set_defaults(fn=_cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # Split off the `--`-terminated integer tail ourselves: argparse handles a
    # bare `--` inconsistently once options are in play.
    tail: list[str] = []
    if "--" in argv:
        cut = argv.index("--")
        argv, tail = argv[:cut], argv[cut + 1 :]
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if tail:
            if args.command != "bott":
                raise _UsageError("trailing `--` arguments are only used by `bott`")
            try:
                args.coords = args.coords + [int(x) for x in tail]
            except ValueError:
                raise _UsageError(f"weight coordinates must be integers, got {tail}")
        return args.fn(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
