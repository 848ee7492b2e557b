"""Command-line interface.

Examples::

    flowface fvector --netflow 1,0,0,1
    flowface cry --n 4 --format json
    flowface oracle --netflow 1,0,0 --verify
    flowface table --max-n 8 --which primitive --format csv

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.
Results go to stdout, notices to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import counts, facecount, fishburn, genfunc, oracle
from .compositions import binary_netflows, cry_netflow, netflow
from .facecount import FVector
from .laurent import LaurentPoly, TruncatedSeries

FORMATS = ("json", "csv", "tex", "dot", "plain")


class UsageError(Exception):
    pass


# -- serialisation -----------------------------------------------------------

def fvector_json(fv: FVector) -> dict[str, int]:
    return {str(d): v for d, v in fv.as_dict().items()}


def _tuple_text(values: Sequence[int]) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def emit_fvectors(fmt: str, rows: Sequence[tuple[dict, FVector]], title: str = "f-vector") -> str:
    """Serialise labelled f-vectors. Each label dict carries ``n`` and optional extras."""
    if fmt == "json":
        objs = [{**label, "fvector": fvector_json(fv)} for label, fv in rows]
        payload = objs[0] if len(objs) == 1 else objs
        return json.dumps(payload, separators=(",", ":")) + "\n"
    if fmt == "csv":
        return "".join(",".join(str(v) for v in (label["n"], *fv.entries)) + "\n"
                       for label, fv in rows)
    if fmt == "plain":
        return "".join(f"n={label['n']}: {_tuple_text(fv.entries)}\n" for label, fv in rows)
    if fmt == "tex":
        lines = [r"\begin{tabular}{c p{15cm}}", r"\hline",
                 rf"$n$ & {title}\\", r"\hline"]
        lines += [rf"${label['n']}$ & ${_tuple_text(fv.entries)}$\\" for label, fv in rows]
        lines += [r"\hline", r"\end{tabular}"]
        return "\n".join(lines) + "\n"
    raise UsageError(f"format {fmt!r} is not available for f-vectors")


def parse_fvector_csv(text: str) -> list[tuple[int, FVector]]:
    out = []
    for line in text.strip().splitlines():
        n, *entries = (int(v) for v in line.split(","))
        out.append((n, FVector(tuple(entries))))
    return out


def _poly_json(p: LaurentPoly) -> dict[str, int]:
    return {str(e): v for e, v in p.items()}


def emit_series(fmt: str, series: TruncatedSeries, which: str) -> str:
    if fmt == "json":
        payload = {"which": which, "order": series.order,
                   "coefficients": {str(k): _poly_json(c) for k, c in enumerate(series.coeffs)}}
        return json.dumps(payload, separators=(",", ":")) + "\n"
    if fmt == "csv":
        return "".join(f"{k},{e},{v}\n" for k, c in enumerate(series.coeffs) for e, v in c.items())
    if fmt == "plain":
        return "".join(f"t^{k}: {_poly_text(c)}\n" for k, c in enumerate(series.coeffs))
    raise UsageError(f"format {fmt!r} is not available for series")


def _poly_text(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for e, v in p.items():
        parts.append(f"{v}" if e == 0 else f"{v}*x" if e == 1 else f"{v}*x^{e}")
    return " + ".join(parts)


def emit_matrices(fmt: str, matrices: Sequence[fishburn.FishburnMatrix]) -> str:
    if fmt == "json":
        return fishburn.matrices_to_json(matrices) + "\n"
    if fmt == "plain":
        blocks = ["\n".join(" ".join(str(v) for v in r) for r in M.rows) for M in matrices]
        return "\n\n".join(blocks) + "\n"
    raise UsageError(f"format {fmt!r} is not available for matrices")


def emit_graphs(fmt: str, graphs: Sequence[oracle.Subgraph]) -> str:
    if fmt == "dot":
        return oracle.family_to_dot(graphs)
    if fmt == "json":
        return json.dumps([[list(e) for e in H.edge_set()] for H in graphs],
                          separators=(",", ":")) + "\n"
    if fmt == "plain":
        return "".join(" ".join(f"{i}{j}" for i, j in H.edge_set()) + "\n" for H in graphs)
    raise UsageError(f"format {fmt!r} is not available for graphs")


def emit_record(fmt: str, record: dict) -> str:
    if fmt == "json":
        return json.dumps(record, separators=(",", ":")) + "\n"
    if fmt == "csv":
        return ",".join(str(v) for v in record.values()) + "\n"
    if fmt == "plain":
        return " ".join(f"{k}={v}" for k, v in record.items()) + "\n"
    raise UsageError(f"format {fmt!r} is not available here")


def emit(fmt: str, payload, n: int | None = None, which: str = "F") -> str:
    """Serialise any supported payload.

    A bare FVector in JSON is its dimension map; CSV, TeX and plain rows need ``n``.
    Lists of ``(n, FVector)`` pairs are tables.
    """
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r}")
    if isinstance(payload, FVector):
        if fmt == "json":
            return json.dumps(fvector_json(payload), separators=(",", ":")) + "\n"
        if n is None:
            raise UsageError(f"format {fmt!r} needs n for an f-vector row")
        return emit_fvectors(fmt, [({"n": n}, payload)])
    if isinstance(payload, TruncatedSeries):
        return emit_series(fmt, payload, which)
    if isinstance(payload, oracle.Subgraph):
        payload = [payload]
    if isinstance(payload, Sequence) and payload:
        head = payload[0]
        if isinstance(head, fishburn.FishburnMatrix):
            return emit_matrices(fmt, payload)
        if isinstance(head, oracle.Subgraph):
            return emit_graphs(fmt, payload)
        if isinstance(head, tuple) and len(head) == 2 and isinstance(head[1], FVector):
            return emit_fvectors(fmt, [({"n": k}, fv) for k, fv in payload])
    raise UsageError(f"cannot emit {type(payload).__name__} as {fmt!r}")


# -- argument handling -----------------------------------------------------

def parse_netflow(text: str, strict: bool, err: TextIO) -> tuple[int, ...]:
    try:
        raw = tuple(int(v) for v in text.replace(" ", "").split(",") if v != "")
    except ValueError:
        raise UsageError(f"cannot parse netflow {text!r}") from None
    try:
        a = netflow(raw, strict=strict)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if a != raw:
        print(f"note: netflow {raw} replaced by its support {a}", file=err)
    return a


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="flowface",
                                description="Face numbers of flow polytopes of complete graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, netflow_arg=False, default_fmt="plain"):
        sp.add_argument("--format", choices=FORMATS, default=default_fmt)
        if netflow_arg:
            sp.add_argument("--netflow", required=True, help="comma separated, e.g. 1,0,0,1")
            sp.add_argument("--strict", action="store_true", help="reject non 0/1 entries")

    sp = sub.add_parser("fvector", help="f-vector from the main formula")
    add_common(sp, netflow_arg=True)
    sp = sub.add_parser("primitive", help="primitive f-vector")
    add_common(sp, netflow_arg=True)

    sp = sub.add_parser("cry", help="f-vector (or primitive f-vector) of CRY_n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--primitive", action="store_true")
    add_common(sp)

    sp = sub.add_parser("oracle", help="brute-force enumeration over subgraphs")
    sp.add_argument("--netflow", help="comma separated netflow")
    sp.add_argument("--strict", action="store_true")
    sp.add_argument("--all-n", type=int, metavar="K",
                    help="run every binary netflow of length 1..K")
    sp.add_argument("--verify", action="store_true", help="compare with the formulas")
    sp.add_argument("--primitive", action="store_true", help="only primitive subgraphs")
    sp.add_argument("--betti", type=int, help="with --format dot: only this Betti number")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--max-n", type=int, default=None, help="enumeration cap override")
    sp.add_argument("--format", choices=FORMATS, default="plain")

    sp = sub.add_parser("vertices", help="vertex count of Flow_n(a)")
    add_common(sp, netflow_arg=True)
    sp.add_argument("--tuples", action="store_true", help="list interval tuples (enumerates)")
    sp.add_argument("--verify", action="store_true", help="compare with enumeration")
    sp.add_argument("--max-n", type=int, default=None)

    sp = sub.add_parser("codim", help="CRY_n faces of codimension d")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    add_common(sp)

    sp = sub.add_parser("series", help="generating function coefficients")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--which", choices=("F", "G"), default="F")
    add_common(sp)

    sp = sub.add_parser("fishburn", help="primitive Fishburn matrices of size n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--list", action="store_true")
    sp.add_argument("--max-n", type=int, default=None)
    add_common(sp)

    sp = sub.add_parser("table", help="f-vectors (or primitive) of CRY_1..CRY_max-n")
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--which", choices=("f", "primitive"), default="f")
    add_common(sp)
    return p


def _oracle_one(a, args, out: TextIO, err: TextIO) -> int:
    n = len(a)
    if args.format == "dot" or (args.format == "json" and args.betti is not None):
        graphs = list(oracle.valid_subgraphs(a, primitive=args.primitive,
                                             betti_number=args.betti, cap=args.max_n))
        out.write(emit_graphs(args.format, graphs))
        return 0
    full, prim = oracle.betti_profiles(a, cap=args.max_n, jobs=args.jobs)
    f = oracle._profile_to_fvector(full, 1)
    fp = oracle._profile_to_fvector(prim, 0)
    shown = fp if args.primitive else f
    out.write(emit_fvectors(args.format, [({"n": n, "netflow": list(a)}, shown)]))
    if args.verify:
        ok = (f.to_poly() == facecount.fpoly_main(a)
              and fp.to_poly() == facecount.primitive_fpoly(a))
        print(f"verify {','.join(map(str, a))}: {'ok' if ok else 'MISMATCH'}", file=err)
        return 0 if ok else 1
    return 0


def run(argv: Sequence[str] | None = None, out: TextIO | None = None,
        err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args, out, err)
    except (UsageError, oracle.OracleCapError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return 2


def _dispatch(args, out: TextIO, err: TextIO) -> int:
    fmt = args.format
    cmd = args.command

    if cmd in ("fvector", "primitive"):
        a = parse_netflow(args.netflow, args.strict, err)
        poly = facecount.fpoly_main(a) if cmd == "fvector" else facecount.primitive_fpoly(a)
        out.write(emit_fvectors(fmt, [({"n": len(a), "netflow": list(a)}, FVector.from_poly(poly))]))
        return 0

    if cmd == "cry":
        if args.n < 1:
            raise UsageError("--n must be >= 1")
        poly = facecount.cry_primitive_fpoly(args.n) if args.primitive else facecount.cry_fpoly(args.n)
        out.write(emit_fvectors(fmt, [({"n": args.n}, FVector.from_poly(poly))]))
        return 0

    if cmd == "table":
        if args.max_n < 1:
            raise UsageError("--max-n must be >= 1")
        engine = facecount.cry_fpoly if args.which == "f" else facecount.cry_primitive_fpoly
        rows = [({"n": n}, FVector.from_poly(engine(n))) for n in range(1, args.max_n + 1)]
        title = r"$f$-vector of $CRY_n$" if args.which == "f" else r"$\widetilde{f}$ of $CRY_n$"
        out.write(emit_fvectors(fmt, rows, title))
        return 0

    if cmd == "oracle":
        if args.all_n is not None:
            status = 0
            for n in range(1, args.all_n + 1):
                for a in binary_netflows(n):
                    status = max(status, _oracle_one(a, args, out, err))
            return status
        if args.netflow is None:
            raise UsageError("oracle needs --netflow or --all-n")
        return _oracle_one(parse_netflow(args.netflow, args.strict, err), args, out, err)

    if cmd == "vertices":
        a = parse_netflow(args.netflow, args.strict, err)
        count = counts.flow_vertex_count(a)
        if args.tuples:
            tuples = sorted(oracle.vertex_tuples(a, cap=args.max_n))
            if fmt == "json":
                out.write(json.dumps({"netflow": list(a), "vertices": count,
                                      "tuples": [list(t) for t in tuples]},
                                     separators=(",", ":")) + "\n")
            else:
                out.write("".join(",".join(map(str, t)) + "\n" for t in tuples))
        else:
            out.write(emit_record(fmt, {"netflow": ",".join(map(str, a)) if fmt != "json" else list(a),
                                        "vertices": count}))
        if args.verify:
            full, _ = oracle.betti_profiles(a, cap=args.max_n)
            ok = full.get(0, 0) == count
            print(f"verify vertices {','.join(map(str, a))}: {'ok' if ok else 'MISMATCH'}", file=err)
            return 0 if ok else 1
        return 0

    if cmd == "codim":
        n, d = args.n, args.d
        value = counts.low_codim_face_count(n, d)
        out.write(emit_record(fmt, {"n": n, "d": d, "dim": n * (n - 1) // 2 - d, "count": value}))
        return 0

    if cmd == "series":
        if args.order < 0:
            raise UsageError("--order must be >= 0")
        if args.which == "F":
            series = genfunc.cry_face_series(args.order)
        else:
            series = genfunc.jelinek_series(genfunc.SeriesRequest(args.order))
        out.write(emit_series(fmt, series, args.which))
        return 0

    if cmd == "fishburn":
        n = args.n
        if n < 1:
            raise UsageError("--n must be >= 1")
        graphs = list(oracle.valid_subgraphs(cry_netflow(n), primitive=True, cap=args.max_n))
        if args.list:
            if fmt == "dot":
                out.write(emit_graphs(fmt, graphs))
            else:
                out.write(emit_matrices(fmt, [fishburn.graph_to_matrix(H) for H in graphs]))
            return 0
        by_ones: dict[int, int] = {}
        for H in graphs:
            b = len(H) - n
            by_ones[b] = by_ones.get(b, 0) + 1
        record = {"n": n, "count": len(graphs)}
        if fmt == "json":
            record["by_betti"] = {str(k): by_ones[k] for k in sorted(by_ones)}
        out.write(emit_record(fmt, record))
        return 0

    raise UsageError(f"unknown command {cmd}")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
