"""Regenerate both CRY f-vector tables and time each engine.

    python3 scripts/reproduce_tables.py --max-n 8 --format tex
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from flowface.cli import emit_fvectors
from flowface.compositions import cry_netflow
from flowface.facecount import FVector, cry_fpoly, cry_primitive_fpoly, fpoly_main, primitive_fpoly


@dataclass
class TableConfig:
    max_n: int = 8
    fmt: str = "plain"


def build(cfg: TableConfig):
    engines = {
        "f (refinement sum)": lambda n: fpoly_main(cry_netflow(n)),
        "f (homogeneous sum)": cry_fpoly,
        "primitive (P_alpha)": lambda n: primitive_fpoly(cry_netflow(n)),
        "primitive (homogeneous sum)": cry_primitive_fpoly,
    }
    out = {}
    for name, engine in engines.items():
        start = time.perf_counter()
        rows = [({"n": n}, FVector.from_poly(engine(n))) for n in range(1, cfg.max_n + 1)]
        out[name] = (rows, time.perf_counter() - start)
    return out


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--format", default="plain", choices=("plain", "csv", "tex", "json"))
    args = p.parse_args()
    cfg = TableConfig(args.max_n, args.format)
    results = build(cfg)
    names = list(results)
    assert results[names[0]][0] == results[names[1]][0], "f engines disagree"
    assert results[names[2]][0] == results[names[3]][0], "primitive engines disagree"
    for name in (names[1], names[3]):
        print(f"# {name}")
        print(emit_fvectors(cfg.fmt, results[name][0]), end="")
    for name, (_, secs) in results.items():
        print(f"# {name}: {secs:.3f}s")


if __name__ == "__main__":
    main()
