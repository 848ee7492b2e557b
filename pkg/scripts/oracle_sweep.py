"""Brute-force every binary netflow up to a length and compare with the formulas.

    python3 scripts/oracle_sweep.py --max-n 5 --jobs 2
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from flowface.compositions import binary_netflows
from flowface.counts import flow_vertex_count, flow_vertex_count_signature
from flowface.facecount import FVector, fpoly_main, primitive_fpoly
from flowface.oracle import betti_profiles, _profile_to_fvector


@dataclass
class SweepConfig:
    max_n: int = 5
    jobs: int = 1


def sweep(cfg: SweepConfig) -> int:
    bad = 0
    for n in range(1, cfg.max_n + 1):
        start = time.perf_counter()
        for a in binary_netflows(n):
            full, prim = betti_profiles(a, cap=cfg.max_n, jobs=cfg.jobs)
            f_ok = _profile_to_fvector(full, 1) == FVector.from_poly(fpoly_main(a))
            p_ok = _profile_to_fvector(prim, 0) == FVector.from_poly(primitive_fpoly(a))
            vertices = full[0]
            v_ok = vertices == flow_vertex_count(a)
            sig = flow_vertex_count_signature(a)
            status = "ok" if f_ok and p_ok and v_ok else "MISMATCH"
            bad += status != "ok"
            print(f"{''.join(map(str, a)):>8}  f={'ok' if f_ok else 'no'}  "
                  f"prim={'ok' if p_ok else 'no'}  vertices={vertices}  "
                  f"signature-form={sig}{'' if sig == vertices else ' (differs)'}  {status}")
        print(f"# n={n}: {time.perf_counter() - start:.2f}s")
    return bad


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--jobs", type=int, default=1)
    args = p.parse_args()
    bad = sweep(SweepConfig(args.max_n, args.jobs))
    print(f"# mismatches: {bad}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
