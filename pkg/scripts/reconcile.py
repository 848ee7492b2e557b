"""Side-by-side numbers for the places where a literal reading of the formulas fails.

    python3 scripts/reconcile.py
"""

from __future__ import annotations

from math import comb

from flowface.compositions import cry_netflow
from flowface.counts import flow_vertex_count, flow_vertex_count_signature, partition_coeffs
from flowface.facecount import cry_face_count_binomial, cry_fpoly, cry_primitive_fpoly
from flowface.genfunc import (
    face_series_from_jelinek, literal_jelinek_face_series, product_identity_sides,
)
from flowface.laurent import XINV, pi


def low_codim(n, d, top):
    c = partition_coeffs(d)
    return sum(c[i] * comb(top - i, d - i) for i in range(d + 1))


def main():
    print("sign at n=2 (only beta=(1,1) survives):")
    term = pi(2).div_xpow(2)
    print(f"  (-1)^(|a|-l(b)): {XINV + term}   (-1)^(l(a)-l(b)): {XINV - term}   "
          f"table: {cry_fpoly(2)}")

    print("product identity at n=3:")
    lhs, rhs = product_identity_sides(3, literal=True)
    print(f"  x f^(3) = {lhs}\n  (1+x)^2 prim^(3) = {rhs}")
    lhs, rhs = product_identity_sides(3)
    print(f"  (1+x)^3 prim^(2) = {rhs}  equal: {lhs == rhs}")

    print("face series from G, t^1 and t^2:")
    good, bad = face_series_from_jelinek(3), literal_jelinek_face_series(3)
    for k in (1, 2):
        print(f"  corrected {good[k]}   literal {bad[k]}   f^({k}) {cry_fpoly(k)}")

    print("vertex counts:")
    for a in (cry_netflow(4), (1, 1, 0), (1, 0, 1, 0)):
        print(f"  {a}: prefix-supply {flow_vertex_count(a)}  signature {flow_vertex_count_signature(a)}")

    print("low codimension, top binomial argument:")
    for n, d in ((4, 1), (4, 2), (5, 3), (5, 4)):
        dim = comb(n, 2) - d
        print(f"  n={n} d={d}: C(n+1,2) gives {low_codim(n, d, comb(n + 1, 2))}, "
              f"C(n,2) gives {low_codim(n, d, comb(n, 2))}, "
              f"f={cry_fpoly(n)[dim]}, prim={cry_primitive_fpoly(n)[dim]}")

    print("binomial relation at d=-1:")
    for n in (3, 5):
        print(f"  n={n}: sum {cry_face_count_binomial(n, -1)}  f_-1 {cry_fpoly(n)[-1]}")


if __name__ == "__main__":
    main()
