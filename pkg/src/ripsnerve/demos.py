"""Canned scenarios with expected-vs-computed tables."""

from __future__ import annotations

import math

from .graphs import cycle_graph, reconstruction_scan, shortest_loop_length
from .homology import PrimeField, betti_numbers
from .metric import hexagon, rips
from .nested import example_space, extract, select_nested_samples
from .report import RunReport, betti_str

HEXAGON_REGIMES = [
    (0.9, (6, 0, 0)),
    (1.2, (1, 1, 0)),
    (1.9, (1, 0, 1)),
    (2.5, (1, 0, 0)),
]

# boundary scales of the unit hexagon: the short diagonal and the diameter
HEXAGON_BOUNDARIES = [
    (math.sqrt(3), "open", (1, 1, 0)),
    (math.sqrt(3), "closed", (1, 0, 1)),
    (2.0, "open", (1, 0, 1)),
    (2.0, "closed", (1, 0, 0)),
]


def hexagon_demo(report: RunReport, F: PrimeField) -> None:
    X = hexagon()
    t = report.table("hexagon regimes", "scale", "mode", "expected", "computed", "status")
    for r, expected in HEXAGON_REGIMES:
        got = betti_numbers(rips(X, r, "open", 3), 2, F).betti
        ok = report.check(f"hexagon r={r}", got == expected)
        t.add(r, "open", betti_str(expected), betti_str(got), "PASS" if ok else "FAIL")
    t = report.table("hexagon boundary scales", "scale", "mode", "expected", "computed", "status")
    for r, mode, expected in HEXAGON_BOUNDARIES:
        got = betti_numbers(rips(X, r, mode, 3), 2, F).betti
        ok = report.check(f"hexagon r={r} {mode}", got == expected)
        t.add(r, mode, betti_str(expected), betti_str(got), "PASS" if ok else "FAIL")


CIRCLE_SCALES = [0.3, 0.5, 0.7, 0.9, 1.0, 1.15, 1.3]


def circle_demo(report: RunReport, F: PrimeField, delta: float = 0.05) -> None:
    G = cycle_graph(3.0)
    ell = shortest_loop_length(G)
    report.note("circumference", ell)
    report.note("threshold", ell / 3)
    report.note("delta", delta)
    rows = reconstruction_scan(G, delta, CIRCLE_SCALES, "open", F)
    t = report.table("circle scan", "scale", "b_0", "b_1", "matches", "predicted", "status")
    first_fail = None
    for row in rows:
        predicted = row.scale <= ell / 3
        ok = report.check(f"circle r={row.scale}", row.matches == predicted)
        if not row.matches and first_fail is None:
            first_fail = row.scale
        t.add(row.scale, row.betti[0], row.betti[1], row.matches, predicted, "PASS" if ok else "FAIL")
    report.note("first_mismatch", first_fail)


def gapped_circle_demo(report: RunReport, F: PrimeField, seed: int = 0) -> None:
    eps, D, n, R, eps1, eps2 = 0.05, 4.0, 10, 1.2, 0.3, 0.15
    X = example_space(eps, D, n)
    pair = select_nested_samples(X, R, eps1, eps2, seed=seed)
    for key, value in [("gap", eps), ("diameter", D), ("density", n), ("scale", R),
                       ("eps1", eps1), ("eps2", eps2), ("points", X.n),
                       ("net_sizes", (len(pair.idx1), len(pair.idx2)))]:
        report.note(key, value)
    t = report.table("extracted ranks", "degree", "expected", "computed", "status")
    for k, expected in [(0, 1), (1, 1)]:
        got = extract(pair, k, F).rank
        ok = report.check(f"gapped circle H_{k}", got == expected)
        t.add(k, expected, got, "PASS" if ok else "FAIL")


DEMOS = {"hexagon": hexagon_demo, "circle": circle_demo, "example61": gapped_circle_demo}
