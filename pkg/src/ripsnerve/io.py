"""Plain-text file formats.

complex   one simplex per line, space-separated vertex ids; faces implied
points    one point per line, comma-separated coordinates
dist      header ``dist n`` then n comma-separated rows
relation  dense: header ``rows cols`` then rows of 0/1 separated by commas;
          sparse: lines ``r c``
cover     JSON ``{"universe_size": n, "members": [[...], ...]}``
graph     lines ``u v length``, vertex ids 0-based

Lines starting with ``#`` and blank lines are ignored everywhere.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterator

import numpy as np

from .complex import SimplicialComplex
from .covers import Cover
from .graphs import MetricGraph
from .metric import FiniteMetric, MetricError
from .relations import BinaryRelation


class ParseError(ValueError):
    def __init__(self, source: str, line: int, message: str, text: str = ""):
        self.source, self.line, self.text = source, line, text
        where = f"{source}:{line}" if line else source
        detail = f": {text!r}" if text else ""
        super().__init__(f"{where}: {message}{detail}")


def _lines(text: str) -> Iterator[tuple[int, str]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line


def _read(path: str | Path) -> str:
    return Path(path).read_text()


# --- complexes ----------------------------------------------------------

def parse_complex(text: str, source: str = "<complex>", max_dim: int | None = None) -> SimplicialComplex:
    facets = []
    for no, line in _lines(text):
        try:
            vs = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(source, no, "expected space-separated vertex ids", line) from None
        if any(v < 0 for v in vs):
            raise ParseError(source, no, "vertex ids must be non-negative", line)
        if len(set(vs)) != len(vs):
            raise ParseError(source, no, "repeated vertex in simplex", line)
        facets.append(vs)
    return SimplicialComplex.from_simplices(facets, max_dim=max_dim)


def read_complex(path: str | Path, max_dim: int | None = None) -> SimplicialComplex:
    return parse_complex(_read(path), str(path), max_dim)


def format_complex(c: SimplicialComplex, facets_only: bool = True) -> str:
    simplices = c.facets() if facets_only else list(c)
    return "".join(" ".join(map(str, s)) + "\n" for s in simplices)


# --- metrics ------------------------------------------------------------

def parse_metric(text: str, source: str = "<points>", validate: bool = True) -> FiniteMetric:
    """Point cloud or ``dist n`` matrix, whichever the first data line announces."""
    lines = list(_lines(text))
    if not lines:
        raise ParseError(source, 0, "no data")
    first_no, first = lines[0]
    if first.split()[0].lower() == "dist":
        X = _parse_dist(lines, source)
    else:
        X = _parse_points(lines, source)
    if validate:
        try:
            X.validate()
        except MetricError as exc:
            raise ParseError(source, 0, f"not a metric: {exc}") from None
    return X


def _floats(no: int, line: str, source: str) -> list[float]:
    try:
        return [float(tok) for tok in line.split(",")]
    except ValueError:
        raise ParseError(source, no, "expected comma-separated numbers", line) from None


def _parse_points(lines: list[tuple[int, str]], source: str) -> FiniteMetric:
    pts = []
    for no, line in lines:
        row = _floats(no, line, source)
        if pts and len(row) != len(pts[0]):
            raise ParseError(source, no, f"expected {len(pts[0])} coordinates, got {len(row)}", line)
        if not all(np.isfinite(row)):
            raise ParseError(source, no, "non-finite coordinate", line)
        pts.append(row)
    return FiniteMetric.from_points(pts)


def _parse_dist(lines: list[tuple[int, str]], source: str) -> FiniteMetric:
    no, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not parts[1].isdigit():
        raise ParseError(source, no, "header must read 'dist n'", header)
    n = int(parts[1])
    body = lines[1:]
    if len(body) != n:
        raise ParseError(source, no, f"header announces {n} rows, found {len(body)}")
    rows = []
    for no, line in body:
        row = _floats(no, line, source)
        if len(row) != n:
            raise ParseError(source, no, f"expected {n} entries, got {len(row)}", line)
        rows.append(row)
    return FiniteMetric(np.array(rows, dtype=float).reshape(n, n))


def read_metric(path: str | Path, validate: bool = True) -> FiniteMetric:
    return parse_metric(_read(path), str(path), validate)


def format_points(points) -> str:
    return "".join(",".join(repr(float(x)) for x in row) + "\n" for row in np.atleast_2d(points))


def format_distances(X: FiniteMetric) -> str:
    rows = "".join(",".join(repr(float(x)) for x in row) + "\n" for row in X.d)
    return f"dist {X.n}\n" + rows


# --- relations ----------------------------------------------------------

def parse_relation(text: str, source: str = "<relation>") -> BinaryRelation:
    lines = list(_lines(text))
    if not lines:
        raise ParseError(source, 0, "no data")
    if _looks_dense(lines):
        return _parse_dense(lines, source)
    return _parse_sparse(lines, source)


def _looks_dense(lines: list[tuple[int, str]]) -> bool:
    head = lines[0][1].split()
    if len(head) != 2 or not all(t.isdigit() for t in head):
        return False
    rows, cols = map(int, head)
    body = lines[1:]
    if any("," in line for _, line in body):
        return True
    return len(body) == rows and cols == 1 and all(line in ("0", "1") for _, line in body)


def _parse_dense(lines: list[tuple[int, str]], source: str) -> BinaryRelation:
    no, head = lines[0]
    rows, cols = map(int, head.split())
    body = lines[1:]
    if len(body) != rows:
        raise ParseError(source, no, f"header announces {rows} rows, found {len(body)}")
    pairs = []
    for r, (no, line) in enumerate(body):
        toks = [t.strip() for t in line.split(",")]
        if len(toks) != cols:
            raise ParseError(source, no, f"expected {cols} entries, got {len(toks)}", line)
        for c, t in enumerate(toks):
            if t not in ("0", "1"):
                raise ParseError(source, no, "entries must be 0 or 1", line)
            if t == "1":
                pairs.append((r, c))
    return BinaryRelation.from_pairs(rows, cols, pairs)


def _parse_sparse(lines: list[tuple[int, str]], source: str) -> BinaryRelation:
    pairs = []
    for no, line in lines:
        toks = line.split()
        if len(toks) != 2 or not all(t.isdigit() for t in toks):
            raise ParseError(source, no, "expected 'row col'", line)
        pairs.append((int(toks[0]), int(toks[1])))
    n_rows = 1 + max((r for r, _ in pairs), default=-1)
    n_cols = 1 + max((c for _, c in pairs), default=-1)
    return BinaryRelation.from_pairs(n_rows, n_cols, pairs)


def read_relation(path: str | Path) -> BinaryRelation:
    return parse_relation(_read(path), str(path))


def format_relation_dense(R: BinaryRelation) -> str:
    m = R.to_dense()
    return f"{R.n_rows} {R.n_cols}\n" + "".join(",".join(map(str, row)) + "\n" for row in m)


def format_relation_sparse(R: BinaryRelation) -> str:
    return "".join(f"{r} {c}\n" for r, c in sorted(R.incidences))


# --- covers -------------------------------------------------------------

def parse_cover(text: str, source: str = "<cover>") -> Cover:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(source, exc.lineno, exc.msg) from None
    if isinstance(doc, list):
        members, size = doc, None
    elif isinstance(doc, dict) and "members" in doc:
        members, size = doc["members"], doc.get("universe_size")
    else:
        raise ParseError(source, 0, "expected an array of arrays or an object with 'members'")
    if not isinstance(members, list) or not all(isinstance(m, list) for m in members):
        raise ParseError(source, 0, "members must be arrays of point indices")
    if not all(isinstance(x, int) and x >= 0 for m in members for x in m):
        raise ParseError(source, 0, "point indices must be non-negative integers")
    if size is None:
        size = 1 + max((x for m in members for x in m), default=-1)
    try:
        return Cover.of(size, members)
    except ValueError as exc:
        raise ParseError(source, 0, str(exc)) from None


def read_cover(path: str | Path) -> Cover:
    return parse_cover(_read(path), str(path))


def format_cover(U: Cover) -> str:
    doc = {"universe_size": U.universe_size, "members": [sorted(m) for m in U.members]}
    return json.dumps(doc) + "\n"


# --- metric graphs ------------------------------------------------------

def parse_graph(text: str, source: str = "<graph>") -> MetricGraph:
    edges = []
    for no, line in _lines(text):
        toks = line.split()
        if len(toks) != 3:
            raise ParseError(source, no, "expected 'u v length'", line)
        try:
            u, v, w = int(toks[0]), int(toks[1]), float(toks[2])
        except ValueError:
            raise ParseError(source, no, "expected 'u v length'", line) from None
        if u < 0 or v < 0:
            raise ParseError(source, no, "vertex ids must be non-negative", line)
        if not w > 0:
            raise ParseError(source, no, "edge length must be positive", line)
        edges.append((u, v, w))
    if not edges:
        raise ParseError(source, 0, "no edges")
    try:
        return MetricGraph.of(edges)
    except ValueError as exc:
        raise ParseError(source, 0, str(exc)) from None


def read_graph(path: str | Path) -> MetricGraph:
    return parse_graph(_read(path), str(path))


def format_graph(G: MetricGraph) -> str:
    return "".join(f"{u} {v} {w!r}\n" for u, v, w in G.edges)
