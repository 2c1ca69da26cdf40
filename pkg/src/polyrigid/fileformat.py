"""Framework files: exact JSON serialisation of frameworks and graphs.

Rationals travel as strings ("9/10", "-1", "3"); the parser additionally
accepts finite decimals ("0.9") and converts them exactly, but the
serialiser always emits reduced fractions with positive denominators, so
generate -> parse -> serialise round-trips byte for byte.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import FrameworkFileError
from .framework import Framework
from .graph import Graph
from .norm import PolytopeNorm, preset


def parse_rational(text, where=""):
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise FrameworkFileError(
            f"{where}: rational values must be strings, got {type(text).__name__} "
            "(JSON floats are not exact)"
        )
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise FrameworkFileError(f"{where}: invalid rational {text!r}: {exc}") from exc


def format_rational(value):
    return str(Fraction(value))


def _require(data, key, where):
    if key not in data:
        raise FrameworkFileError(f"{where}: missing field {key!r}")
    return data[key]


def parse_norm(spec, dim):
    if spec == "linf" or spec == "l1":
        return preset(spec, dim)
    if isinstance(spec, dict) and "faces" in spec:
        faces = [
            [parse_rational(x, f"norm.faces[{i}]") for x in face]
            for i, face in enumerate(spec["faces"])
        ]
        try:
            return PolytopeNorm(dim, faces)
        except Exception as exc:
            raise FrameworkFileError(f"norm.faces: {exc}") from exc
    raise FrameworkFileError(
        f"norm: expected 'linf', 'l1' or {{'faces': [...]}}, got {spec!r}"
    )


def parse_graph_dict(data):
    vertices = _require(data, "vertices", "graph")
    edges = _require(data, "edges", "graph")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise FrameworkFileError("vertices: expected a list of identifier strings")
    try:
        return Graph(vertices, [tuple(e) for e in edges])
    except Exception as exc:
        raise FrameworkFileError(f"edges: {exc}") from exc


def parse_framework_dict(data):
    dim = _require(data, "dim", "framework")
    if not isinstance(dim, int) or dim < 1:
        raise FrameworkFileError(f"dim: expected a positive integer, got {dim!r}")
    graph = parse_graph_dict(data)
    norm = parse_norm(_require(data, "norm", "framework"), dim)
    raw_positions = _require(data, "positions", "framework")
    positions = {}
    for v in graph.vertices:
        if v not in raw_positions:
            raise FrameworkFileError(f"positions: missing vertex {v!r}")
        coords = raw_positions[v]
        if len(coords) != dim:
            raise FrameworkFileError(
                f"positions[{v!r}]: expected {dim} coordinates, got {len(coords)}"
            )
        positions[v] = tuple(parse_rational(x, f"positions[{v!r}]") for x in coords)
    return Framework(graph, norm, positions)


def serialize_norm(norm: PolytopeNorm):
    if norm.is_linf:
        return "linf"
    dim = norm.dim
    l1_faces = set()
    from itertools import product as _product

    for signs in _product((1, -1), repeat=dim):
        l1_faces.add(tuple(Fraction(s) for s in signs))
    if set(norm.faces) == l1_faces:
        return "l1"
    return {"faces": [[format_rational(x) for x in f] for f in norm.faces]}


def serialize_framework(fw: Framework):
    return {
        "dim": fw.dim,
        "norm": serialize_norm(fw.norm),
        "vertices": list(fw.graph.vertices),
        "edges": [[v, w] for v, w in fw.graph.edges],
        "positions": {
            v: [format_rational(x) for x in fw.position(v)]
            for v in fw.graph.vertices
        },
    }


def serialize_positions(q, vertices):
    return {v: [format_rational(x) for x in q[v]] for v in vertices}


def dumps(data):
    return json.dumps(data, indent=2) + "\n"


def load_framework(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise FrameworkFileError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FrameworkFileError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return parse_framework_dict(data)


def load_graph_or_framework(path):
    """Framework if the file has positions, bare graph otherwise."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise FrameworkFileError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FrameworkFileError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    if "positions" in data:
        return parse_framework_dict(data)
    return parse_graph_dict(data)


def save(path, data):
    text = dumps(data)
    if path is None:
        print(text, end="")
    else:
        with open(path, "w") as fh:
            fh.write(text)
