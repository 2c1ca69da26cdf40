"""Independent numeric falsifier for global rigidity claims.

The search minimises the squared mismatch between target edge lengths and
those of a candidate realisation, by subgradient descent from random
starts (the norm is piecewise linear; an active face is always a valid
subgradient).  Float hits are only ever reported after exact
reconstruction: coordinates are snapped to nearby rationals, or the
affine system of the float point's colouring is solved exactly, and the
candidate survives only if its edge lengths match exactly and it fails
the congruence test.  A returned witness disproves global rigidity
outright; returning None proves nothing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .framework import Framework, edge_lengths
from .linalg import dot, solve_affine


@dataclass(frozen=True)
class SearchParams:
    """Knobs for the numeric search.

    ``tolerance`` is the relative squared-mismatch level at which a float
    iterate is handed to exact reconstruction; it can be generous, since
    only exactly verified witnesses are ever returned.
    """

    restarts: int = 200
    steps: int = 120
    tolerance: float = 1e-3
    seed: int = 0
    snap_denominator: int = 10**6


def congruence_check(fw: Framework, q) -> bool:
    """Whether q is an isometric copy of the framework's realisation.

    Isometries of a polytope norm are linear isometries plus translations,
    so it suffices to try every group element with the translation pinned
    by the first vertex.  Exact comparison throughout.
    """
    v0 = fw.graph.vertices[0]
    p = fw.positions
    qv0 = tuple(Fraction(x) for x in q[v0])
    for T in fw.norm.isometry_group():
        t = tuple(a - b for a, b in zip(qv0, T.apply(p[v0])))
        if all(
            tuple(Fraction(x) for x in q[v]) == tuple(a + b for a, b in zip(T.apply(p[v]), t))
            for v in fw.graph.vertices
        ):
            return True
    return False


def _float_norm_and_face(faces_f, delta):
    best = None
    best_face = None
    for f in faces_f:
        val = sum(a * b for a, b in zip(f, delta))
        if best is None or val > best:
            best = val
            best_face = f
    return best, best_face


def _snap_positions(q_float, vertices, v0, p0, bound):
    snapped = {v0: p0}
    for v in vertices:
        if v == v0:
            continue
        snapped[v] = tuple(
            Fraction(x).limit_denominator(bound) for x in q_float[v]
        )
    return snapped


def _exactify_via_colouring(fw, q_float, lengths):
    """Solve the affine system of the float point's apparent colouring.

    The float iterate sits near a polyhedron of exact solutions; its
    per-edge maximising faces identify the polyhedron's affine span, which
    is then solved exactly and the kernel component fitted to the float
    point (coefficients snapped to small rationals).
    """
    graph, norm, d = fw.graph, fw.norm, fw.dim
    faces_f = [tuple(float(x) for x in f) for f in norm.faces]
    v0 = graph.vertices[0]
    p0 = fw.position(v0)
    n = len(graph.vertices)

    rows = []
    rhs = []
    for ei, e in enumerate(graph.edges):
        v, w = e
        delta = [a - b for a, b in zip(q_float[v], q_float[w])]
        _, face_f = _float_norm_and_face(faces_f, delta)
        face = norm.faces[faces_f.index(face_f)]
        row = [Fraction(0)] * (d * (n - 1))
        for u, sign in ((v, 1), (w, -1)):
            if u == v0:
                continue
            col = graph.index(u)
            if col > graph.index(v0):
                col -= 1
            for i, x in enumerate(face):
                row[d * col + i] += sign * x
        adj = lengths[ei]
        if v == v0:
            adj = adj - dot(face, p0)
        elif w == v0:
            adj = adj + dot(face, p0)
        rows.append(row)
        rhs.append(adj)
    solved = solve_affine(rows, rhs)
    if solved is None:
        return None
    particular, kernel = solved

    target = []
    for v in graph.vertices:
        if v == v0:
            continue
        target.extend(q_float[v])
    resid = [t - float(x) for t, x in zip(target, particular)]
    if kernel:
        kf = [[float(x) for x in k] for k in kernel]
        coeffs = _lstsq(kf, resid)
        if coeffs is None:
            return None
        t = [Fraction(c).limit_denominator(10**4) for c in coeffs]
    else:
        t = []

    q = {v0: p0}
    idx = 0
    for v in graph.vertices:
        if v == v0:
            continue
        coords = []
        for i in range(fw.dim):
            val = particular[idx]
            for j, k in enumerate(kernel):
                val += t[j] * k[idx]
            coords.append(val)
            idx += 1
        q[v] = tuple(coords)
    return q


def _lstsq(columns_as_rows, resid):
    """Least-squares coefficients for resid ~ sum c_j * columns[j], via the
    normal equations in plain float Gaussian elimination."""
    k = len(columns_as_rows)
    ata = [[sum(a * b for a, b in zip(columns_as_rows[i], columns_as_rows[j])) for j in range(k)] for i in range(k)]
    atb = [sum(a * b for a, b in zip(columns_as_rows[i], resid)) for i in range(k)]
    aug = [row[:] + [atb[i]] for i, row in enumerate(ata)]
    for col in range(k):
        piv = max(range(col, k), key=lambda r: abs(aug[r][col]))
        if abs(aug[piv][col]) < 1e-12:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][k] for i in range(k)]


def numeric_witness_search(fw: Framework, params: SearchParams = SearchParams()):
    """Look for an equivalent, non-congruent realisation numerically.

    Multi-restart subgradient descent on the squared length mismatch; any
    float candidate below tolerance goes through exact reconstruction and
    is returned only when its edge lengths match exactly and the
    congruence test fails.  None means the budget ran out, nothing more.
    """
    graph, norm = fw.graph, fw.norm
    d = fw.dim
    if not graph.edges:
        return None
    lengths = edge_lengths(fw)
    lengths_f = [float(x) for x in lengths]
    faces_f = [tuple(float(x) for x in f) for f in norm.faces]
    v0 = graph.vertices[0]
    p0 = fw.position(v0)
    p_float = {v: [float(x) for x in fw.position(v)] for v in graph.vertices}
    others = [v for v in graph.vertices if v != v0]

    span = max(lengths_f) if lengths_f else 1.0
    span = max(span, 1e-9)
    scale2 = sum(x * x for x in lengths_f) or 1.0
    rng = random.Random(params.seed)

    def mismatch(q):
        total = 0.0
        for ei, (v, w) in enumerate(graph.edges):
            delta = [a - b for a, b in zip(q[v], q[w])]
            val, _ = _float_norm_and_face(faces_f, delta)
            total += (val - lengths_f[ei]) ** 2
        return total / scale2

    for _ in range(params.restarts):
        q = {v0: p_float[v0][:]}
        for v in others:
            q[v] = [
                p_float[v0][i] + rng.uniform(-2.5 * span, 2.5 * span)
                for i in range(d)
            ]
        for it in range(params.steps):
            grad = {v: [0.0] * d for v in others}
            total = 0.0
            for ei, (v, w) in enumerate(graph.edges):
                delta = [a - b for a, b in zip(q[v], q[w])]
                val, face = _float_norm_and_face(faces_f, delta)
                res = val - lengths_f[ei]
                total += res * res
                if v in grad:
                    gv = grad[v]
                    for i in range(d):
                        gv[i] += 2.0 * res * face[i]
                if w in grad:
                    gw = grad[w]
                    for i in range(d):
                        gw[i] -= 2.0 * res * face[i]
            if total / scale2 < params.tolerance:
                break
            step = 0.5 / (1.0 + it) ** 0.5
            for v in others:
                qv = q[v]
                gv = grad[v]
                for i in range(d):
                    qv[i] -= step * gv[i]
        if mismatch(q) >= params.tolerance:
            continue

        for candidate in (
            _snap_positions(q, graph.vertices, v0, p0, params.snap_denominator),
            _exactify_via_colouring(fw, q, lengths),
        ):
            if candidate is None:
                continue
            trial = fw.with_positions(candidate)
            if edge_lengths(trial) != lengths:
                continue
            if not congruence_check(fw, candidate):
                return candidate
    return None
