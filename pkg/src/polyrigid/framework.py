"""Bar-joint frameworks in a polytope norm and their colouring matrices.

A framework couples a graph with an exact rational position for every
vertex.  Each edge of a well-positioned framework selects exactly one face
normal of the norm (the unique face active on the endpoint difference);
that assignment is the framework's directed colouring, and the matrix it
induces is the Jacobian of the edge-length map.  Rigidity then becomes a
rank question over the rationals.

Sign convention: the row of edge vw (v before w in the vertex order)
carries the face vector on v's coordinate block and its negation on w's.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotWellPositionedError, ParameterError
from .graph import Graph, connected_components
from .linalg import mat_rank
from .norm import PolytopeNorm, as_vector


class Framework:
    """Graph plus exact rational realisation under a polytope norm."""

    __slots__ = ("graph", "norm", "positions")

    def __init__(self, graph: Graph, norm: PolytopeNorm, positions):
        pos = {}
        for v in graph.vertices:
            if v not in positions:
                raise ParameterError(f"missing position for vertex {v!r}")
            pos[v] = as_vector(positions[v], norm.dim)
        self.graph = graph
        self.norm = norm
        self.positions = pos

    @property
    def dim(self):
        return self.norm.dim

    def position(self, v):
        return self.positions[v]

    def edge_vector(self, edge):
        """p(v) - p(w) for the edge vw with v first in canonical order."""
        v, w = edge
        pv, pw = self.positions[v], self.positions[w]
        return tuple(a - b for a, b in zip(pv, pw))

    def with_positions(self, positions):
        return Framework(self.graph, self.norm, positions)

    def with_graph(self, graph):
        return Framework(graph, self.norm, self.positions)

    def __repr__(self):
        return f"Framework({self.graph!r}, dim={self.dim})"


def zero_vector(dim):
    return tuple([Fraction(0)] * dim)


def edge_lengths(fw: Framework):
    """Norm of every edge vector, in canonical edge order."""
    return tuple(fw.norm.value(fw.edge_vector(e)) for e in fw.graph.edges)


def induced_colourings(fw: Framework):
    """Per-edge candidate faces, kept factored.

    Every combination (one face per edge) is a colouring consistent with
    the realisation; the full set can be exponentially large, so it is
    never expanded here.  A zero-length edge contributes the zero vector
    as its only candidate.
    """
    zero = zero_vector(fw.dim)
    out = []
    for e in fw.graph.edges:
        vec = fw.edge_vector(e)
        if all(x == 0 for x in vec):
            out.append((zero,))
        else:
            out.append(fw.norm.active_faces(vec))
    return out


def is_well_positioned(fw: Framework):
    """Every edge vector is nonzero and has a unique active face."""
    zero = zero_vector(fw.dim)
    for candidates in induced_colourings(fw):
        if len(candidates) != 1 or candidates[0] == zero:
            return False
    return True


def induced_colouring(fw: Framework):
    """The unique directed colouring of a well-positioned framework."""
    candidates = induced_colourings(fw)
    zero = zero_vector(fw.dim)
    phi = []
    for cand in candidates:
        if len(cand) != 1 or cand[0] == zero:
            raise NotWellPositionedError("framework is not well-positioned")
        phi.append(cand[0])
    return tuple(phi)


def colouring_matrix(graph: Graph, phi, dim):
    """The |E| x d|V| matrix of a directed colouring.

    Row of edge vw: phi(e) on v's block, -phi(e) on w's block; columns run
    through vertices in canonical order, d coordinates per vertex.
    """
    if len(phi) != len(graph.edges):
        raise ParameterError("colouring does not match the edge list")
    n = len(graph.vertices)
    rows = []
    for e, face in zip(graph.edges, phi):
        if len(face) != dim:
            raise ParameterError("face vector has wrong dimension")
        vi, wi = graph.index(e[0]), graph.index(e[1])
        row = [Fraction(0)] * (dim * n)
        for i, x in enumerate(face):
            row[dim * vi + i] = x
            row[dim * wi + i] = -x
        rows.append(row)
    return rows


def rank_exact(matrix):
    """Rank over the rationals (fraction-free elimination)."""
    return mat_rank(matrix)


def rigidity_matrix(fw: Framework):
    """Colouring matrix of the induced colouring (the Jacobian of the
    length map at a well-positioned realisation)."""
    return colouring_matrix(fw.graph, induced_colouring(fw), fw.dim)


def is_infinitesimally_rigid(fw: Framework):
    """Rank of the induced colouring matrix reaches d|V| - d.

    Requires a well-positioned framework; the count d|V| - d is full rank
    once the translation kernel is accounted for.
    """
    n = len(fw.graph.vertices)
    d = fw.dim
    return rank_exact(rigidity_matrix(fw)) == d * n - d


def is_redundantly_rigid(fw: Framework):
    """Still infinitesimally rigid after deleting any single edge.

    Deleting edge e removes one row of the matrix; the framework is
    redundantly rigid when every such row removal keeps rank d|V| - d.
    """
    rows = rigidity_matrix(fw)
    n = len(fw.graph.vertices)
    d = fw.dim
    target = d * n - d
    if len(rows) == 0:
        return target == 0
    for skip in range(len(rows)):
        reduced = rows[:skip] + rows[skip + 1:]
        if rank_exact(reduced) != target:
            return False
    return True


def _axis_of(face):
    nonzero = [(i, x) for i, x in enumerate(face) if x != 0]
    if len(nonzero) == 1 and abs(nonzero[0][1]) == 1:
        return nonzero[0][0]
    return None


def monochromatic_subgraphs(graph: Graph, phi):
    """Split the edges by the coordinate axis of their face vector.

    Only meaningful when every face is a signed standard basis vector
    (the hypercube-ball norm); returns one spanning subgraph per
    coordinate, together partitioning the edge set.
    """
    if not phi:
        raise ParameterError("empty colouring: dimension is undetermined")
    dim = len(phi[0])
    buckets = [[] for _ in range(dim)]
    for e, face in zip(graph.edges, phi):
        axis = _axis_of(face)
        if axis is None:
            raise ParameterError(
                f"face {face} is not a signed standard basis vector (zero entries "
                "and general polytope faces have no colour class)"
            )
        buckets[axis].append(e)
    return [graph.subgraph_on_edges(b) for b in buckets]


def is_rigid_linf_by_colour(fw: Framework):
    """Connectivity test for rigidity under the hypercube-ball norm.

    A well-positioned framework in that norm is infinitesimally rigid
    exactly when every colour class spans a connected subgraph on the
    full vertex set.
    """
    if not fw.norm.is_linf:
        raise ParameterError("colour-class rigidity test needs the linf preset norm")
    phi = induced_colouring(fw)
    return all(
        len(connected_components(sub)) == 1
        for sub in monochromatic_subgraphs(fw.graph, phi)
    )


def is_rigid_all_induced_colourings(fw: Framework, budget=100_000):
    """Advisory sufficient test for rigidity without well-positionedness.

    True when every colouring compatible with the realisation (the full
    product of per-edge candidates, zero faces included for zero-length
    edges) has matrix rank d|V| - d.  A True result proves rigidity; a
    False result proves nothing, since the criterion is sufficient only.
    Budget-guarded: the candidate product can be exponential.
    """
    from itertools import product
    from .errors import BudgetExceededError

    candidates = induced_colourings(fw)
    total = 1
    for c in candidates:
        total *= len(c)
        if total > budget:
            raise BudgetExceededError(
                f"candidate colouring product exceeds budget {budget}"
            )
    n = len(fw.graph.vertices)
    d = fw.dim
    target = d * n - d
    return all(
        rank_exact(colouring_matrix(fw.graph, phi, d)) == target
        for phi in product(*candidates)
    )


def apply_isometry(T, fw: Framework):
    """The framework with every position mapped through the linear map."""
    return fw.with_positions({v: T.apply(p) for v, p in fw.positions.items()})


def translate(fw: Framework, t):
    t = as_vector(t, fw.dim)
    return fw.with_positions(
        {v: tuple(a + b for a, b in zip(p, t)) for v, p in fw.positions.items()}
    )
