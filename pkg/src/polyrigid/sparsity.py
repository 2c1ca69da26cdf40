"""Counting sparsity and the (d,k)-sparsity matroid.

A graph is (d,k)-sparse when every induced subgraph on at least d vertices
with n' vertices spans at most d*n' - k edges, and (d,k)-tight when it is
sparse with exactly d|V| - k edges in total.

For 0 <= k <= 2d-1 the sparse edge sets form a matroid and ranks are
computed with the Lee-Streinu pebble game: every vertex starts with d
pebbles, an edge is accepted when k+1 pebbles can be gathered on its
endpoints, and accepted edges are oriented away from the endpoint that
paid a pebble.  Pebbles are pulled back along directed paths, reversing
them.  For k >= 2d the family is not matroidal; the sparsity *property*
is still well defined and is checked by direct counting.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .graph import Graph, is_2_connected

_COUNTING_VERTEX_LIMIT = 16
_FALLBACK_EDGE_LIMIT = 26


@dataclass(frozen=True)
class SparsityParams:
    d: int
    k: int

    def __post_init__(self):
        if self.d < 1:
            raise ParameterError(f"d must be positive, got {self.d}")
        if not 0 <= self.k <= self.d * (self.d + 1) // 2:
            raise ParameterError(
                f"k must satisfy 0 <= k <= d(d+1)/2, got (d,k)=({self.d},{self.k})"
            )

    @property
    def matroidal(self):
        """Whether the sparse sets form a matroid (k < 2d)."""
        return self.k <= 2 * self.d - 1


class _PebbleGame:
    """Mutable pebble-game state for one rank computation."""

    def __init__(self, vertices, d, k):
        self.d = d
        self.k = k
        self.order = {v: i for i, v in enumerate(vertices)}
        self.pebbles = {v: d for v in vertices}
        self.out = {v: set() for v in vertices}

    def _pull_pebble(self, start, forbidden):
        """Move one pebble to ``start`` along a reversed directed path.

        Breadth-first search along accepted-edge directions, expanding
        neighbours in canonical vertex order; the first pebbled vertex
        outside ``forbidden`` wins.  Returns True on success.
        """
        prev = {start: None}
        queue = [start]
        head = 0
        found = None
        while head < len(queue) and found is None:
            v = queue[head]
            head += 1
            for w in sorted(self.out[v], key=self.order.get):
                if w in prev:
                    continue
                prev[w] = v
                if self.pebbles[w] > 0 and w not in forbidden:
                    found = w
                    break
                queue.append(w)
        if found is None:
            return False
        self.pebbles[found] -= 1
        self.pebbles[start] += 1
        w = found
        while prev[w] is not None:
            v = prev[w]
            self.out[v].discard(w)
            self.out[w].add(v)
            w = v
        return True

    def try_accept(self, v, w):
        """Gather pebbles for edge vw and accept it if independent.

        Each successful pull strictly raises the pebble count on {v, w},
        so the loop is bounded; rejection happens only when neither end
        can reach a free pebble.
        """
        need = self.k + 1
        while self.pebbles[v] + self.pebbles[w] < need:
            if self.pebbles[v] < self.d and self._pull_pebble(v, (v, w)):
                continue
            if self.pebbles[w] < self.d and self._pull_pebble(w, (v, w)):
                continue
            return False
        if self.pebbles[v] > 0:
            tail, head = v, w
        else:
            tail, head = w, v
        self.pebbles[tail] -= 1
        self.out[tail].add(head)
        return True


def _pebble_accepted(vertices, edges, params):
    game = _PebbleGame(vertices, params.d, params.k)
    accepted = []
    for v, w in edges:
        if game.try_accept(v, w):
            accepted.append((v, w))
    return accepted


def _is_sparse_by_counting(g: Graph, params: SparsityParams):
    """Direct check of the counting condition over all vertex subsets."""
    n = len(g.vertices)
    if n > _COUNTING_VERTEX_LIMIT:
        raise ParameterError(
            f"counting sparsity check limited to {_COUNTING_VERTEX_LIMIT} vertices"
        )
    idx = g.index
    edge_masks = [(1 << idx(v)) | (1 << idx(w)) for v, w in g.edges]
    d, k = params.d, params.k
    for mask in range(1, 1 << n):
        size = mask.bit_count()
        if size < d:
            continue
        count = sum(1 for em in edge_masks if em & mask == em)
        if count > d * size - k:
            return False
    return True


def _max_sparse_subset_size(g: Graph, params: SparsityParams):
    """Largest sparse edge subset in the non-matroidal range, by search.

    Depth-first include/exclude over edges; supersets of non-sparse sets
    are never explored (sparsity is downward closed).
    """
    if _is_sparse_by_counting(g, params):
        return len(g.edges)
    if len(g.edges) > _FALLBACK_EDGE_LIMIT:
        raise ParameterError(
            f"exhaustive sparse-subset search limited to {_FALLBACK_EDGE_LIMIT} edges"
        )
    edges = g.edges
    best = 0

    def extend(i, chosen):
        nonlocal best
        if len(chosen) + (len(edges) - i) <= best:
            return
        if i == len(edges):
            best = max(best, len(chosen))
            return
        sub = g.subgraph_on_edges(chosen + [edges[i]])
        if _is_sparse_by_counting(sub, params):
            extend(i + 1, chosen + [edges[i]])
        extend(i + 1, chosen)

    extend(0, [])
    return best


def pebble_rank(g: Graph, params: SparsityParams):
    """Size of a maximum (d,k)-sparse subset of the edge set.

    In the matroid range this is the matroid rank, from the pebble game.
    """
    if params.matroidal:
        return len(_pebble_accepted(g.vertices, g.edges, params))
    return _max_sparse_subset_size(g, params)


def max_sparse_subset(g: Graph, params: SparsityParams):
    """A maximum sparse edge subset (a basis of E in the matroid range)."""
    if not params.matroidal:
        raise ParameterError("bases are only well defined for k <= 2d-1")
    return tuple(_pebble_accepted(g.vertices, g.edges, params))


def is_sparse(g: Graph, params: SparsityParams):
    if params.matroidal:
        return pebble_rank(g, params) == len(g.edges)
    return _is_sparse_by_counting(g, params)


def is_tight(g: Graph, params: SparsityParams):
    target = params.d * len(g.vertices) - params.k
    return len(g.edges) == target and is_sparse(g, params)


def is_dd_redundant(g: Graph, d: int):
    """Every edge lies in a circuit of the (d,d)-sparsity matroid.

    An edge is in some circuit of E exactly when removing it does not drop
    the rank.
    """
    params = SparsityParams(d, d)
    full = pebble_rank(g, params)
    for v, w in g.edges:
        if pebble_rank(g.without_edge(v, w), params) != full:
            return False
    return True


def is_Mdd_connected(g: Graph, d: int):
    """Connectivity in the (d,d)-sparsity matroid: every edge pair shares a
    circuit; equivalent to 2-connected plus (d,d)-redundant."""
    return is_2_connected(g) and is_dd_redundant(g, d)


def fundamental_circuit(g: Graph, params: SparsityParams, edge):
    """One matroid circuit through ``edge``, or None if it is a coloop.

    Builds a basis B of E - edge with the pebble game; if the edge extends
    B it lies in no circuit.  Otherwise the circuit is ``edge`` together
    with the basis elements whose removal makes B - b + edge independent.
    """
    if not params.matroidal:
        raise ParameterError("circuits are only well defined for k <= 2d-1")
    v, w = edge
    if g.index(v) > g.index(w):
        v, w = w, v
    if not g.has_edge(v, w):
        raise ParameterError(f"edge {edge!r} not in graph")
    rest = [e for e in g.edges if e != (v, w)]
    basis = _pebble_accepted(g.vertices, rest, params)
    if len(_pebble_accepted(g.vertices, basis + [(v, w)], params)) == len(basis) + 1:
        return None
    circuit = [(v, w)]
    for b in basis:
        candidate = [e for e in basis if e != b] + [(v, w)]
        if len(_pebble_accepted(g.vertices, candidate, params)) == len(basis):
            circuit.append(b)
    return tuple(sorted(circuit, key=g.edges.index))
