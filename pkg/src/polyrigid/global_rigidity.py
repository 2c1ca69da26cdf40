"""Deciding global rigidity of well-positioned frameworks, exactly.

The decision rests on a complete case split over directed colourings: an
equivalent realisation q of (G, p) must satisfy M(G, phi) q = lengths(p)
for some colouring phi of its own, plus the per-edge inequalities saying
no face exceeds the prescribed length.  The engine therefore enumerates
zero-free colourings depth-first, pruning a branch the moment the partial
affine system (with one vertex pinned) becomes inconsistent, skipping the
colourings obtained from the induced one by a linear isometry (those only
reproduce congruent copies), and running an exact LP feasibility check on
the survivors.  A feasible point is an explicit equivalent, non-congruent
realisation; if the whole tree is exhausted without one, the framework is
globally rigid - exactly, with no genericity caveat.

Alongside the exact engine live the certificate routes: strong directed
colourings (all colour classes 2-connected certifies global rigidity of
generic realisations in the hypercube-ball norm) and the planar
characterisation through connectivity in the (2,2)-sparsity matroid.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    BudgetExceededError,
    InconsistentSystemError,
    NotWellPositionedError,
    ParameterError,
)
from . import simplex
from .framework import (
    Framework,
    colouring_matrix,
    edge_lengths,
    induced_colouring,
    is_infinitesimally_rigid,
    is_redundantly_rigid,
    is_well_positioned,
    monochromatic_subgraphs,
    rank_exact,
    zero_vector,
)
from .graph import Graph, is_2_connected
from .linalg import IncrementalSystem, dot, integerize_row, solve_affine
from .sparsity import is_Mdd_connected

GLOBALLY_RIGID = "GloballyRigid"
NOT_GLOBALLY_RIGID = "NotGloballyRigid"
NOT_RIGID = "NotRigid"
NOT_WELL_POSITIONED = "NotWellPositioned"
BUDGET_EXCEEDED = "BudgetExceeded"


@dataclass
class GlobalVerdict:
    outcome: str
    witness: dict | None = None
    certificate: dict = field(default_factory=dict)
    generic_caveat: bool = False

    def __bool__(self):
        return self.outcome == GLOBALLY_RIGID


def apply_colouring(T, phi):
    """The image of a colouring under the isometry T.

    An isometry acts on face vectors through its transpose: T^T is the
    map that permutes the face set, and the induced colouring of the
    moved framework T o p picks up exactly the transposed action
    (for the hypercube- and cross-polytope-ball norms the group is
    orthogonal, so the distinction is invisible there).
    """
    return tuple(T.transpose_apply(f) for f in phi)


def is_isometric_colouring(phi, psi, group):
    """Whether some isometry in the group carries psi to phi edge-wise."""
    if len(phi) != len(psi):
        raise ParameterError("colourings live on different edge sets")
    phi = tuple(phi)
    return any(apply_colouring(T, psi) == phi for T in group)


def column_space_contains(rows, vec):
    """Whether vec lies in the column space: augmenting keeps the rank."""
    if len(vec) != len(rows):
        raise ParameterError("vector length must match the row count")
    base = rank_exact(rows)
    augmented = [list(r) + [b] for r, b in zip(rows, vec)]
    return rank_exact(augmented) == base


def _pinned_row(graph, dim, v0, edge, face, length):
    """Integerized row of the pinned system  face.(q(v) - q(w)) = length
    with q(v0) fixed at its position (handled by the caller via length
    adjustment); returns coefficient entries plus rhs, jointly scaled."""
    n = len(graph.vertices)
    v, w = edge
    row = [Fraction(0)] * (dim * (n - 1)) + [length]
    for u, sign in ((v, 1), (w, -1)):
        if u == v0:
            continue
        col = graph.index(u)
        if col > graph.index(v0):
            col -= 1
        for i, x in enumerate(face):
            row[dim * col + i] += sign * x
    return row


def _pinned_rhs_adjust(face, edge, v0, p0, length):
    """Move the pinned vertex's contribution to the right-hand side."""
    v, w = edge
    if v == v0:
        return length - dot(face, p0)
    if w == v0:
        return length + dot(face, p0)
    return length


def _pinned_index(graph, v0, u, dim, i):
    col = graph.index(u)
    if col > graph.index(v0):
        col -= 1
    return dim * col + i


def _assemble_realisation(fw: Framework, vec):
    """Rebuild the vertex->position map from pinned stacked coordinates."""
    graph, d = fw.graph, fw.dim
    v0 = graph.vertices[0]
    q = {v0: fw.position(v0)}
    for u in graph.vertices:
        if u == v0:
            continue
        base = _pinned_index(graph, v0, u, d, 0)
        q[u] = tuple(vec[base + i] for i in range(d))
    return q


def _feasible_equivalent(fw: Framework, lengths, particular, kernel):
    """Feasibility of the per-edge face inequalities over an affine set.

    The set is particular + span(kernel) in pinned coordinates; every
    point of it already satisfies the equalities phi(e).(q(v)-q(w)) =
    length(e), so feasibility of f.(q(v)-q(w)) <= length(e) for all faces
    f makes every edge length exactly right.  Tries the particular
    solution first, filters constraints that do not involve the kernel,
    and only then runs the exact simplex.  Returns a realisation or None.
    """
    graph, norm, d = fw.graph, fw.norm, fw.dim
    v0 = graph.vertices[0]
    p0 = fw.position(v0)
    q0 = _assemble_realisation(fw, particular)
    if all(
        norm.value(tuple(a - b for a, b in zip(q0[v], q0[w]))) == lengths[ei]
        for ei, (v, w) in enumerate(graph.edges)
    ):
        return q0
    if not kernel:
        return None

    nk = len(kernel)
    ineq = {}
    for ei, (v, w) in enumerate(graph.edges):
        for face in norm.faces:
            const = Fraction(0)
            coeffs = [Fraction(0)] * nk
            for i, x in enumerate(face):
                if x == 0:
                    continue
                for u, sign in ((v, 1), (w, -1)):
                    if u == v0:
                        const += sign * x * p0[i]
                    else:
                        idx = _pinned_index(graph, v0, u, d, i)
                        const += sign * x * particular[idx]
                        for j in range(nk):
                            coeffs[j] += sign * x * kernel[j][idx]
            bound = lengths[ei] - const
            key = tuple(coeffs)
            if all(c == 0 for c in key):
                if bound < 0:
                    return None
                continue
            if key not in ineq or bound < ineq[key]:
                ineq[key] = bound

    rows = [list(k) for k in ineq]
    rhs = [ineq[k] for k in ineq]
    t = simplex.feasible_point(rows, rhs)
    if t is None:
        return None
    point = [
        particular[idx] + sum(t[j] * kernel[j][idx] for j in range(nk))
        for idx in range(len(particular))
    ]
    return _assemble_realisation(fw, point)


def equivalent_witness_lp(fw: Framework, phi, lengths=None, skip_checks=False):
    """Search X_phi for an equivalent realisation, by exact LP feasibility.

    X_phi is the affine solution set of the pinned system
    M'(G, phi) q = lengths with the first vertex held at its position.
    On top of it sit the inequalities  f.(q(v) - q(w)) <= length(e)  for
    every edge and every face f: together with the equalities they force
    every edge of q to have exactly the prescribed length, with phi among
    q's active faces.  Returns a realisation map or None when infeasible;
    raises InconsistentSystemError when X_phi itself is empty.
    """
    graph, d = fw.graph, fw.dim
    zero = zero_vector(d)
    if not skip_checks:
        if any(f == zero for f in phi):
            raise ParameterError("witness search needs a zero-free colouring")
        if not is_well_positioned(fw):
            raise NotWellPositionedError("witness search needs a well-positioned framework")
        if not is_infinitesimally_rigid(fw):
            raise ParameterError("witness search is only meaningful for rigid frameworks")
    if lengths is None:
        lengths = edge_lengths(fw)
    v0 = graph.vertices[0]
    p0 = fw.position(v0)

    rows = []
    rhs = []
    for ei, e in enumerate(graph.edges):
        face = phi[ei]
        rows.append(_pinned_row(graph, d, v0, e, face, Fraction(0))[:-1])
        rhs.append(_pinned_rhs_adjust(face, e, v0, p0, lengths[ei]))
    solved = solve_affine(rows, rhs)
    if solved is None:
        raise InconsistentSystemError("affine system of the colouring has no solution")
    particular, kernel = solved
    return _feasible_equivalent(fw, lengths, particular, kernel)


class _BudgetHit(Exception):
    pass


class _SearchState:
    """Depth-first enumeration of zero-free colourings with pruning."""

    def __init__(self, fw, lengths, iso_set, budget):
        graph, norm, d = fw.graph, fw.norm, fw.dim
        self.fw = fw
        self.graph = graph
        self.norm = norm
        self.lengths = lengths
        self.iso_set = iso_set
        self.budget = budget
        self.counts = {
            "colourings_examined": 0,
            "leaves": 0,
            "pruned_subtrees": 0,
            "isometric_skipped": 0,
            "lp_runs": 0,
        }
        v0 = graph.vertices[0]
        p0 = fw.position(v0)
        n = len(graph.vertices)
        self.width = d * (n - 1) + 1
        self.candidates = []
        for ei, e in enumerate(graph.edges):
            options = []
            for face in norm.faces:
                row = _pinned_row(graph, d, v0, e, face, Fraction(0))
                row[-1] = _pinned_rhs_adjust(face, e, v0, p0, lengths[ei])
                options.append((face, integerize_row(row)))
            self.candidates.append(options)

    def _tick(self):
        self.counts["colourings_examined"] += 1
        if self.budget is not None and self.counts["colourings_examined"] > self.budget:
            raise _BudgetHit()

    def run(self, first_edge_faces=None):
        """Search the whole tree (or the given slice of first-edge faces);
        returns a witness realisation or None."""
        m = len(self.graph.edges)
        system = IncrementalSystem(self.width)
        assign = [None] * m

        def recurse(i):
            if i == m:
                self.counts["leaves"] += 1
                self._tick()
                phi = tuple(assign)
                if phi in self.iso_set:
                    self.counts["isometric_skipped"] += 1
                    return None
                self.counts["lp_runs"] += 1
                particular, kernel = system.solve()
                q = _feasible_equivalent(self.fw, self.lengths, particular, kernel)
                return (phi, q) if q is not None else None
            options = self.candidates[i]
            if i == 0 and first_edge_faces is not None:
                options = [options[j] for j in first_edge_faces]
            for face, row in options:
                consistent, _ = system.push(row)
                if consistent:
                    assign[i] = face
                    found = recurse(i + 1)
                else:
                    self.counts["pruned_subtrees"] += 1
                    self._tick()
                    found = None
                system.pop()
                if found is not None:
                    return found
            return None

        return recurse(0)


def _search_slice(args):
    fw, lengths, iso_set, budget, slice_indices = args
    state = _SearchState(fw, lengths, iso_set, budget)
    try:
        found = state.run(first_edge_faces=slice_indices)
        return found, state.counts, False
    except _BudgetHit:
        return None, state.counts, True


def decide_global_rigidity(fw: Framework, budget=None, threads=1):
    """Full decision for a framework in its polytope norm.

    Verdicts are exact: NotWellPositioned and NotRigid short-circuit;
    otherwise the colouring tree is searched and the answer is either
    NotGloballyRigid with a verified witness realisation or GloballyRigid
    after exhausting the tree.  ``budget`` bounds the number of colourings
    examined (leaves plus pruned branches); exceeding it yields a
    BudgetExceeded verdict carrying the progress counters.
    """
    cert = {"criterion": "exact colouring enumeration"}
    if not is_well_positioned(fw):
        return GlobalVerdict(NOT_WELL_POSITIONED, certificate=cert)
    phi_p = induced_colouring(fw)
    d, n = fw.dim, len(fw.graph.vertices)
    rank = rank_exact(colouring_matrix(fw.graph, phi_p, d))
    cert["rank"] = rank
    cert["rank_required"] = d * n - d
    if rank < d * n - d:
        return GlobalVerdict(NOT_RIGID, certificate=cert)
    if not fw.graph.edges:
        cert["note"] = "single vertex: trivially globally rigid"
        return GlobalVerdict(GLOBALLY_RIGID, certificate=cert)

    lengths = edge_lengths(fw)
    group = fw.norm.isometry_group()
    iso_set = {apply_colouring(T, phi_p) for T in group}
    cert["isometry_group_order"] = len(group)

    nfaces = len(fw.norm.faces)
    if threads > 1 and len(fw.graph.edges) > 1 and nfaces >= threads:
        found, budget_hit = _run_parallel(fw, lengths, iso_set, budget, threads, cert)
    else:
        state = _SearchState(fw, lengths, iso_set, budget)
        budget_hit = False
        try:
            found = state.run()
        except _BudgetHit:
            found = None
            budget_hit = True
        cert.update(state.counts)

    if found is not None:
        phi, q = found
        from .oracle import congruence_check

        fw_q = fw.with_positions(q)
        if edge_lengths(fw_q) != lengths:
            raise AssertionError("witness failed exact length verification")
        if congruence_check(fw, q):
            raise AssertionError("witness unexpectedly congruent to the input")
        cert["witness_colouring"] = phi
        return GlobalVerdict(NOT_GLOBALLY_RIGID, witness=q, certificate=cert)
    if budget_hit:
        return GlobalVerdict(BUDGET_EXCEEDED, certificate=cert)
    return GlobalVerdict(GLOBALLY_RIGID, certificate=cert)


def _run_parallel(fw, lengths, iso_set, budget, threads, cert):
    """Partition the first edge's face choices across worker processes."""
    from concurrent.futures import ProcessPoolExecutor

    nfaces = len(fw.norm.faces)
    slices = [list(range(j, nfaces, threads)) for j in range(threads)]
    slices = [s for s in slices if s]
    per_budget = None if budget is None else max(1, budget // len(slices))
    jobs = [(fw, lengths, iso_set, per_budget, s) for s in slices]
    found = None
    budget_hit = False
    totals = {}
    with ProcessPoolExecutor(max_workers=len(slices)) as pool:
        for result, counts, hit in pool.map(_search_slice, jobs):
            for k, v in counts.items():
                totals[k] = totals.get(k, 0) + v
            budget_hit = budget_hit or hit
            if result is not None and found is None:
                found = result
    cert.update(totals)
    cert["workers"] = len(slices)
    return found, budget_hit


# -- certificate routes ------------------------------------------------


def is_strong_colouring_linf(graph: Graph, phi):
    """Sufficient test for strongness under the hypercube-ball norm:
    every colour class is 2-connected on the full vertex set."""
    return all(is_2_connected(sub) for sub in monochromatic_subgraphs(graph, phi))


def is_strong_colouring_exhaustive(graph: Graph, phi, norm, budget=2_000_000):
    """Decide strongness of a colouring by enumerating all colourings.

    phi is strong when every colouring whose matrix's column space
    contains col M(G, phi) is an isometric image of phi.  The enumeration
    runs depth-first: rows of the candidate colouring are paired with the
    rows of phi, and any left-kernel vector of the partial candidate
    matrix that fails to annihilate the matrix of phi kills the whole
    subtree (such a vector survives every completion).  Colourings with a
    zero face die immediately, since a zero row pairs with a nonzero row
    of phi; a phi with zero entries is rejected as never strong.

    This is exponential and budget-guarded; the 2-connectivity test above
    is the practical route.
    """
    d = norm.dim
    zero = zero_vector(d)
    if any(f == zero for f in phi):
        return False
    group = norm.isometry_group()
    iso_set = {apply_colouring(T, tuple(phi)) for T in group}
    m = len(graph.edges)
    n = len(graph.vertices)
    width = 2 * d * n
    keylen = d * n

    phi_rows = colouring_matrix(graph, phi, d)
    cand_faces = list(norm.faces) + [zero]

    # paired integer rows, one per (edge, candidate face): candidate row
    # as the key part, the corresponding row of phi as the check part
    paired = []
    for ei, e in enumerate(graph.edges):
        options = []
        for face in cand_faces:
            key_part = _unpinned_row(graph, d, e, face)
            check_part = phi_rows[ei]
            options.append((face, integerize_row(list(key_part) + list(check_part))))
        paired.append(options)

    examined = 0
    system = IncrementalSystem(width, keylen=keylen)
    assign = [None] * m

    def recurse(i):
        nonlocal examined
        if i == m:
            examined += 1
            if examined > budget:
                raise BudgetExceededError("strongness enumeration budget exhausted")
            psi = tuple(assign)
            if psi in iso_set:
                return None
            return psi  # containment held all the way down: not isometric
        for face, row in paired[i]:
            consistent, _ = system.push(row)
            if consistent:
                assign[i] = face
                found = recurse(i + 1)
            else:
                examined += 1
                if examined > budget:
                    system.pop()
                    raise BudgetExceededError("strongness enumeration budget exhausted")
                found = None
            system.pop()
            if found is not None:
                return found
        return None

    return recurse(0) is None


def _unpinned_row(graph, dim, edge, face):
    n = len(graph.vertices)
    v, w = edge
    row = [Fraction(0)] * (dim * n)
    vi, wi = graph.index(v), graph.index(w)
    for i, x in enumerate(face):
        row[dim * vi + i] += x
        row[dim * wi + i] -= x
    return row


def certify_generic_global(fw: Framework):
    """Certificate for generic global rigidity in the hypercube-ball norm.

    True when every colour class of the induced colouring is 2-connected;
    that makes the colouring strong, so every generic realisation sharing
    it is globally rigid.  For the concrete rational input this is a
    certificate with a generic caveat, but two exact consequences are
    cross-checked here: the framework must be redundantly rigid and the
    graph connected in the (d,d)-sparsity matroid.
    """
    if not fw.norm.is_linf:
        raise ParameterError("certificate requires the linf preset norm")
    if not is_well_positioned(fw):
        raise NotWellPositionedError("certificate requires a well-positioned framework")
    phi_p = induced_colouring(fw)
    strong = is_strong_colouring_linf(fw.graph, phi_p)
    if strong:
        if not is_redundantly_rigid(fw):
            raise AssertionError("strong colouring without redundant rigidity")
        if not is_Mdd_connected(fw.graph, fw.dim):
            raise AssertionError("strong colouring without matroid connectivity")
    return strong


def decide_generic_global_linf2(graph: Graph, rigidity_hint: Framework | None = None):
    """Generic global rigidity in the 2-dimensional hypercube-ball norm.

    Graph level: the graph has a generic globally rigid realisation iff
    it is connected in the (2,2)-sparsity matroid.  With a well-positioned
    planar framework as a hint, its infinitesimal rigidity joins the
    criterion (the characterisation for generic frameworks).
    """
    if rigidity_hint is None:
        return is_Mdd_connected(graph, 2)
    if rigidity_hint.graph != graph:
        raise ParameterError("rigidity hint is on a different graph")
    if rigidity_hint.dim != 2 or not rigidity_hint.norm.is_linf:
        raise ParameterError("rigidity hint must be a 2-dimensional linf framework")
    return is_infinitesimally_rigid(rigidity_hint) and is_Mdd_connected(graph, 2)
