from fractions import Fraction

from polyrigid import (
    Framework,
    GLOBALLY_RIGID,
    SearchParams,
    congruence_check,
    decide_global_rigidity,
    edge_lengths,
    numeric_witness_search,
    path_graph,
)
from polyrigid.framework import apply_isometry, translate


def test_congruence_translation(octahedron):
    moved = translate(octahedron, (3, -2))
    assert congruence_check(octahedron, moved.positions)


def test_congruence_coordinate_swap(octahedron):
    swapped = {
        v: (p[1], p[0]) for v, p in octahedron.positions.items()
    }
    assert congruence_check(octahedron, swapped)


def test_congruence_rejects_genuine_witness(rigid_k4_linf2):
    _, fw = rigid_k4_linf2[0]
    verdict = decide_global_rigidity(fw)
    assert not congruence_check(fw, verdict.witness)


def test_congruence_full_orbit(octahedron):
    for T in octahedron.norm.isometry_group():
        moved = translate(apply_isometry(T, octahedron), (Fraction(1, 7), 5))
        assert congruence_check(octahedron, moved.positions)


def test_numeric_search_path_reflection(linf1):
    fw = Framework(
        path_graph(["v0", "v1", "v2"]), linf1, {"v0": (0,), "v1": (1,), "v2": (3,)}
    )
    witness = numeric_witness_search(fw, SearchParams(restarts=60, steps=80, seed=3))
    assert witness is not None
    assert edge_lengths(fw.with_positions(witness)) == edge_lengths(fw)
    assert not congruence_check(fw, witness)


def test_numeric_search_finds_k4_witness(rigid_k4_linf2):
    _, fw = rigid_k4_linf2[0]
    witness = numeric_witness_search(fw, SearchParams(restarts=400, steps=150, seed=7))
    assert witness is not None
    assert edge_lengths(fw.with_positions(witness)) == edge_lengths(fw)
    assert not congruence_check(fw, witness)
    # agreement with the exact engine
    assert decide_global_rigidity(fw).outcome != GLOBALLY_RIGID


def test_numeric_search_octahedron_none(octahedron):
    witness = numeric_witness_search(
        octahedron, SearchParams(restarts=150, steps=100, seed=5)
    )
    assert witness is None


def test_numeric_search_no_edges(linf2):
    from polyrigid import Graph

    fw = Framework(Graph(["a"]), linf2, {"a": (0, 0)})
    assert numeric_witness_search(fw, SearchParams(restarts=3, steps=3, seed=1)) is None
