import random

import pytest

from polyrigid import (
    Graph,
    ParameterError,
    SparsityParams,
    complete_graph,
    fundamental_circuit,
    is_2_connected,
    is_Mdd_connected,
    is_dd_redundant,
    is_tight,
    max_sparse_subset,
    pebble_rank,
)

from _oracles import brute_force_max_sparse, edge_masks_of, sparse_by_counting


def double_banana():
    """Two K5-minus-one-vertex bodies glued along two hinge vertices."""
    vertices = ["t", "b", "l1", "l2", "l3", "r1", "r2", "r3"]
    edges = []
    for side in (["l1", "l2", "l3"], ["r1", "r2", "r3"]):
        for v in side:
            edges.append(("t", v))
            edges.append(("b", v))
        edges.append((side[0], side[1]))
        edges.append((side[1], side[2]))
        edges.append((side[0], side[2]))
    return Graph(vertices, edges)


def test_params_validation():
    with pytest.raises(ParameterError):
        SparsityParams(0, 0)
    with pytest.raises(ParameterError):
        SparsityParams(2, 4)  # k > d(d+1)/2
    assert SparsityParams(2, 3).matroidal
    assert not SparsityParams(3, 6).matroidal


def test_pebble_rank_k4_k5():
    assert pebble_rank(complete_graph(list("abcd")), SparsityParams(2, 2)) == 6
    assert pebble_rank(complete_graph(list("abcde")), SparsityParams(2, 2)) == 8


def test_pebble_rank_matches_brute_force_k4_k5():
    for n in (4, 5):
        g = complete_graph(list("abcde")[:n])
        assert pebble_rank(g, SparsityParams(2, 2)) == brute_force_max_sparse(g, 2, 2)


def test_double_banana_tight_3_6():
    g = double_banana()
    assert len(g.edges) == 18 == 3 * 8 - 6
    assert pebble_rank(g, SparsityParams(3, 6)) == 18
    assert is_tight(g, SparsityParams(3, 6))


def test_k4_tight_k5_not():
    assert is_tight(complete_graph(list("abcd")), SparsityParams(2, 2))
    assert not is_tight(complete_graph(list("abcde")), SparsityParams(2, 2))


def test_trees_are_1_1_tight():
    rng = random.Random(77)
    for trial in range(50):
        n = rng.randint(2, 9)
        vertices = [f"v{i}" for i in range(n)]
        edges = [
            (vertices[rng.randint(0, i - 1)], vertices[i]) for i in range(1, n)
        ]
        g = Graph(vertices, edges)
        assert is_tight(g, SparsityParams(1, 1))


def test_dd_redundant():
    assert is_dd_redundant(complete_graph(list("abcde")), 2)
    assert not is_dd_redundant(complete_graph(list("abcd")), 2)


def test_octahedron_graph_redundant():
    from polyrigid import build_octahedron

    assert is_dd_redundant(build_octahedron().graph, 2)


def test_Mdd_connected():
    assert is_Mdd_connected(complete_graph(list("abcde")), 2)
    assert not is_Mdd_connected(complete_graph(list("abcd")), 2)


def test_Mdd_needs_2_connectivity():
    # two K5 blocks sharing one vertex: redundant but with a cut vertex
    k5a = [f"a{i}" for i in range(4)] + ["c"]
    k5b = [f"b{i}" for i in range(4)] + ["c"]
    vertices = k5a[:4] + ["c"] + k5b[:4]
    edges = []
    for block in (k5a, k5b):
        for i in range(5):
            for j in range(i + 1, 5):
                edges.append((block[i], block[j]))
    g = Graph(vertices, edges)
    assert is_dd_redundant(g, 2)
    assert not is_2_connected(g)
    assert not is_Mdd_connected(g, 2)


def test_Mdd_implies_redundant_and_2_connected():
    rng = random.Random(5)
    vertices = list("abcdef")
    for _ in range(60):
        edges = [
            (v, w)
            for i, v in enumerate(vertices)
            for w in vertices[i + 1:]
            if rng.random() < 0.6
        ]
        g = Graph(vertices, edges)
        if is_Mdd_connected(g, 2):
            assert is_dd_redundant(g, 2) and is_2_connected(g)


def test_fundamental_circuit_k4_none():
    g = complete_graph(list("abcd"))
    for e in g.edges:
        assert fundamental_circuit(g, SparsityParams(2, 2), e) is None


def test_fundamental_circuit_k5():
    g = complete_graph(list("abcde"))
    params = SparsityParams(2, 2)
    masks_n = len(g.vertices)
    for e in g.edges:
        circuit = fundamental_circuit(g, params, e)
        assert circuit is not None and e in circuit
        assert len(circuit) >= 7
        # minimally dependent: the circuit is not sparse, every proper
        # subset is (checked against the counting oracle)
        sub = g.subgraph_on_edges(circuit)
        assert not sparse_by_counting(masks_n, edge_masks_of(sub), 2, 2)
        for drop in circuit:
            rest = g.subgraph_on_edges([f for f in circuit if f != drop])
            assert sparse_by_counting(masks_n, edge_masks_of(rest), 2, 2)


def test_fundamental_circuit_disjoint_union():
    k5 = [f"a{i}" for i in range(5)]
    k4 = [f"b{i}" for i in range(4)]
    edges = [(k5[i], k5[j]) for i in range(5) for j in range(i + 1, 5)]
    edges += [(k4[i], k4[j]) for i in range(4) for j in range(i + 1, 4)]
    g = Graph(k5 + k4, edges)
    params = SparsityParams(2, 2)
    assert fundamental_circuit(g, params, (k4[0], k4[1])) is None
    assert fundamental_circuit(g, params, (k5[0], k5[1])) is not None


def test_max_sparse_subset_is_basis():
    g = complete_graph(list("abcde"))
    params = SparsityParams(2, 2)
    basis = max_sparse_subset(g, params)
    assert len(basis) == 8
    assert sparse_by_counting(5, edge_masks_of(g.subgraph_on_edges(basis)), 2, 2)


def test_rank_axioms_sampled():
    rng = random.Random(11)
    vertices = list("abcdef")
    params = SparsityParams(2, 2)
    for _ in range(25):
        edges = [
            (v, w)
            for i, v in enumerate(vertices)
            for w in vertices[i + 1:]
            if rng.random() < 0.5
        ]
        g = Graph(vertices, edges)
        r = pebble_rank(g, params)
        assert 0 <= r <= len(g.edges)
        # monotone + submodular on a sampled pair A <= E, B <= E
        if g.edges:
            a = [e for e in g.edges if rng.random() < 0.5]
            b = [e for e in g.edges if rng.random() < 0.5]
            union = list(dict.fromkeys(a + b))
            inter = [e for e in a if e in b]
            ra = pebble_rank(g.subgraph_on_edges(a), params)
            rb = pebble_rank(g.subgraph_on_edges(b), params)
            ru = pebble_rank(g.subgraph_on_edges(union), params)
            ri = pebble_rank(g.subgraph_on_edges(inter), params)
            assert ra <= ru and rb <= ru <= r  # monotone
            assert ra + rb >= ru + ri  # submodular


def test_nonmatroidal_circuit_rejected():
    g = double_banana()
    with pytest.raises(ParameterError):
        fundamental_circuit(g, SparsityParams(3, 6), g.edges[0])


def test_pebble_rank_all_graphs_on_4_vertices():
    from _oracles import all_graphs

    for edges in all_graphs(list("abcd")):
        g = Graph(list("abcd"), edges)
        for d, k in ((2, 2), (2, 3), (3, 3)):
            assert pebble_rank(g, SparsityParams(d, k)) == brute_force_max_sparse(
                g, d, k
            ), (edges, d, k)


def test_brute_force_oracle_against_naive_enumeration():
    # the pruned search used as the oracle elsewhere agrees with a fully
    # naive scan of all 2^|E| subsets on a few dense instances
    from itertools import combinations

    cases = [complete_graph(list("abcde"))]
    cases.append(Graph(list("abcde"), [
        ("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("a", "e"),
        ("a", "c"), ("b", "d"), ("c", "e"),
    ]))
    for g in cases:
        n = len(g.vertices)
        masks = edge_masks_of(g)
        for d, k in ((2, 2), (2, 3), (3, 3)):
            naive = 0
            for size in range(len(g.edges), -1, -1):
                for subset in combinations(range(len(masks)), size):
                    if sparse_by_counting(n, [masks[i] for i in subset], d, k):
                        naive = size
                        break
                if naive == size:
                    break
            assert brute_force_max_sparse(g, d, k) == naive
            assert pebble_rank(g, SparsityParams(d, k)) == naive
