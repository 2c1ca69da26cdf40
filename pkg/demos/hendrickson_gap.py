"""Globally rigid without redundant rigidity: K5 minus an edge.

In Euclidean spaces, generic globally rigid frameworks are always
redundantly rigid.  In the planar max norm that implication fails: K5
minus one edge is a 2-connected circuit of the (2,2)-sparsity matroid,
hence generically globally rigid there, but with only 2|V| - 1 = 9 edges
it cannot be redundantly rigid (each of the two colour classes of a
redundantly rigid framework must be 2-edge-connected, needing |V| edges
apiece).  The exact engine confirms both halves on a concrete rational
realisation.

Run:  python demos/hendrickson_gap.py
"""

from polyrigid import (
    Graph,
    SparsityParams,
    complete_graph,
    decide_generic_global_linf2,
    decide_global_rigidity,
    fundamental_circuit,
    is_infinitesimally_rigid,
    is_redundantly_rigid,
    pebble_rank,
    preset,
    randomize_realisation,
)

k5 = complete_graph(list("abcde"))
g = Graph(k5.vertices, [e for e in k5.edges if e != ("a", "b")])
params = SparsityParams(2, 2)

print("K5 - e:", len(g.vertices), "vertices,", len(g.edges), "edges")
print("rank in the (2,2)-sparsity matroid:", pebble_rank(g, params))
print("every fundamental circuit is the whole edge set:",
      all(fundamental_circuit(g, params, e) == g.edges for e in g.edges))
print("generic planar criterion (matroid-connected):",
      decide_generic_global_linf2(g))

linf2 = preset("linf", 2)
seed = 0
fw = None
while fw is None:
    seed += 1
    cand = randomize_realisation(g, 2, linf2, seed=seed, denominator_bound=200)
    if is_infinitesimally_rigid(cand):
        fw = cand
print(f"\nrandom rigid realisation (seed {seed})")
print("exact global rigidity verdict:", decide_global_rigidity(fw).outcome)
print("redundantly rigid:", is_redundantly_rigid(fw),
      "(impossible here: 9 edges < 2|V| = 10)")
