"""A first look: small guests placed into king's graphs and grids.

Run from the repository root with ``python demos/01_first_embeddings.py``.
"""

from rowembed import (CARTESIAN, STRONG, HostSpec, Outcome, complete_graph, cycle_graph,
                      SearchConfig, embed_into, path_graph, star_graph,
                      verify_embedding)

# K4 fits a 2x2 block of the king's graph: every pair of cells touches.
res = embed_into(complete_graph(4), HostSpec.path(2, 2, STRONG))
print("K4 in 2x2 king:", res.outcome.name, res.embedding.map)

# K5 does not, no matter how large the board is (clique number is 4).
res = embed_into(complete_graph(5), HostSpec.path(5, 5, STRONG))
print("K5 in 5x5 king:", res.outcome.name, f"({res.nodes} search nodes)")

# In the plain grid a vertex has at most four neighbours.
for leaves in (4, 5):
    res = embed_into(star_graph(leaves), HostSpec.path(5, 5, CARTESIAN))
    print(f"K1,{leaves} in 5x5 grid:", res.outcome.name)

# Witnesses are checked independently of the search.
emb = embed_into(cycle_graph(6), HostSpec.path(3, 2, CARTESIAN)).embedding
print(verify_embedding(emb))

# A tiny budget gives up honestly rather than guessing: the K5 proof above
# needed a couple of hundred nodes.
res = embed_into(complete_graph(5), HostSpec.path(5, 5, STRONG), SearchConfig(node_budget=20))
assert res.outcome is Outcome.INCONCLUSIVE
print("K5 with a budget of 20 nodes:", res.outcome.name)

# A Hamiltonian path snakes through the whole board.
res = embed_into(path_graph(9), HostSpec.path(3, 3, CARTESIAN))
print("P9 in 3x3 grid:", res.outcome.name, res.embedding.map)
