"""Graph transforms that carry embeddings from one host to another.

``tv_gadget_transform`` swaps each vertex for a 37-vertex tree, so that
grid embeddings become king's-graph embeddings. Leaf padding and a
universal vertex do the analogous job for other host families.
"""

from rowembed import (CARTESIAN, HostSpec, embed_into, leaf_pad, path_graph,
                      tv_gadget_transform, tv_witness_lift, universal_vertex, verify_embedding)

g = path_graph(3)
art = tv_gadget_transform(g)
print(f"T(v) of P3: {art.output.n} vertices, tree: {art.output.is_tree()}")
print("ports of vertex 0:", sorted(art.port_map[0]))

grid = embed_into(g, HostSpec.path(3, 3, CARTESIAN)).embedding
lifted = tv_witness_lift(g, grid)
print("grid witness", grid.map, "lifts to a king's embedding:", verify_embedding(lifted).ok)

for k in (4, 6):
    out = leaf_pad(g, k).output
    print(f"leaf pad {k}: {out.n} vertices, max degree {max(out.degree(v) for v in out.vertices())}")

u = universal_vertex(g).output
print("universal vertex:", u.n, "vertices,", u.m, "edges")
