"""A tree that encodes 3-PARTITION when drawn on a star-by-path host.

Blades of length ``a_i`` hang off paddles; three blades share a gap
exactly when their lengths add up to ``B``.
"""

from rowembed.embedding import verify_embedding
from rowembed.oracles import three_partition
from rowembed.partition import (build_paddle_tree, extract_partition, normalize_instance,
                                partition_witness, pathwidth_two_certificate)
from rowembed.render import RenderSpec, render_svg

inst = normalize_instance([1, 2, 3, 2, 2, 2], 2)
print("normalized numbers:", inst.a, "B =", inst.B)

t = build_paddle_tree(inst)
print(f"tree: {t.tree.n} vertices, span {t.span}, star with {t.star_leaves} leaves")
print("pathwidth at most 2:", pathwidth_two_certificate(t))
for role, count in sorted(t.role_counts().items()):
    print(f"  {role:18} {count}")

groups = three_partition(inst).witness
print("groups:", groups)
emb = partition_witness(t, groups)
print("witness valid:", verify_embedding(emb).ok)
print("read back:", extract_partition(t, emb))

with open("paddle_tree.svg", "w") as fh:
    fh.write(render_svg(emb, RenderSpec(cell_size=3, max_host_cells=0)))
print("wrote paddle_tree.svg")
