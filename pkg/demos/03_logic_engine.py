"""The logic engine: NAE-3SAT as a rigid frame with flipping armatures.

Each variable owns an armature that can hang left or right of the
middle path. Flags sit on the armatures, one row per clause, and a
clause row jams exactly when all its literals agree.
"""

from rowembed.embedding import verify_embedding
from rowembed.logic_engine import (NaeInstance, build_g0, build_pipeline, engine_feasible,
                                   ensure_spacer, extract_assignment, pipeline_witness,
                                   witness_embedding)
from rowembed.oracles import nae_satisfiable
from rowembed.products import CARTESIAN, STRONG

inst = ensure_spacer(NaeInstance(3, ((-1, -2, -3), (-1, 2, -3))))
print("clauses:", inst.clauses)

gadget = build_g0(inst)
print(f"G0: {gadget.graph.n} vertices, H={gadget.H}, {gadget.columns} columns")

for assignment in ("TFF", "TTT"):
    values = [c == "T" for c in assignment]
    print(f"{assignment}: engine feasible = {engine_feasible(inst, values)}")

# Build the row-labelled witness for a satisfying assignment and read it back.
values = list(nae_satisfiable(inst).witness)
emb = witness_embedding(gadget, values)
print("witness valid:", verify_embedding(emb, gadget.labels).ok)
print("recovered assignment:", extract_assignment(gadget, emb))

# The pipeline removes the need for edge labels at the cost of a larger graph.
for variant in (STRONG, CARTESIAN):
    p = build_pipeline(gadget, variant)
    w = pipeline_witness(p, gadget, values)
    print(f"{variant:9} pipeline: {p.g.n} vertices, {p.g.m} edges, "
          f"max degree {max(p.g.degree(v) for v in p.g.vertices())}, witness ok {verify_embedding(w).ok}")
