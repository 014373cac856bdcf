"""
From a symmetric diagram to its Goeritz form
============================================

Diagrams are described by incidence data only: which white regions meet at
each crossing, the crossing's incidence number, whether the two swapped arcs
of the knot cross there, and where the crossing sits relative to the axis.
"""

# %%
from eqsig.diagram import (
    Locus, SymmetricDiagram, correction_term, goeritz, is_admissible, off_axis_pair,
    on_axis, validate,
)
from eqsig.documents import DIAGRAM, Document, format_move, serialize
from eqsig.moves import ContractC, FlipA, FlipB, apply_move_diagram, apply_move_matrix, \
    move_projection
from eqsig.signature import equivariant_signature

# %%
# A trefoil-like diagram with one region pair: an on-axis crossing between a1
# and a1' plus a bicolored off-axis pair touching the fixed region.

d = SymmetricDiagram(1, (
    on_axis("h", "a1", "a1'", -1),
    *off_axis_pair("x", "a1", "fixed", -1, epsilon=-1),
), "trefoil-like")

print("valid:", validate(d).ok, " admissible:", is_admissible(d))
print("e(D) =", correction_term(d))
G = goeritz(d)
print("A =", G.A.tolist(), " B =", G.B.tolist(), " sigma~ =", equivariant_signature(G))

# %%
# Validation reports problems as data.  Give the partner crossing a
# different incidence number and look at what comes back.

from dataclasses import replace

broken = d.with_crossings(replace(c, eta=1) if c.id == "x'" else c for c in d.crossings)
for v in validate(broken).violations:
    print("  ", v)

# %%
# A crossing on the other axis arc makes the diagram inadmissible.

bad = d.with_crossings(list(d.crossings) + [on_axis("k", "a1", "a1'", 1,
                                                    locus=Locus.ON_AXIS_H_PRIME)])
print("admissible with a crossing on h':", is_admissible(bad))

# %%
# Diagram moves and their matrix shadows.  Each diagram move projects to a
# matrix move, and applying either one gives the same form.

for m in (FlipB("h"), FlipA("x"), ContractC(1, "bicolored")):
    after = goeritz(apply_move_diagram(d, m))
    shadow = move_projection(d, m)
    same = after.same_form(apply_move_matrix(G, shadow))
    print(f"{type(m).__name__:10s} -> {format_move(shadow):42s} agree: {same}"
          f"  sigma~ {equivariant_signature(after)}")

# %%
# Diagrams serialise to the same JSON document format the command line reads.

print(serialize(Document(DIAGRAM, d, d.label)))
