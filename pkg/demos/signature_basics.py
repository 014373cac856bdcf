"""
Equivariant signature from Goeritz blocks
=========================================

A symmetric diagram of a strongly invertible knot pairs its white regions
as a_i <-> a'_i.  In that basis the Goeritz matrix has the block shape
[[A, B], [B, A]], and the involution splits it into two forms
M+ = 2(A - B) and M- = 2(A + B).
"""

# %%
# Start from the embedded 5_1 entry.

from eqsig import corpus
from eqsig.goeritz import full_matrix, minus_part, plus_part, det_identity
from eqsig.signature import equivariant_parts, inertia, sigma_series, signature_jones

G = corpus.get("5_1").goeritz
print("A =", G.A.tolist())
print("B =", G.B.tolist())
print("full matrix:")
for row in full_matrix(G).rows:
    print("   ", row)

# %%
# The two eigenspace parts and their inertia.  The signature of each part
# comes from an exact congruence diagonalisation over the rationals.

for name, part in (("M+", plus_part(G)), ("M-", minus_part(G))):
    inn = inertia(part)
    print(f"{name} = {part.tolist()}  (p, q, z) = ({inn.p}, {inn.q}, {inn.z})")

parts = equivariant_parts(G)
print(f"sigma~ = {parts.sigma_plus} - ({parts.sigma_minus}) - {parts.e} = {parts.value}")

# %%
# The determinants of the two parts multiply to 4^n times the full
# determinant, and |det| of the full matrix is the knot determinant.

chk = det_identity(G)
print(f"det M+ = {chk.det_plus}, det M- = {chk.det_minus}, det M = {chk.det_full}")
print("identity holds:", chk.identity_holds)

# %%
# A second way to get a signature: walk a chain of nested principal
# minors and add up the signs of consecutive products.  For the 9_40 plus
# part the plain leading minors already form a valid chain.

Mp = plus_part(corpus.get("9_40").goeritz)
series = sigma_series(Mp)
print("chain order:", series.order)
print("minors:", series.minors)
print("signature via minors:", signature_jones(Mp, series))
print("signature via inertia:", inertia(Mp).signature)

# %%
# When leading minors vanish the chain has to pick other indices.  The
# anti-diagonal matrix below is the smallest example.

from eqsig.matrix import SymIntMatrix

W = SymIntMatrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
s = sigma_series(W)
print("order", s.order, "minors", s.minors, "signature", signature_jones(W, s))

# %%
# Every corpus entry at a glance.  6_1 carries a flag: its printed forms are
# negative definite, so the definition gives 0 where a different value was stated.

for name in corpus.names():
    e = corpus.get(name)
    flag = "  (stated value differs)" if e.has_discrepancy else ""
    print(f"{name:18s} sigma~ = {equivariant_parts(e.goeritz).value:3d}{flag}")
