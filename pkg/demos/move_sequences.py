"""
Equivariant crossing changes and signature bounds
=================================================

Three kinds of symmetric crossing change act on the Goeritz blocks in a
simple way.  Each one moves the equivariant signature by a bounded
amount, so |sigma~| gives a lower bound on how many moves of a kind are
needed to reach the unknot.
"""

# %%
from eqsig import corpus
from eqsig.bounds import lower_bounds, verify_sequence
from eqsig.documents import format_move, parse_moves
from eqsig.goeritz import minus_part, plus_part
from eqsig.moves import TypeB, TypeC, apply_move_matrix, resolution_form, resolution_matrix
from eqsig.signature import equivariant_signature

G940 = corpus.get("9_40").goeritz
G51 = corpus.get("5_1").goeritz

# %%
# 9_40 has sigma~ = 6.  Two type A moves (a pair of off-axis crossings swapped
# together) bring it down to 0, and the first one already uses the full
# allowance of 6.

moves = parse_moves("A2 i=1 j=4 sign=+1 color=bicolored eps=+1; "
                    "A1 k=4 sign=+1 color=unicolored")
report = verify_sequence(G940, moves)
for step in report.steps:
    print(f"{format_move(step.move):45s} {step.sigma_before:3d} -> {step.sigma_after:3d}"
          f"   |delta| <= {step.bound}: {step.compliant}")

lb = lower_bounds(G940)
print("at least", lb.uA_min, "type A moves are needed;", lb.caveats["uA_min"])

# %%
# A type B move changes one on-axis crossing.  Only the diagonal entries of
# A and B at that pair move, in opposite directions, so M- stays put.

H = apply_move_matrix(G51, TypeB(1, 1))
print("M- unchanged:", minus_part(H) == minus_part(G51))
print("M+ before", plus_part(G51).tolist(), "after", plus_part(H).tolist())
print("sigma~:", equivariant_signature(G51), "->", equivariant_signature(H))

# %%
# A type C move contracts an arc of the axis and adds a new pair of regions.
# The new row of A collects whatever used to touch the deleted region.

C = apply_move_matrix(G51, TypeC(1, "bicolored"))
print("new row v =", C.type_c.v, " S =", C.type_c.S)
print("A after C:", C.A.tolist())
print("e:", G51.e, "->", C.e)

# %%
# Resolving the two new crossings gives a split link, so the minus part of
# that resolution has the all-ones vector in its kernel.

R = minus_part(resolution_form(C))
print("resolution minus part:", R.tolist())
print("times the all-ones vector:", R.matvec([1] * R.size))
print("full resolution matrix has", resolution_matrix(C).size, "rows")

# %%
# Two positive C moves take 5_1 from -4 to 0 in steps of +2.

report = verify_sequence(G51, [TypeC(1, "bicolored"), TypeC(1, "bicolored")])
print("trajectory:", " -> ".join(map(str, report.trajectory)), " compliant:", report.compliant)

# %%
# Tighten the allowed change to 0 and the same sequence becomes a violation.

strict = verify_sequence(G51, [TypeC(1, "bicolored")] * 2, max_delta=0)
print("with max delta 0, compliant:", strict.compliant)
