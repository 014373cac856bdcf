"""
Rank-one updates and signature jumps
====================================

Adding t*u*u^T with t > 0 to a nonsingular symmetric matrix can raise the
signature by 2 or leave it alone, never more.  The determinant follows
det(M + t u u^T) = det(M) * (1 + t u^T M^-1 u).
"""

# %%
import random
from collections import Counter

from eqsig.bounds import rank_one_diagnostics
from eqsig.matrix import SymIntMatrix
from eqsig.selftest import random_nonsingular

r = rank_one_diagnostics(SymIntMatrix([[-1, 0], [0, -1]]), [1, 0])
print(f"sigma {r.sigma_before} -> {r.sigma_after}, det {r.det_before} -> {r.det_after}"
      f" (predicted {r.det_predicted})")

# %%
# Over many random pairs the jump is always 0 or +2.

rng = random.Random(7)
jumps = Counter()
for _ in range(300):
    M = random_nonsingular(rng, 6, -5, 5)
    u = [rng.randint(-2, 2) for _ in range(M.size)]
    try:
        d = rank_one_diagnostics(M, u)
    except ValueError:
        continue  # the update landed on a singular matrix
    assert d.identity_holds
    jumps[d.delta_sigma] += 1
print(dict(sorted(jumps.items())))
