"""Randomised property suites, reproducible from a single seed.

Every trial draws from its own ``random.Random`` seeded with
``"{seed}/{suite}/{trial}"``, so results do not depend on trial order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from .bounds import MOVE_BOUNDS, rank_one_diagnostics
from .goeritz import EquivariantGoeritz, det_identity, minus_part, plus_part
from .matrix import SymIntMatrix, det, rank
from .moves import (
    TypeA1, TypeA2, TypeB, TypeC, apply_move_matrix, move_kind, resolution_form,
)
from .signature import equivariant_signature, inertia, sigma_series, signature_jones


def trial_rng(seed: int, suite: str, trial: int) -> random.Random:
    return random.Random(f"{seed}/{suite}/{trial}")


def random_symmetric(rng: random.Random, m: int, lo: int, hi: int,
                     density: float = 1.0) -> SymIntMatrix:
    rows = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            if rng.random() < density:
                rows[i][j] = rows[j][i] = rng.randint(lo, hi)
    return SymIntMatrix(rows)


def random_nonsingular(rng: random.Random, max_m: int, lo: int, hi: int) -> SymIntMatrix:
    """Nonsingular symmetric matrix; sparse draws exercise zero pivots."""
    while True:
        m = rng.randint(1, max_m)
        density = rng.choice((1.0, 0.6, 0.3))
        M = random_symmetric(rng, m, lo, hi, density)
        if det(M) != 0:
            return M


def random_goeritz(rng: random.Random, max_n: int, lo: int = -5, hi: int = 5) -> EquivariantGoeritz:
    n = rng.randint(1, max_n)
    return EquivariantGoeritz(random_symmetric(rng, n, lo, hi), random_symmetric(rng, n, lo, hi),
                              2 * rng.randint(-4, 4))


def nondegenerate(G: EquivariantGoeritz) -> bool:
    return det(plus_part(G)) != 0 and det(minus_part(G)) != 0


def random_move(rng: random.Random, n: int, kind: str):
    sign = rng.choice((1, -1))
    color = rng.choice(("unicolored", "bicolored"))
    eps = rng.choice((1, -1)) if color == "bicolored" else None
    if kind == "B":
        return TypeB(rng.randint(1, n), sign)
    if kind == "A1":
        return TypeA1(rng.randint(1, n), sign, color, eps)
    if kind == "A2":
        mixed = n == 1 or rng.random() < 0.25
        if mixed:
            i, j = rng.randint(1, n), rng.randint(1, n)
        else:
            i, j = rng.sample(range(1, n + 1), 2)
        return TypeA2(i, j, sign, color, eps, mixed)
    if kind == "C":
        return TypeC(sign, color)
    raise ValueError(kind)


def random_move_case(rng: random.Random, kind: str, max_n: int):
    """A nondegenerate form and a move of ``kind`` keeping it nondegenerate."""
    while True:
        G = random_goeritz(rng, max_n)
        if not nondegenerate(G):
            continue
        m = random_move(rng, G.n, kind)
        H = apply_move_matrix(G, m)
        if nondegenerate(H):
            return G, m, H


@dataclass
class SuiteResult:
    name: str
    trials: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _run(name: str, trials: int, seed: int, check: Callable[[random.Random], Optional[str]]):
    res = SuiteResult(name)
    for t in range(trials):
        msg = check(trial_rng(seed, name, t))
        res.trials += 1
        if msg:
            res.failures.append(f"trial {t}: {msg}")
    return res


def check_det_identity(rng, max_n=6):
    G = random_goeritz(rng, max_n)
    chk = det_identity(G)
    if not chk.identity_holds:
        return f"det(M+)det(M-)={chk.det_plus * chk.det_minus} != 4^n det(M)"


def check_method_agreement(rng, max_m=12):
    M = random_nonsingular(rng, max_m, -20, 20)
    inn = inertia(M)
    if inn.z != M.size - rank(M):
        return "nullity disagrees with rank"
    jones = signature_jones(M)
    if jones != inn.signature:
        return f"jones {jones} != inertia {inn.signature} for {M.tolist()}"
    perm = list(range(M.size))
    rng.shuffle(perm)
    other = signature_jones(M, sigma_series(M, perm))
    if other != jones:
        return f"signature depends on the sigma-series ({other} vs {jones})"


def check_type_c_resolution(rng, max_n=6):
    G = random_goeritz(rng, max_n)
    m = random_move(rng, G.n, "C")
    H = apply_move_matrix(G, m)
    R = minus_part(resolution_form(H))
    if any(R.matvec([1] * R.size)):
        return "all-ones vector not in the kernel of the resolution's minus part"
    if det(minus_part(H)) != 2 * m.sign * det(minus_part(G)):
        return "det(M_C-) != 2 sign det(M-)"


def check_move_bound(rng, kind: str, max_n=6):
    G, m, H = random_move_case(rng, kind, max_n)
    delta = equivariant_signature(H) - equivariant_signature(G)
    if abs(delta) > MOVE_BOUNDS[kind]:
        return f"|Δσ̃|={abs(delta)} exceeds {MOVE_BOUNDS[kind]} for {move_kind(m)}"
    if kind in ("B", "C") and delta % 2:
        return "odd Δσ̃ for a type B/C move"
    if kind == "B" and minus_part(H) != minus_part(G):
        return "type B changed M-"
    if kind == "A2":
        u = [0] * G.n
        u[m.i - 1] += 1
        u[m.j - 1] -= 1
        w = [0] * G.n
        w[m.i - 1] += 1
        w[m.j - 1] += 1
        step = SymIntMatrix.outer(u, 4 * m.sign)
        if m.mixed:
            want_plus = plus_part(G) + SymIntMatrix.outer(w, 4 * m.sign)
        else:
            want_plus = plus_part(G) + step
        if plus_part(H) != want_plus or minus_part(H) != minus_part(G) + step:
            return "type A2 is not the rank-one update of the eigenspace parts"


def check_rank_one(rng, max_m=8):
    while True:
        M = random_nonsingular(rng, max_m, -6, 6)
        u = [rng.randint(-2, 2) for _ in range(M.size)]
        if det(M + SymIntMatrix.outer(u, 4)) != 0:
            break
    d = rank_one_diagnostics(M, u, 4)
    if not d.interlacing_ok:
        return f"Δσ={d.delta_sigma}, p {d.p_before}->{d.p_after}"
    if not d.identity_holds:
        return "rank-one determinant identity failed"


def run_all(trials: int = 200, seed: int = 0, max_n: int = 6) -> list[SuiteResult]:
    out = [
        _run("det-identity", trials, seed, lambda r: check_det_identity(r, max_n)),
        _run("method-agreement", trials, seed, lambda r: check_method_agreement(r, 2 * max_n)),
        _run("type-c-resolution", trials, seed, lambda r: check_type_c_resolution(r, max_n)),
    ]
    for kind in ("A1", "A2", "B", "C"):
        out.append(_run(f"bound-{kind}", trials, seed,
                        lambda r, k=kind: check_move_bound(r, k, max_n)))
    out.append(_run("rank-one", trials, seed, lambda r: check_rank_one(r, max(2, max_n + 2))))
    return out
