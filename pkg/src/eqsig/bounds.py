"""Per-move signature bounds and unknotting-number lower bounds."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .goeritz import EquivariantGoeritz
from .matrix import SymIntMatrix, det, solve
from .moves import MoveSpec, apply_move_matrix, move_kind
from .signature import SingularFormError, equivariant_signature, inertia

#: largest possible |Δσ̃| for one move of each kind
MOVE_BOUNDS = {"A1": 6, "A2": 6, "B": 2, "C": 2}

CAVEATS = {
    "uA_min": "lower bound for the type A equivariant unknotting number",
    "uB_min": "applies only to homotopies whose self-intersections are all directed type B "
              "(admissible diagrams)",
    "uC_min": "applies only to (1,2)-knots whose axis is the core of a handlebody of the "
              "(1,2)-decomposition",
    "homotopy_selfintersections_min": "applies to homotopies that never cross the direction",
}


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class LowerBounds:
    sigma: int
    uA_min: int
    uB_min: int
    uC_min: int
    homotopy_selfintersections_min: int
    caveats: dict = field(default_factory=lambda: dict(CAVEATS), compare=False)


def lower_bounds(G_or_sigma) -> LowerBounds:
    """Lower bounds implied by ``|σ̃| <= 3 u_A``, ``2 u_B``, ``2 u_C``.

    Accepts a Goeritz form or an already computed equivariant signature.
    """
    if isinstance(G_or_sigma, EquivariantGoeritz):
        sigma = equivariant_signature(G_or_sigma)
    else:
        sigma = int(G_or_sigma)
    a = abs(sigma)
    return LowerBounds(sigma, _ceil_div(a, 3), _ceil_div(a, 2), _ceil_div(a, 2),
                       _ceil_div(a, 3))


def delta_sigma(G: EquivariantGoeritz, m: MoveSpec) -> int:
    return equivariant_signature(apply_move_matrix(G, m)) - equivariant_signature(G)


def check_move_bound(m, delta: int, max_delta: Optional[int] = None) -> bool:
    """``|delta|`` within the bound for the move kind (optionally tightened)."""
    kind = m if isinstance(m, str) else move_kind(m)
    bound = MOVE_BOUNDS[kind]
    if max_delta is not None:
        bound = min(bound, max_delta)
    return abs(delta) <= bound


@dataclass(frozen=True)
class BoundStep:
    move: MoveSpec
    sigma_before: int
    sigma_after: int
    bound: int

    @property
    def delta(self) -> int:
        return self.sigma_after - self.sigma_before

    @property
    def compliant(self) -> bool:
        return abs(self.delta) <= self.bound


@dataclass(frozen=True)
class BoundReport:
    initial_sigma: int
    steps: tuple[BoundStep, ...]
    lower_bounds: LowerBounds
    label: Optional[str] = None

    @property
    def final_sigma(self) -> int:
        return self.steps[-1].sigma_after if self.steps else self.initial_sigma

    @property
    def trajectory(self) -> list[int]:
        return [self.initial_sigma] + [s.sigma_after for s in self.steps]

    @property
    def compliant(self) -> bool:
        return all(s.compliant for s in self.steps)


def verify_sequence(G: EquivariantGoeritz, moves: Sequence[MoveSpec],
                    max_delta: Optional[int] = None) -> BoundReport:
    """Track σ̃ through ``moves`` and check every step against its bound.

    ``max_delta`` tightens every per-move bound; it exists to exercise the
    violation path and never loosens a bound.
    """
    sigma = equivariant_signature(G)
    first = sigma
    steps = []
    for m in moves:
        G = apply_move_matrix(G, m)
        after = equivariant_signature(G)
        bound = MOVE_BOUNDS[move_kind(m)]
        if max_delta is not None:
            bound = min(bound, max_delta)
        steps.append(BoundStep(m, sigma, after, bound))
        sigma = after
    return BoundReport(first, tuple(steps), lower_bounds(first), G.label)


def apply_sequence(G: EquivariantGoeritz, moves: Sequence[MoveSpec]) -> EquivariantGoeritz:
    for m in moves:
        G = apply_move_matrix(G, m)
    return G


@dataclass(frozen=True)
class RankOneDiagnostics:
    sigma_before: int
    sigma_after: int
    p_before: int
    p_after: int
    det_before: int
    det_after: int
    det_predicted: Fraction  # det(M) * (1 + t uᵀ M⁻¹ u)

    @property
    def delta_sigma(self) -> int:
        return self.sigma_after - self.sigma_before

    @property
    def identity_holds(self) -> bool:
        return self.det_predicted == self.det_after

    @property
    def interlacing_ok(self) -> bool:
        return self.delta_sigma in (0, 2) and self.p_after >= self.p_before


def rank_one_diagnostics(M: SymIntMatrix, u: Sequence[int], t: int = 4) -> RankOneDiagnostics:
    """Compare ``M`` with the positive semidefinite update ``M + t·u·uᵀ``."""
    if t <= 0:
        raise ValueError("t must be positive")
    if not isinstance(M, SymIntMatrix):
        M = SymIntMatrix(M)
    if len(u) != M.size:
        raise ValueError("u has the wrong length")
    N = M + SymIntMatrix.outer(u, t)
    before, after = inertia(M), inertia(N)
    if before.z or after.z:
        raise SingularFormError("rank-one diagnostics need M and M + t·u·uᵀ nonsingular")
    d0 = det(M)
    x = solve(M, u)
    quad = sum(Fraction(a) * b for a, b in zip(u, x))
    return RankOneDiagnostics(before.signature, after.signature, before.p, after.p,
                              d0, det(N), d0 * (1 + t * quad))
