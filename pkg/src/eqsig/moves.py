"""Equivariant unknotting moves on Goeritz forms and on diagrams.

Matrix-level moves (:class:`TypeA1`, :class:`TypeA2`, :class:`TypeB`,
:class:`TypeC`) act on an :class:`~eqsig.goeritz.EquivariantGoeritz`.
Diagram-level moves (:class:`FlipA`, :class:`FlipB`, :class:`ContractC`)
act on a :class:`~eqsig.diagram.SymmetricDiagram`; :func:`move_projection`
translates the latter into the former so that

    goeritz(apply_move_diagram(d, m)) == apply_move_matrix(goeritz(d), move_projection(d, m))

Pair indices are 1-based throughout, as in region tokens ``a1``, ``a1'``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Union

from .diagram import (
    FIXED, Color, Crossing, DiagramError, Locus, Region, SymmetricDiagram,
    _require_admissible,
)
from .goeritz import EquivariantGoeritz, TypeCProvenance, full_matrix
from .matrix import SymIntMatrix


class MoveError(ValueError):
    """A move is malformed or does not apply to its target."""


def _check_sign(name: str, x) -> None:
    if x not in (1, -1) or isinstance(x, bool):
        raise MoveError(f"{name} must be +1 or -1, got {x!r}")


def _check_color(color, eps) -> Color:
    color = Color(color)
    if color is Color.BICOLORED:
        if eps is None:
            raise MoveError("eps is required for a bicolored move")
        _check_sign("eps", eps)
    elif eps is not None:
        raise MoveError("eps is only allowed for a bicolored move")
    return color


@dataclass(frozen=True)
class TypeB:
    """Crossing change on the axis, between ``a_k`` and ``a'_k``."""

    k: int
    sign: int

    def __post_init__(self):
        _check_sign("sign", self.sign)


@dataclass(frozen=True)
class TypeA1:
    """Pair of crossing changes between ``a_k`` (resp. ``a'_k``) and the fixed region."""

    k: int
    sign: int
    color: Color = Color.UNICOLORED
    eps: Optional[int] = None  # epsilon before the move

    def __post_init__(self):
        _check_sign("sign", self.sign)
        object.__setattr__(self, "color", _check_color(self.color, self.eps))


@dataclass(frozen=True)
class TypeA2:
    """Pair of crossing changes between two paired regions.

    With ``mixed=False`` the crossings join ``a_i``/``a_j`` and
    ``a'_i``/``a'_j``; with ``mixed=True`` they join ``a_i``/``a'_j`` and
    ``a'_i``/``a_j`` (then ``i == j`` is allowed).
    """

    i: int
    j: int
    sign: int
    color: Color = Color.UNICOLORED
    eps: Optional[int] = None
    mixed: bool = False

    def __post_init__(self):
        _check_sign("sign", self.sign)
        object.__setattr__(self, "color", _check_color(self.color, self.eps))
        if self.i == self.j and not self.mixed:
            raise MoveError("type A2 needs two distinct pair indices (i != j)")


@dataclass(frozen=True)
class TypeC:
    """Contraction of an axis arc, adding the pair ``a_{n+1}``, ``a'_{n+1}``."""

    sign: int
    color: Color = Color.UNICOLORED

    def __post_init__(self):
        _check_sign("sign", self.sign)
        object.__setattr__(self, "color", Color(self.color))


MoveSpec = Union[TypeA1, TypeA2, TypeB, TypeC]


def move_kind(m: MoveSpec) -> str:
    return {TypeA1: "A1", TypeA2: "A2", TypeB: "B", TypeC: "C"}[type(m)]


def inverse(m: MoveSpec) -> MoveSpec:
    """The move undoing ``m`` (type C has none)."""
    if isinstance(m, TypeB):
        return TypeB(m.k, -m.sign)
    if isinstance(m, (TypeA1, TypeA2)):
        eps = None if m.eps is None else -m.eps
        return replace(m, sign=-m.sign, eps=eps)
    raise MoveError("a type C move has no matrix-level inverse")


def _delta_e(color: Color, eps: Optional[int]) -> int:
    # both crossings of the pair switch sign; e = -Σε
    return 4 * eps if color is Color.BICOLORED else 0


def apply_move_matrix(G: EquivariantGoeritz, m: MoveSpec) -> EquivariantGoeritz:
    """Apply a move to the Goeritz blocks and correction term."""
    n = G.n
    A = G.A.tolist()
    B = G.B.tolist()
    e = G.e

    def index(k: int) -> int:
        if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= n:
            raise MoveError(f"pair index {k!r} out of range 1..{n}")
        return k - 1

    if isinstance(m, TypeB):
        k, d = index(m.k), m.sign
        A[k][k] += 2 * d
        B[k][k] -= 2 * d
    elif isinstance(m, TypeA1):
        k, d = index(m.k), m.sign
        A[k][k] += 2 * d
        e += _delta_e(m.color, m.eps)
    elif isinstance(m, TypeA2):
        i, j, d = index(m.i), index(m.j), m.sign
        A[i][i] += 2 * d
        A[j][j] += 2 * d
        if m.mixed:
            B[i][j] -= 2 * d
            B[j][i] -= 2 * d
        else:
            A[i][j] -= 2 * d
            A[j][i] -= 2 * d
        e += _delta_e(m.color, m.eps)
    elif isinstance(m, TypeC):
        if n < 1:
            raise MoveError("type C needs n >= 1")
        s = m.sign
        # the a_i/fixed contacts move to a_i/a_{n+1}: rows of the full matrix sum to zero
        v = [-(sum(A[i]) + sum(B[i])) for i in range(n)]
        S = sum(v)
        A = [row + [vi] for row, vi in zip(A, v)] + [v + [s - S]]
        B = [row + [0] for row in B] + [[0] * (n + 1)]
        if m.color is Color.BICOLORED:
            e -= 2 * s
        return EquivariantGoeritz(SymIntMatrix(A), SymIntMatrix(B), e, G.label,
                                  TypeCProvenance(tuple(v), S, s))
    else:
        raise MoveError(f"not a move: {m!r}")
    return EquivariantGoeritz(SymIntMatrix(A), SymIntMatrix(B), e, G.label)


def resolution_form(G_C: EquivariantGoeritz) -> EquivariantGoeritz:
    """Goeritz form of the split link obtained by resolving both new type C crossings."""
    prov = G_C.type_c
    if prov is None:
        raise MoveError("form does not come from a type C move")
    A = G_C.A.tolist()
    A[-1][-1] = -prov.S
    return EquivariantGoeritz(SymIntMatrix(A), G_C.B, G_C.e, G_C.label)


def resolution_matrix(G_C: EquivariantGoeritz) -> SymIntMatrix:
    """Full ``2(n+1)`` matrix of the split-link resolution (new diagonals ``-S``)."""
    return full_matrix(resolution_form(G_C))


# diagram level


@dataclass(frozen=True)
class FlipA:
    crossing: str


@dataclass(frozen=True)
class FlipB:
    crossing: str


@dataclass(frozen=True)
class ContractC:
    sign: int
    color: Color = Color.UNICOLORED

    def __post_init__(self):
        _check_sign("sign", self.sign)
        object.__setattr__(self, "color", Color(self.color))


DiagramMove = Union[FlipA, FlipB, ContractC]


def _flip_b_target(d: SymmetricDiagram, cid: str) -> Crossing:
    c = d.crossing(cid)
    if c.locus is not Locus.ON_AXIS_H:
        raise DiagramError(
            f"type B move needs a crossing on the direction h, {cid!r} is {c.locus.value}"
        )
    r1, r2 = c.regions
    if r1.is_fixed or r1.index != r2.index or r1.minus == r2.minus:
        raise DiagramError(
            f"type B move on {cid!r}: only crossings between a_k and a_k' are supported"
        )
    return c


def _flip_a_target(d: SymmetricDiagram, cid: str) -> Crossing:
    c = d.crossing(cid)
    if c.locus is not Locus.OFF_AXIS:
        raise DiagramError(f"type A move needs an off-axis crossing, {cid!r} is {c.locus.value}")
    if c.is_loop:
        raise DiagramError(f"crossing {cid!r} is nugatory (one white region at both corners)")
    return c


def _fresh_id(taken: set, base: str) -> str:
    cid, k = base, 0
    while cid in taken or cid + "'" in taken:
        k += 1
        cid = f"{base}_{k}"
    return cid


def apply_move_diagram(d: SymmetricDiagram, m: DiagramMove) -> SymmetricDiagram:
    _require_admissible(d)
    if isinstance(m, FlipB):
        c = _flip_b_target(d, m.crossing)
        return d.with_crossings(
            replace(x, eta=-x.eta) if x.id == c.id else x for x in d.crossings
        )
    if isinstance(m, FlipA):
        c = _flip_a_target(d, m.crossing)
        ids = {c.id, c.partner}

        def flip(x: Crossing) -> Crossing:
            eps = -x.epsilon if x.color is Color.BICOLORED else x.epsilon
            return replace(x, eta=-x.eta, epsilon=eps)

        return d.with_crossings(flip(x) if x.id in ids else x for x in d.crossings)
    if isinstance(m, ContractC):
        k = d.n + 1
        new_plus, new_minus = Region.plus(k), Region.prime(k)

        def transfer(x: Crossing) -> Crossing:
            if not x.touches_fixed or x.is_loop:
                return x
            other = x.regions[1] if x.regions[0].is_fixed else x.regions[0]
            return replace(x, regions=(other, new_minus if other.minus else new_plus))

        crossings = [transfer(x) for x in d.crossings]
        cid = _fresh_id({x.id for x in crossings}, f"C{k}")
        eps = m.sign if m.color is Color.BICOLORED else None
        pid = cid + "'"
        crossings.append(Crossing(cid, (new_plus, FIXED), m.sign, m.color, eps,
                                  Locus.OFF_AXIS, pid))
        crossings.append(Crossing(pid, (new_minus, FIXED), m.sign, m.color, eps,
                                  Locus.OFF_AXIS, cid))
        return d.with_crossings(crossings, n=k)
    raise MoveError(f"not a diagram move: {m!r}")


def move_projection(d: SymmetricDiagram, m: DiagramMove) -> MoveSpec:
    """Matrix-level move with the same effect on the Goeritz form as ``m`` on ``d``."""
    _require_admissible(d)
    if isinstance(m, FlipB):
        c = _flip_b_target(d, m.crossing)
        return TypeB(c.regions[0].index, -c.eta)
    if isinstance(m, FlipA):
        c = _flip_a_target(d, m.crossing)
        r1, r2 = c.regions
        sign = -c.eta
        if r1.is_fixed or r2.is_fixed:
            other = r2 if r1.is_fixed else r1
            return TypeA1(other.index, sign, c.color, c.epsilon)
        if r1.minus == r2.minus:
            i, j = sorted((r1.index, r2.index))
            return TypeA2(i, j, sign, c.color, c.epsilon)
        plus, minus = (r2, r1) if r1.minus else (r1, r2)
        return TypeA2(plus.index, minus.index, sign, c.color, c.epsilon, mixed=True)
    if isinstance(m, ContractC):
        return TypeC(m.sign, m.color)
    raise MoveError(f"not a diagram move: {m!r}")
