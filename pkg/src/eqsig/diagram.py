"""Symmetric knot diagrams as incidence data.

A diagram is described by its crossings only: for each crossing, the two
white regions at its corners, the checkerboard incidence number ``eta``,
whether it is bicolored (the two arcs exchanged by the involution cross
there) with its sign ``epsilon``, where it sits relative to the axis, and
its image under the involution. No planar embedding is stored or checked.

White regions other than the one containing ``h'`` come in exchanged pairs
``a_i`` / ``a'_i``; that one region is ``fixed`` and is deleted from the
Goeritz matrix.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional

from .goeritz import EquivariantGoeritz
from .matrix import SymIntMatrix


class DiagramError(ValueError):
    """Raised when an operation receives an invalid or non-admissible diagram."""


class Locus(enum.Enum):
    OFF_AXIS = "off-axis"
    ON_AXIS_H = "on-axis-h"
    ON_AXIS_H_PRIME = "on-axis-h'"

    @property
    def on_axis(self) -> bool:
        return self is not Locus.OFF_AXIS


class Color(enum.Enum):
    UNICOLORED = "unicolored"
    BICOLORED = "bicolored"


_REGION_RE = re.compile(r"^a([1-9][0-9]*)('?)$")


@dataclass(frozen=True, order=True)
class Region:
    """A white region: ``a<i>`` (plus side), ``a<i>'`` (minus side) or ``fixed``."""

    index: int  # 0 for the fixed region
    minus: bool = False

    @classmethod
    def plus(cls, i: int) -> "Region":
        return cls(i, False)

    @classmethod
    def prime(cls, i: int) -> "Region":
        return cls(i, True)

    @classmethod
    def parse(cls, token: str) -> "Region":
        if token == "fixed":
            return FIXED
        m = _REGION_RE.match(token)
        if not m:
            raise DiagramError(f"bad region token {token!r}")
        return cls(int(m.group(1)), bool(m.group(2)))

    @property
    def is_fixed(self) -> bool:
        return self.index == 0

    def rho(self) -> "Region":
        if self.is_fixed:
            return self
        return Region(self.index, not self.minus)

    def __str__(self) -> str:
        if self.is_fixed:
            return "fixed"
        return f"a{self.index}" + ("'" if self.minus else "")


FIXED = Region(0, False)


def _pair(r1: Region, r2: Region) -> tuple[Region, Region]:
    return (r1, r2) if r1 <= r2 else (r2, r1)


@dataclass(frozen=True)
class Crossing:
    id: str
    regions: tuple[Region, Region]
    eta: int
    color: Color = Color.UNICOLORED
    epsilon: Optional[int] = None
    locus: Locus = Locus.OFF_AXIS
    partner: str = ""

    def __post_init__(self):
        r1, r2 = self.regions
        object.__setattr__(self, "regions", _pair(r1, r2))
        if not self.partner:
            object.__setattr__(self, "partner", self.id)

    @property
    def touches_fixed(self) -> bool:
        return any(r.is_fixed for r in self.regions)

    @property
    def is_loop(self) -> bool:
        """Both white corners lie in the same region."""
        return self.regions[0] == self.regions[1]


@dataclass(frozen=True)
class SymmetricDiagram:
    n: int
    crossings: tuple[Crossing, ...] = ()
    label: Optional[str] = None
    _by_id: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        object.__setattr__(self, "_by_id", {c.id: c for c in self.crossings})

    def crossing(self, cid: str) -> Crossing:
        try:
            return self._by_id[cid]
        except KeyError:
            raise DiagramError(f"no crossing with id {cid!r}") from None

    def with_crossings(self, crossings: Iterable[Crossing], n: Optional[int] = None):
        return SymmetricDiagram(self.n if n is None else n, tuple(crossings), self.label)


def off_axis_pair(cid: str, r1, r2, eta: int, epsilon: Optional[int] = None,
                  partner_id: Optional[str] = None) -> tuple[Crossing, Crossing]:
    """A crossing and its image under the involution.

    Region arguments may be :class:`Region` objects or tokens like ``"a2'"``.
    Passing ``epsilon`` makes both crossings bicolored with that sign.
    """
    r1 = r1 if isinstance(r1, Region) else Region.parse(r1)
    r2 = r2 if isinstance(r2, Region) else Region.parse(r2)
    pid = partner_id or cid + "'"
    color = Color.UNICOLORED if epsilon is None else Color.BICOLORED
    c = Crossing(cid, (r1, r2), eta, color, epsilon, Locus.OFF_AXIS, pid)
    d = Crossing(pid, (r1.rho(), r2.rho()), eta, color, epsilon, Locus.OFF_AXIS, cid)
    return c, d


def on_axis(cid: str, r1, r2, eta: int, locus: Locus = Locus.ON_AXIS_H,
            epsilon: Optional[int] = None) -> Crossing:
    r1 = r1 if isinstance(r1, Region) else Region.parse(r1)
    r2 = r2 if isinstance(r2, Region) else Region.parse(r2)
    color = Color.UNICOLORED if epsilon is None else Color.BICOLORED
    return Crossing(cid, (r1, r2), eta, color, epsilon, locus, cid)


@dataclass(frozen=True)
class Violation:
    crossing: Optional[str]
    message: str

    def __str__(self) -> str:
        return f"{self.crossing}: {self.message}" if self.crossing else self.message


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate(d: SymmetricDiagram) -> ValidationReport:
    """Check every structural invariant; violations are returned, not raised."""
    out: list[Violation] = []
    if not isinstance(d.n, int) or d.n < 0:
        out.append(Violation(None, f"n must be a non-negative integer, got {d.n!r}"))
        return ValidationReport(tuple(out))
    seen = set()
    for c in d.crossings:
        if c.id in seen:
            out.append(Violation(c.id, "duplicate crossing id"))
        seen.add(c.id)
    by_id = {c.id: c for c in d.crossings}

    for c in d.crossings:
        bad = out.append
        if c.eta not in (1, -1):
            bad(Violation(c.id, f"eta must be +1 or -1, got {c.eta!r}"))
        if not isinstance(c.color, Color):
            bad(Violation(c.id, f"unknown color {c.color!r}"))
        if not isinstance(c.locus, Locus):
            bad(Violation(c.id, f"unknown locus {c.locus!r}"))
        if c.color is Color.BICOLORED:
            if c.epsilon not in (1, -1):
                bad(Violation(c.id, "bicolored crossing needs epsilon = +1 or -1"))
        elif c.epsilon is not None:
            bad(Violation(c.id, "epsilon is only allowed on bicolored crossings"))
        for r in c.regions:
            if not r.is_fixed and not 1 <= r.index <= d.n:
                bad(Violation(c.id, f"region {r} out of range 1..{d.n}"))

        p = by_id.get(c.partner)
        if p is None:
            bad(Violation(c.id, f"partner {c.partner!r} does not exist"))
            continue
        if p.partner != c.id:
            bad(Violation(c.id, "partner not involutive"))
        if isinstance(c.locus, Locus):
            if c.locus.on_axis and p.id != c.id:
                bad(Violation(c.id, "on-axis crossing must be its own partner"))
            if not c.locus.on_axis and p.id == c.id:
                bad(Violation(c.id, "off-axis crossing cannot be its own partner"))
        if p.eta != c.eta:
            bad(Violation(c.id, "η not ρ-invariant"))
        if p.color != c.color:
            bad(Violation(c.id, "color not ρ-invariant"))
        if p.epsilon != c.epsilon:
            bad(Violation(c.id, "ε not ρ-invariant"))
        if p.locus != c.locus:
            bad(Violation(c.id, "locus not ρ-invariant"))
        if p.regions != _pair(c.regions[0].rho(), c.regions[1].rho()):
            bad(Violation(c.id, "partner regions are not the ρ-image"))
    return ValidationReport(tuple(out))


def _require_valid(d: SymmetricDiagram) -> None:
    report = validate(d)
    if not report.ok:
        raise DiagramError("invalid diagram: " + "; ".join(map(str, report.violations)))


def is_admissible(d: SymmetricDiagram) -> bool:
    """No crossing lies on ``h'``."""
    _require_valid(d)
    return all(c.locus is not Locus.ON_AXIS_H_PRIME for c in d.crossings)


def _require_admissible(d: SymmetricDiagram) -> None:
    if not is_admissible(d):
        bad = [c.id for c in d.crossings if c.locus is Locus.ON_AXIS_H_PRIME]
        raise DiagramError(f"diagram is not admissible: crossings on h': {bad}")


def correction_term(d: SymmetricDiagram) -> int:
    """``e(D) = -Σ ε(c)`` over bicolored crossings off the axis."""
    _require_admissible(d)
    return -sum(
        c.epsilon for c in d.crossings
        if c.color is Color.BICOLORED and c.locus is Locus.OFF_AXIS
    )


def _slot(r: Region, n: int) -> int:
    if r.is_fixed:
        return 2 * n
    return r.index - 1 + (n if r.minus else 0)


def full_goeritz(d: SymmetricDiagram) -> list[list[int]]:
    """The unreduced matrix over ``a_1..a_n, a'_1..a'_n, fixed``; every row sums to zero."""
    n = d.n
    m = 2 * n + 1
    g = [[0] * m for _ in range(m)]
    for c in d.crossings:
        if c.is_loop:
            continue
        i, j = _slot(c.regions[0], n), _slot(c.regions[1], n)
        g[i][j] -= c.eta
        g[j][i] -= c.eta
    for i in range(m):
        g[i][i] = -sum(g[i][k] for k in range(m) if k != i)
    return g


def goeritz(d: SymmetricDiagram) -> EquivariantGoeritz:
    """Reduced equivariant Goeritz form (fixed region deleted) plus ``e(D)``."""
    _require_admissible(d)
    if d.n == 0:
        raise DiagramError("diagram has no paired regions; the reduced Goeritz matrix is empty")
    n = d.n
    g = full_goeritz(d)
    A = [row[:n] for row in g[:n]]
    B = [row[n:2 * n] for row in g[:n]]
    # validity guarantees the lower blocks mirror the upper ones
    assert [row[n:2 * n] for row in g[n:2 * n]] == A
    return EquivariantGoeritz(SymIntMatrix(A), SymIntMatrix(B), correction_term(d), d.label)


def relabel_pairs(d: SymmetricDiagram, perm: dict[int, int]) -> SymmetricDiagram:
    """Rename pair index ``i`` to ``perm[i]`` on every crossing."""

    def move(r: Region) -> Region:
        return r if r.is_fixed else Region(perm[r.index], r.minus)

    return d.with_crossings(
        replace(c, regions=(move(c.regions[0]), move(c.regions[1]))) for c in d.crossings
    )
