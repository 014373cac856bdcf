"""Exact signatures of symmetric integer matrices.

Two independent routes are provided:

* :func:`inertia` diagonalises by rational congruence (Sylvester's law of
  inertia) and always succeeds;
* :func:`signature_jones` sums the signs of products of consecutive
  principal minors along a sigma-series, and is used as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .goeritz import EquivariantGoeritz, minus_part, plus_part
from .matrix import SymIntMatrix, det, rank


class SingularFormError(ValueError):
    """A form that must be nondegenerate is singular (e.g. non-knot input)."""


@dataclass(frozen=True)
class Inertia:
    p: int
    q: int
    z: int

    @property
    def signature(self) -> int:
        return self.p - self.q

    @property
    def size(self) -> int:
        return self.p + self.q + self.z


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def inertia(M: SymIntMatrix) -> Inertia:
    """Counts of positive, negative and zero eigenvalues of ``M``."""
    if not isinstance(M, SymIntMatrix):
        M = SymIntMatrix(M)
    m = M.size
    a = [[Fraction(x) for x in row] for row in M.rows]
    p = q = z = 0
    for k in range(m):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, m) if a[k][j] != 0), None)
            if j is None:
                # row k is zero inside the active block: it splits off
                z += 1
                continue
            # t^2 a_jj + 2 t a_kj vanishes for at most one of t = 1, 2
            t = 1 if a[j][j] + 2 * a[k][j] != 0 else 2
            for c in range(k, m):
                a[k][c] += t * a[j][c]
            for r in range(k, m):
                a[r][k] += t * a[r][j]
        piv = a[k][k]
        if piv > 0:
            p += 1
        else:
            q += 1
        for i in range(k + 1, m):
            f = a[i][k] / piv
            if f:
                row_i, row_k = a[i], a[k]
                for c in range(k + 1, m):
                    row_i[c] -= f * row_k[c]
            a[i][k] = Fraction(0)
        for c in range(k + 1, m):
            a[k][c] = Fraction(0)
    return Inertia(p, q, z)


def signature(M: SymIntMatrix) -> int:
    return inertia(M).signature


@dataclass(frozen=True)
class SigmaSeries:
    """Nested principal submatrices ``Δ_1 ⊂ … ⊂ Δ_m``.

    ``order[i-1]`` is the index added at step ``i``, so ``Δ_i`` selects
    ``order[:i]``. ``minors[i]`` is ``det Δ_i`` with ``minors[0] == 1``.
    """

    order: tuple[int, ...]
    minors: tuple[int, ...]

    def selection(self, i: int) -> tuple[int, ...]:
        return tuple(sorted(self.order[:i]))

    def is_valid(self, M: SymIntMatrix) -> bool:
        m = M.size
        if sorted(self.order) != list(range(m)) or len(self.minors) != m + 1:
            return False
        if self.minors[0] != 1:
            return False
        for i in range(1, m + 1):
            if det(M.principal(self.selection(i))) != self.minors[i]:
                return False
        r = rank(M)
        return all(
            not (self.minors[i] == 0 and self.minors[i + 1] == 0)
            for i in range(min(r, m))
        )


def sigma_series(M: SymIntMatrix, preference: Optional[Sequence[int]] = None) -> SigmaSeries:
    """Build a sigma-series for a nonsingular symmetric matrix.

    Extensions are tried in ``preference`` order (ascending by default),
    nonsingular ones first; a singular step is allowed only right after a
    nonsingular one. Dead ends are backtracked and memoised.
    """
    if not isinstance(M, SymIntMatrix):
        M = SymIntMatrix(M)
    m = M.size
    if det(M) == 0:
        raise SingularFormError("sigma_series needs a nonsingular matrix")
    order = list(range(m)) if preference is None else list(preference)
    if sorted(order) != list(range(m)):
        raise ValueError("preference must be a permutation of the indices")

    dead: set = set()

    def extend(chosen: list[int], last_singular: bool):
        if len(chosen) == m:
            return []
        key = (frozenset(chosen), last_singular)
        if key in dead:
            return None
        singular = []
        for j in order:
            if j in chosen:
                continue
            d = det(M.principal(sorted(chosen + [j])))
            if d == 0:
                singular.append(j)
                continue
            rest = extend(chosen + [j], False)
            if rest is not None:
                return [(j, d)] + rest
        if not last_singular:
            for j in singular:
                rest = extend(chosen + [j], True)
                if rest is not None:
                    return [(j, 0)] + rest
        dead.add(key)
        return None

    steps = extend([], False)
    if steps is None:  # pragma: no cover - a series always exists
        raise RuntimeError("no sigma-series found")
    return SigmaSeries(tuple(j for j, _ in steps), (1,) + tuple(d for _, d in steps))


def signature_jones(M: SymIntMatrix, series: Optional[SigmaSeries] = None) -> int:
    """Signature as ``Σ sign(det Δ_{i-1} · det Δ_i)`` over a sigma-series."""
    if series is None:
        series = sigma_series(M)
    d = series.minors
    return sum(_sign(d[i - 1] * d[i]) for i in range(1, len(d)))


@dataclass(frozen=True)
class EquivariantSignature:
    sigma_plus: int
    sigma_minus: int
    e: int

    @property
    def value(self) -> int:
        return self.sigma_plus - self.sigma_minus - self.e


def equivariant_parts(G: EquivariantGoeritz, method: str = "inertia") -> EquivariantSignature:
    """Signatures of both eigenspace parts together with ``e``.

    ``method`` is ``"inertia"`` (default) or ``"jones"``.
    """
    sigs = []
    for name, part in (("M+", plus_part(G)), ("M-", minus_part(G))):
        if method == "inertia":
            inn = inertia(part)
            if inn.z:
                raise SingularFormError(f"{name} is singular (nullity {inn.z})")
            sigs.append(inn.signature)
        elif method == "jones":
            try:
                sigs.append(signature_jones(part))
            except SingularFormError:
                raise SingularFormError(f"{name} is singular") from None
        else:
            raise ValueError(f"unknown method {method!r}")
    return EquivariantSignature(sigs[0], sigs[1], G.e)


def equivariant_signature(G: EquivariantGoeritz, method: str = "inertia") -> int:
    """``σ(M+) - σ(M-) - e``."""
    return equivariant_parts(G, method).value
