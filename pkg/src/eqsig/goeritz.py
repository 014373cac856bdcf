"""The equivariant Goeritz form and its eigenspace parts.

A Goeritz form of a strongly invertible knot, written in the paired-region
basis ``a_1..a_n, a'_1..a'_n``, has the block shape ``[[A, B], [B, A]]``.
Only the two ``n x n`` blocks and the correction term are stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .matrix import SymIntMatrix, det


@dataclass(frozen=True)
class TypeCProvenance:
    """Data recorded by a type C extension, needed to rebuild its split-link resolution."""

    v: tuple[int, ...]
    S: int
    s: int


@dataclass(frozen=True)
class EquivariantGoeritz:
    A: SymIntMatrix
    B: SymIntMatrix
    e: int = 0
    label: Optional[str] = None
    type_c: Optional[TypeCProvenance] = field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.A, SymIntMatrix):
            object.__setattr__(self, "A", SymIntMatrix(self.A))
        if not isinstance(self.B, SymIntMatrix):
            object.__setattr__(self, "B", SymIntMatrix(self.B))
        if self.A.size != self.B.size:
            raise ValueError(
                f"A and B must have equal size, got {self.A.size} and {self.B.size}"
            )
        if isinstance(self.e, bool) or not isinstance(self.e, int):
            raise TypeError(f"correction term must be an integer, got {self.e!r}")

    @classmethod
    def from_blocks(cls, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]],
                    e: int = 0, label: Optional[str] = None) -> "EquivariantGoeritz":
        return cls(SymIntMatrix(A), SymIntMatrix(B), e, label)

    @property
    def n(self) -> int:
        return self.A.size

    def same_form(self, other: "EquivariantGoeritz") -> bool:
        """Blocks and correction term agree (labels and provenance ignored)."""
        return self.A == other.A and self.B == other.B and self.e == other.e


def full_matrix(G: EquivariantGoeritz) -> SymIntMatrix:
    """The ``2n x 2n`` matrix ``[[A, B], [B, A]]``."""
    a, b = G.A.rows, G.B.rows
    top = [ra + rb for ra, rb in zip(a, b)]
    bottom = [rb + ra for ra, rb in zip(a, b)]
    return SymIntMatrix(top + bottom)


def plus_part(G: EquivariantGoeritz) -> SymIntMatrix:
    """Form on the +1 eigenspace, in the basis ``a_i - a'_i``: ``2(A - B)``."""
    return (G.A - G.B).scale(2)


def minus_part(G: EquivariantGoeritz) -> SymIntMatrix:
    """Form on the -1 eigenspace, in the basis ``a_i + a'_i``: ``2(A + B)``."""
    return (G.A + G.B).scale(2)


@dataclass(frozen=True)
class DetIdentityCheck:
    det_plus: int
    det_minus: int
    det_full: int
    identity_holds: bool
    knot_like: bool  # |det M| odd (hence nonzero)


def det_identity(G: EquivariantGoeritz) -> DetIdentityCheck:
    dp = det(plus_part(G))
    dm = det(minus_part(G))
    df = det(full_matrix(G))
    return DetIdentityCheck(dp, dm, df, dp * dm == 4 ** G.n * df, df % 2 == 1)


def check_det_identity(G: EquivariantGoeritz) -> bool:
    """``det(M+) * det(M-) == 4**n * det(M)``, exactly.

    This holds for any symmetric blocks; whether ``|det M|`` is odd (as it
    must be for a knot) is reported separately by :func:`det_identity`.
    """
    return det_identity(G).identity_holds
