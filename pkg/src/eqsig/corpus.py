"""Worked examples: Goeritz forms of 6_1, 5_1 and 9_40 and of the knots
obtained from them by single equivariant moves.

Blocks are transcribed from printed matrices. ``expected`` holds the values
the engines must reproduce; ``stated`` holds a printed value only where it
disagrees with what the definition gives for the printed matrices.

The diagrams are incidence-level reconstructions: each realises exactly the
transcribed blocks and correction term, so they serve as diagram-level test
fixtures, not as faithful drawings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .diagram import Locus, SymmetricDiagram, off_axis_pair, on_axis
from .goeritz import EquivariantGoeritz
from .moves import ContractC, DiagramMove, FlipA, FlipB


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    goeritz: EquivariantGoeritz
    expected: dict  # sigma_plus, sigma_minus, e, sigma_tilde
    source: str
    printed_plus: Optional[list] = None
    printed_minus: Optional[list] = None
    stated: dict = field(default_factory=dict)
    derived_from: Optional[tuple[str, str]] = None  # (base entry, move script)
    note: Optional[str] = None

    @property
    def has_discrepancy(self) -> bool:
        return bool(self.stated)

    def notes_text(self) -> str:
        exp = self.expected
        parts = [
            f"{self.source}. expected: sigma(M+)={exp['sigma_plus']}, "
            f"sigma(M-)={exp['sigma_minus']}, e={exp['e']}, "
            f"equivariant signature={exp['sigma_tilde']}"
        ]
        if self.derived_from:
            parts.append(f"obtained from {self.derived_from[0]} by: {self.derived_from[1]}")
        if self.note:
            parts.append(self.note)
        return ". ".join(parts)


def _G(name, A, B, e):
    return EquivariantGoeritz.from_blocks(A, B, e, name)


_A_940 = [[-3, 1, 0, 1], [1, -2, 1, 0], [0, 1, -1, 0], [1, 0, 0, -3]]
_B_940 = [[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]]
_A_940_M1 = [[-1, 1, 0, -1], [1, -2, 1, 0], [0, 1, -1, 0], [-1, 0, 0, -1]]
_A_940_M2 = [[-1, 1, 0, -1], [1, -2, 1, 0], [0, 1, -1, 0], [-1, 0, 0, 1]]

ENTRIES: dict[str, CorpusEntry] = {}


def _add(entry: CorpusEntry) -> None:
    ENTRIES[entry.name] = entry


_add(CorpusEntry(
    "6_1",
    _G("6_1", [[-3, 1], [1, -2]], [[2, 0], [0, 0]], 0),
    dict(sigma_plus=-2, sigma_minus=-2, e=0, sigma_tilde=0),
    "6_1 diagram with the type A/B/C move illustrations",
    printed_plus=[[-10, 2], [2, -4]],
    printed_minus=[[-2, 2], [2, -4]],
    stated=dict(sigma_tilde=-2),
    note="DISCREPANCY: the stated equivariant signature is -2, but both eigenspace "
         "forms are negative definite and e=0, so the definition gives 0",
))
_add(CorpusEntry(
    "5_1",
    _G("5_1", [[-2, 1], [1, -2]], [[1, 0], [0, 0]], 4),
    dict(sigma_plus=-2, sigma_minus=-2, e=4, sigma_tilde=-4),
    "5_1 diagram used for the tight type B and type C examples",
    printed_plus=[[-6, 2], [2, -4]],
    printed_minus=[[-2, 2], [2, -4]],
))
_add(CorpusEntry(
    "5_1-after-B",
    _G("5_1-after-B", [[0, 1], [1, -2]], [[-1, 0], [0, 0]], 4),
    dict(sigma_plus=0, sigma_minus=-2, e=4, sigma_tilde=-2),
    "5_1 after a directed type B move (a trefoil)",
    printed_plus=[[2, 2], [2, -4]],
    printed_minus=[[-2, 2], [2, -4]],
    derived_from=("5_1", "B k=1 sign=+1"),
))
_add(CorpusEntry(
    "5_1-after-C",
    _G("5_1-after-C", [[-2, 1, 0], [1, -2, 1], [0, 1, 0]],
       [[1, 0, 0], [0, 0, 0], [0, 0, 0]], 2),
    dict(sigma_plus=-1, sigma_minus=-1, e=2, sigma_tilde=-2),
    "5_1 after a positive bicolored type C move (right-handed trefoil)",
    printed_plus=[[-6, 2, 0], [2, -4, 2], [0, 2, 0]],
    printed_minus=[[-2, 2, 0], [2, -4, 2], [0, 2, 0]],
    derived_from=("5_1", "C sign=+1 color=bicolored"),
))
_add(CorpusEntry(
    "9_40",
    _G("9_40", _A_940, _B_940, -4),
    dict(sigma_plus=-2, sigma_minus=-4, e=-4, sigma_tilde=6),
    "admissible 9_40 diagram for the tight type A example",
    printed_plus=[[-8, 2, 0, 2], [2, -4, 2, 0], [0, 2, 0, 0], [2, 0, 0, -8]],
    printed_minus=[[-4, 2, 0, 2], [2, -4, 2, 0], [0, 2, -4, 0], [2, 0, 0, -4]],
))
_add(CorpusEntry(
    "9_40-after-A2",
    _G("9_40-after-A2", _A_940_M1, _B_940, 0),
    dict(sigma_plus=-2, sigma_minus=-2, e=0, sigma_tilde=0),
    "9_40 after one type A move (connected sum of a trefoil and its reverse)",
    printed_plus=[[-4, 2, 0, -2], [2, -4, 2, 0], [0, 2, 0, 0], [-2, 0, 0, -4]],
    printed_minus=[[0, 2, 0, -2], [2, -4, 2, 0], [0, 2, -4, 0], [-2, 0, 0, 0]],
    derived_from=("9_40", "A2 i=1 j=4 sign=+1 color=bicolored eps=+1"),
))
_add(CorpusEntry(
    "9_40-after-A2-A1",
    _G("9_40-after-A2-A1", _A_940_M2, _B_940, 0),
    dict(sigma_plus=0, sigma_minus=0, e=0, sigma_tilde=0),
    "9_40 after two type A moves (unknot)",
    printed_plus=[[-4, 2, 0, -2], [2, -4, 2, 0], [0, 2, 0, 0], [-2, 0, 0, 0]],
    printed_minus=[[0, 2, 0, -2], [2, -4, 2, 0], [0, 2, -4, 0], [-2, 0, 0, 4]],
    derived_from=("9_40-after-A2", "A1 k=4 sign=+1 color=unicolored"),
))
_add(CorpusEntry(
    "9_40-after-C",
    _G("9_40-after-C",
       [[-3, 1, 0, 1, 0], [1, -2, 1, 0, 0], [0, 1, -1, 0, 1], [1, 0, 0, -3, 1],
        [0, 0, 1, 1, -1]],
       [[1, 0, 0, 0, 0], [0, 0, 0, 0, 0], [0, 0, -1, 0, 0], [0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0]],
       -6),
    dict(sigma_plus=-3, sigma_minus=-3, e=-6, sigma_tilde=6),
    "9_40 after a positive bicolored type C move",
    printed_plus=[[-8, 2, 0, 2, 0], [2, -4, 2, 0, 0], [0, 2, 0, 0, 2], [2, 0, 0, -8, 2],
                  [0, 0, 2, 2, -2]],
    printed_minus=[[-4, 2, 0, 2, 0], [2, -4, 2, 0, 0], [0, 2, -4, 0, 2], [2, 0, 0, -4, 2],
                   [0, 0, 2, 2, -2]],
    derived_from=("9_40", "C sign=+1 color=bicolored"),
))


def names() -> list[str]:
    return list(ENTRIES)


def get(name: str) -> CorpusEntry:
    try:
        return ENTRIES[name]
    except KeyError:
        raise KeyError(f"no corpus entry {name!r}; known: {', '.join(ENTRIES)}") from None


# diagram reconstructions


def diagram_6_1() -> SymmetricDiagram:
    return SymmetricDiagram(2, (
        *off_axis_pair("x12", "a1", "a2", -1),
        on_axis("h1", "a1", "a1'", -1),
        on_axis("h2", "a1", "a1'", -1),
        *off_axis_pair("x2f", "a2", "fixed", -1),
    ), "6_1")


def diagram_5_1() -> SymmetricDiagram:
    return SymmetricDiagram(2, (
        *off_axis_pair("x12", "a1", "a2", -1, epsilon=-1),
        on_axis("h1", "a1", "a1'", -1),
        *off_axis_pair("x2f", "a2", "fixed", -1, epsilon=-1),
    ), "5_1")


def diagram_9_40() -> SymmetricDiagram:
    # pair indices: a=1, b=2, c=3, d=4
    return SymmetricDiagram(4, (
        *off_axis_pair("ab", "a1", "a2", -1),
        *off_axis_pair("ad", "a1", "a4", -1, epsilon=1),
        *off_axis_pair("bc", "a2", "a3", -1, epsilon=1),
        on_axis("ha", "a1", "a1'", -1),
        on_axis("hc", "a3", "a3'", 1),
        on_axis("hd", "a4", "a4'", -1),
        *off_axis_pair("cf", "a3", "fixed", -1),
        *off_axis_pair("df", "a4", "fixed", -1),
    ), "9_40")


DIAGRAMS: dict[str, Callable[[], SymmetricDiagram]] = {
    "6_1": diagram_6_1,
    "5_1": diagram_5_1,
    "9_40": diagram_9_40,
}

#: diagram-level counterparts of the derived matrix entries
DIAGRAM_MOVES: dict[str, tuple[str, list[DiagramMove]]] = {
    "5_1-after-B": ("5_1", [FlipB("h1")]),
    "5_1-after-C": ("5_1", [ContractC(1, "bicolored")]),
    "9_40-after-A2": ("9_40", [FlipA("ad")]),
    "9_40-after-A2-A1": ("9_40", [FlipA("ad"), FlipA("df")]),
    "9_40-after-C": ("9_40", [ContractC(1, "bicolored")]),
}
