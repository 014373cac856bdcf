"""Exact equivariant signatures of directed strongly invertible knots.

The public surface re-exported here covers the usual workflow: build an
:class:`EquivariantGoeritz` (directly or from a :class:`SymmetricDiagram`),
compute :func:`equivariant_signature`, apply moves with
:func:`apply_move_matrix` and check bounds with :func:`verify_sequence`.
"""

from .bounds import (
    BoundReport, LowerBounds, check_move_bound, delta_sigma, lower_bounds,
    rank_one_diagnostics, verify_sequence,
)
from .diagram import (
    Color, Crossing, DiagramError, Locus, Region, SymmetricDiagram, correction_term,
    goeritz, is_admissible, off_axis_pair, on_axis, validate,
)
from .documents import (
    Document, DocumentError, MoveScriptError, format_moves, parse_document, parse_moves,
    serialize,
)
from .goeritz import (
    EquivariantGoeritz, check_det_identity, full_matrix, minus_part, plus_part,
)
from .matrix import SymIntMatrix, det
from .moves import (
    ContractC, FlipA, FlipB, MoveError, TypeA1, TypeA2, TypeB, TypeC, apply_move_diagram,
    apply_move_matrix, move_projection, resolution_matrix,
)
from .signature import (
    Inertia, SigmaSeries, SingularFormError, equivariant_signature, inertia, sigma_series,
    signature_jones,
)

__version__ = "0.1.0"
